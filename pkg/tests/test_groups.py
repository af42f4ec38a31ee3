from itertools import permutations
from math import factorial

import pytest

from triplyeven.groups import (
    MatrixGroup,
    PermGroup,
    gl_group,
    gl_order,
    mat_identity,
    mat_inv,
    mat_mul,
    perm_inv,
    perm_mul,
)
from triplyeven.verify import all_gl


@pytest.mark.parametrize("n", [2, 3, 5, 8])
def test_symmetric_group_order(n):
    cycle = tuple(list(range(1, n)) + [0])
    swap = (1, 0) + tuple(range(2, n))
    assert PermGroup(n, [cycle, swap]).order() == factorial(n)


def test_membership():
    g = PermGroup(4, [(1, 2, 3, 0)])
    assert g.order() == 4
    assert (2, 3, 0, 1) in g
    assert (1, 0, 2, 3) not in g


def test_perm_inverse():
    for p in permutations(range(4)):
        assert perm_mul(p, perm_inv(p)) == (0, 1, 2, 3)


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_gl_order(k):
    assert gl_group(k).order() == gl_order(k)


def test_gl_order_values():
    assert [gl_order(k) for k in (1, 2, 3, 4)] == [1, 6, 168, 20160]


def test_mat_inv():
    for m in all_gl(3):
        assert mat_mul(m, mat_inv(m)) == mat_identity(3)


def test_matrix_subgroup():
    g = gl_group(3)
    h = MatrixGroup(3, [(0b010, 0b100, 0b001)])
    assert h.order() == 3
    assert h.is_subgroup_of(g)
    assert len(g.orbits_on_vectors()) == 1
