import random

import pytest

from triplyeven.constructions import (
    e8,
    padded_triangular_code,
    quotient_context,
    reed_muller_1,
)
from triplyeven.gf2 import repetition
from triplyeven.groups import MatrixGroup, gl_group
from triplyeven.symmetry import (
    SearchBudgetError,
    automorphism_group,
    canonical_form,
    double_coset_reps,
    gl_set_stabilizer,
    is_equivalent,
    set_isomorphism,
    set_stabilizer,
)
from triplyeven.verify import all_gl, symmetry_corpus


def shuffled(c, rng):
    p = list(range(c.length))
    rng.shuffle(p)
    return c.permute(tuple(p))


@pytest.mark.parametrize("idx", range(20))
def test_canonical_form_is_invariant(idx):
    c = symmetry_corpus()[idx]
    rng = random.Random(idx)
    ref = canonical_form(c).canonical_code
    for _ in range(10):
        assert canonical_form(shuffled(c, rng)).canonical_code == ref


def test_equivalence_witness(desd24):
    rng = random.Random(7)
    for c in desd24[:4]:
        d = shuffled(c, rng)
        w = is_equivalent(c, d)
        assert w is not None and d.permute(w) == c
    assert is_equivalent(desd24[1], desd24[2]) is None


@pytest.mark.parametrize(
    "make, order",
    [
        (e8, 1344),
        (lambda: reed_muller_1(4), 322560),
        (lambda: padded_triangular_code(10), 21772800),
    ],
)
def test_automorphism_orders(make, order):
    assert automorphism_group(make()).order() == order


def test_golay_automorphism_order(desd24):
    assert automorphism_group(desd24[0]).order() == 244823040


def test_e8_cubed_automorphism_order(desd24):
    assert automorphism_group(desd24[8]).order() == 1344**3 * 6


def brute_stabilizer(points, k):
    xs = set(points)
    return [g for g in all_gl(k) if {_apply(g, x) for x in xs} == xs]


def _apply(g, v):
    out, i = 0, 0
    while v:
        if v & 1:
            out ^= g[i]
        v >>= 1
        i += 1
    return out


@pytest.mark.parametrize("seed", range(12))
def test_set_stabilizer_order(seed):
    rng = random.Random(seed)
    k = rng.choice([2, 3])
    pts = rng.sample(range(1, 1 << k), rng.randint(1, (1 << k) - 2)) + [0]
    g, order = set_stabilizer(pts, k)
    assert order == len(brute_stabilizer(pts, k))
    assert g.order() == order


def test_set_isomorphism():
    x1, x2 = [0, 1, 2, 3], [0, 4, 2, 6]
    g = set_isomorphism(x1, x2, 3)
    assert g is not None and {_apply(g, x) for x in x1} == set(x2)
    assert set_isomorphism([0, 1, 2, 4], [0, 1, 2, 3], 3) is None


def test_g1_of_golay_quotient(desd24):
    ctx = quotient_context(desd24[0], repetition(24))
    g1 = gl_set_stabilizer(ctx)
    # M24 acts faithfully on the octad-dodecad quotient
    assert g1.order() == 244823040


@pytest.mark.parametrize("k", [2, 3])
def test_double_cosets_partition(k):
    g = gl_group(k)
    a = MatrixGroup(k, [g.gens[0]])
    b = MatrixGroup(k, [g.gens[-1]])
    reps = double_coset_reps(g, a, b)
    seen = set()
    total = 0
    elems_a = _closure(a, k)
    elems_b = _closure(b, k)
    for r in reps:
        dc = {_mul(_mul(x, r), y) for x in elems_a for y in elems_b}
        assert not dc & seen
        seen |= dc
        total += len(dc)
    assert total == g.order()


def _mul(g, h):
    return tuple(_apply(g, c) for c in h)


def _closure(grp, k):
    ident = tuple(1 << i for i in range(k))
    out = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for s in grp.gens:
                y = _mul(s, x)
                if y not in out:
                    out.add(y)
                    nxt.append(y)
        frontier = nxt
    return out


def test_double_coset_bound():
    g = gl_group(4)
    with pytest.raises(SearchBudgetError):
        double_coset_reps(g, MatrixGroup(4), MatrixGroup(4), bound=100)
