from math import comb

import pytest

from triplyeven.constructions import (
    Isometry,
    d16_plus,
    e8,
    extended_doubling,
    generalized_doubling,
    identity_isometry,
    isometry_from_check_equiv,
    padded_triangular_code,
    pair_code,
    quotient_context,
    reed_muller_1,
    split_by_codeword,
    triangular_basis,
    triangular_code,
)
from triplyeven.divisible import (
    PreconditionError,
    is_doubly_even,
    is_maximal,
    is_triply_even,
)
from triplyeven.gf2 import LinearCode, dual, repetition, star_code, weight_enumerator
from triplyeven.groups import perm_inv
from triplyeven.symmetry import is_equivalent


def test_e8_is_the_extended_hamming_code():
    c = e8()
    assert c.length == 8 and c.dim == 4
    assert weight_enumerator(c).nonzero() == {0: 1, 4: 14, 8: 1}
    assert dual(c) == c
    assert is_equivalent(c, reed_muller_1(3)) is not None


def test_reed_muller_and_d16():
    assert reed_muller_1(4).dim == 5
    assert is_triply_even(reed_muller_1(4))
    d = d16_plus()
    assert d.length == 16 and d.dim == 8 and dual(d) == d and is_doubly_even(d)


def test_doublings_of_golay(desd24):
    g = desd24[0]
    t = generalized_doubling(g)
    assert t.length == 48 and t.dim == 13 and is_triply_even(t)
    x = extended_doubling(g)
    assert x.length == 48 and is_triply_even(x)
    assert x <= t or x.dim <= t.dim


@pytest.mark.parametrize("n", [4, 6, 8, 10])
def test_triangular_code(n):
    t = triangular_code(n)
    assert t.length == n * (n - 1) // 2
    assert t.dim == n - 2
    expected = {0: 1}
    # a cut and its complement give the same word
    for l in range(1, (n - 1) // 4 + 1):
        expected[2 * l * (n - 2 * l)] = comb(n, 2 * l)
    if n % 4 == 0:
        expected[n * n // 4] = comb(n, n // 2) // 2
    assert weight_enumerator(t).nonzero() == expected


def test_triangular_basis_and_star():
    assert LinearCode(15, triangular_basis(6)) == triangular_code(6)
    assert star_code(triangular_code(6), triangular_code(6)).dim == 10
    assert star_code(triangular_code(10), triangular_code(10)).dim == 36
    with pytest.raises(ValueError):
        triangular_basis(7)


def test_padded_triangular_codes():
    t10 = padded_triangular_code(10)
    assert t10.length == 48 and t10.dim == 9
    assert is_maximal(t10)
    assert is_equivalent(padded_triangular_code(6), generalized_doubling(e8())) is not None


def test_quotient_context_of_golay_doubling(desd24):
    ctx = quotient_context(desd24[0], repetition(24))
    assert ctx.quotient_dim == 11
    assert ctx.singular[0] == 0
    for q in ctx.singular:
        assert ctx.lift(q).bit_count() % 8 == 0
    assert all(ctx.project(ctx.lift(q)) == q for q in range(0, 1 << 11, 97))
    with pytest.raises(PreconditionError):
        quotient_context(repetition(24), desd24[0])


def test_identity_pair_code_is_generalized_doubling(desd24):
    c = desd24[4]
    ctx = quotient_context(c)
    d = pair_code(ctx, ctx, identity_isometry(ctx))
    assert d == generalized_doubling(c)


def test_split_inverts_pair_code(desd24):
    c = desd24[0]
    ctx = quotient_context(c, repetition(24))
    d = pair_code(ctx, ctx, identity_isometry(ctx))
    x = (1 << 24) - 1
    ctx1, ctx2, f, order = split_by_codeword(d, x)
    glued = pair_code(ctx1, ctx2, f)
    assert d.permute(perm_inv(order)) == glued or is_equivalent(d, glued) is not None
    assert ctx1.code == c and ctx2.code == c


def test_isometry_checks(desd24):
    ctx = quotient_context(desd24[0], repetition(24))
    ident = tuple(range(len(ctx.singular)))
    f = isometry_from_check_equiv(ctx, ctx, ident)
    assert f.matrix == identity_isometry(ctx).matrix
    bad = Isometry(ctx, ctx, (0,) * ctx.quotient_dim)
    with pytest.raises(ValueError):
        bad.check()
