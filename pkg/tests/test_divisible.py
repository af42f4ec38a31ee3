import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from triplyeven.constructions import e8, padded_triangular_code
from triplyeven.divisible import (
    FormDomainError,
    PreconditionError,
    b_form,
    c_meet_Rad,
    exists_outside_Rad,
    is_doubly_even,
    is_maximal,
    is_maximal_doubly_even,
    is_triply_even,
    maximalize,
    maximalize_doubly_even,
    outside_vectors,
    q_form,
    rad_brute,
    radical_summary,
    star_dual,
    t_form,
)
from triplyeven.gf2 import LinearCode, direct_sum, dual, repetition, span_array
from triplyeven.symmetry import automorphism_group
from triplyeven.verify import random_doubly_even


def word_set(c):
    return {int(v) for v in span_array(c.rows)}


def test_forms_on_small_vectors():
    assert q_form(0xF) == 1 and q_form(0xFF) == 0
    assert b_form(0b1111, 0b0011) == 1
    assert t_form(0b111, 0b011, 0b001) == 1
    with pytest.raises(FormDomainError):
        q_form(0b111)
    with pytest.raises(FormDomainError):
        b_form(0b1111, 0b0001)


def test_divisibility_predicates(desd24):
    assert is_doubly_even(desd24[0]) and not is_triply_even(desd24[0])
    assert is_triply_even(padded_triangular_code(10))
    assert not is_doubly_even(LinearCode(4, [0b11]))


def test_radicals_of_two_blocks_are_not_linear():
    # <1_8> + <1_8>: both radicals stick out of the code and are not subspaces
    c = direct_sum(repetition(8), repetition(8))
    rad, Rad = rad_brute(c, ambient="dual")
    assert not rad <= word_set(c)
    assert any(a ^ b not in rad for a in rad for b in rad)
    assert exists_outside_Rad(c)
    assert not is_maximal(c)
    m = maximalize(c)
    assert is_triply_even(m) and is_maximal(m) and c <= m


def test_radical_summary_of_e8():
    s = radical_summary(e8())
    assert s.c_meet_rad == repetition(8)
    assert s.c_meet_Rad == repetition(8)
    assert s.contains_Rad


@pytest.mark.parametrize("seed", range(40))
def test_radical_summary_matches_brute_force(seed):
    rng = np.random.default_rng(seed)
    c = random_doubly_even(rng, int(rng.integers(8, 17)), int(rng.integers(1, 7)))
    s = radical_summary(c)
    rad, Rad = rad_brute(c, ambient="dual")
    cw = word_set(c)
    assert word_set(s.c_meet_rad) == rad & cw
    assert word_set(s.c_meet_Rad) == Rad & cw
    assert s.contains_Rad == (Rad <= cw)
    assert rad <= word_set(star_dual(c))


@pytest.mark.parametrize("seed", range(25))
def test_outside_scan_agrees_with_orbit_scan(seed):
    rng = np.random.default_rng(100 + seed)
    c = random_doubly_even(rng, 16, int(rng.integers(2, 7)))
    c = LinearCode(16, list(c.rows) + [(1 << 16) - 1])
    if not is_doubly_even(c):
        return
    aut = automorphism_group(c).gens
    assert exists_outside_Rad(c) == exists_outside_Rad(c, aut)
    _, Rad = rad_brute(c)
    assert exists_outside_Rad(c) == (not Rad <= word_set(c))


def test_outside_vectors_cover_orbits():
    c = LinearCode(16, list(e8().rows) + [0xFF00])
    reps = outside_vectors(c, automorphism_group(c).gens)
    assert reps and all(v not in c for v in reps)


def test_preconditions():
    with pytest.raises(PreconditionError):
        radical_summary(LinearCode(4, [0b11]))
    with pytest.raises(PreconditionError):
        is_maximal(e8())


@given(st.integers(0, 2**31))
@settings(max_examples=40, deadline=None)
def test_maximalize_output_is_maximal(seed):
    rng = np.random.default_rng(seed)
    rows = [int(v) for v in rng.choice([0xFF, 0xFF00, 0xF0F0, 0xFFFF, 0x0FF0, 0x3C3C], size=3)]
    c = LinearCode(16, rows)
    if not is_triply_even(c):
        return
    m = maximalize(c)
    assert c <= m and is_triply_even(m) and is_maximal(m)
    assert c_meet_Rad(m) == m or not is_maximal(m) or star_dual(m) >= m


def test_triply_even_code_is_inside_its_star_dual(desd24):
    c = padded_triangular_code(6)
    assert c <= star_dual(c)
    assert dual(c) >= star_dual(c)


def test_maximal_doubly_even():
    assert is_maximal_doubly_even(repetition(4))
    assert is_maximal_doubly_even(e8())
    assert not is_maximal_doubly_even(repetition(8))
    m = maximalize_doubly_even(repetition(8))
    assert m.dim == 4 and is_maximal_doubly_even(m)
    # length 12: dimension 5, one below half the length
    assert maximalize_doubly_even(LinearCode(12, [0xF, 0xF0])).dim == 5
