import json

import pytest
from conftest import codes
from hypothesis import given, settings
from hypothesis import strategies as st

from triplyeven.gf2 import (
    EnumerationCapError,
    LengthMismatchError,
    LinearCode,
    Solver,
    code_from_record,
    code_record,
    components,
    direct_sum,
    dual,
    emit_hex_rows,
    format_hex_rows,
    juxtapose_diag,
    kernel_rows,
    macwilliams,
    meet_code,
    pad,
    parse_hex_rows,
    puncture,
    rank,
    read_hex_text,
    repetition,
    rref,
    shorten,
    star,
    star_code,
    sum_code,
    weight,
    weight_enumerator,
    words,
)


def brute_words(c):
    out = {0}
    for r in c.rows:
        out |= {w ^ r for w in out}
    return out


def test_weight_and_star():
    assert weight(0b1011) == 3
    assert star(0b1100, 0b1010) == 0b1000


def test_rref_is_canonical():
    a = LinearCode(6, [0b110000, 0b011000, 0b000111])
    b = LinearCode(6, [0b101000, 0b011000, 0b000111, 0b110000])
    assert a == b
    assert rref(a.rows) == a.rows


@given(codes())
def test_dual_dimension_and_involution(c):
    d = dual(c)
    assert c.dim + d.dim == c.length
    assert dual(d) == c
    assert all((x & y).bit_count() % 2 == 0 for x in c.rows for y in d.rows)


@given(codes(max_length=10), st.data())
def test_sum_and_meet(c, data):
    d = data.draw(codes(min_length=c.length, max_length=c.length))
    s, m = sum_code(c, d), meet_code(c, d)
    assert s.dim + m.dim == c.dim + d.dim
    assert brute_words(m) == brute_words(c) & brute_words(d)


@given(codes(max_length=12))
def test_words_match_brute_force(c):
    assert {int(w) for w in words(c)} == brute_words(c)


@given(codes(max_length=12))
@settings(max_examples=60)
def test_macwilliams_gives_dual_enumerator(c):
    assert macwilliams(weight_enumerator(c), c.dim) == weight_enumerator(dual(c))


@given(st.lists(st.integers(1, (1 << 10) - 1), max_size=8))
def test_kernel_rows(rows):
    ker = kernel_rows(rows, 10)
    # kernel of the 10-column matrix with the given rows
    for v in ker:
        assert all((v & r).bit_count() % 2 == 0 for r in rows)
    assert len(ker) == 10 - rank(rows)


def test_solver_coords():
    s = Solver([0b011, 0b110])
    assert s.coords(0b101) == 0b11
    assert s.coords(0b001) is None
    assert s.combine(0b11) == 0b101
    with pytest.raises(ValueError):
        Solver([0b1, 0b1])


def test_direct_sum_and_juxtapose():
    c = repetition(4)
    assert direct_sum(c, c).rows == LinearCode(8, [0xF, 0xF0]).rows
    assert juxtapose_diag(c) == LinearCode(8, [0xFF])


def test_puncture_shorten_pad():
    c = LinearCode(4, [0b1111, 0b0011])
    assert puncture(c, [0]) == LinearCode(3, [0b111, 0b001])
    assert shorten(c, [0]) == LinearCode(3, [0b110])
    assert pad(c, 2).length == 6 and pad(c, 2).dim == 2


def test_star_code():
    c = LinearCode(4, [0b0011, 0b0110])
    assert star_code(c, c) == LinearCode(4, [0b0011, 0b0110, 0b0010])


def test_length_mismatch():
    with pytest.raises(LengthMismatchError):
        sum_code(repetition(3), repetition(4))


def test_enumeration_cap():
    with pytest.raises(EnumerationCapError):
        words(dual(repetition(30)), cap=24)


def test_golay_weight_enumerator(desd24):
    # the binary Golay code
    we = weight_enumerator(desd24[0]).nonzero()
    assert we == {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}


def test_hex_round_trip(desd24):
    c = desd24[3]
    assert parse_hex_rows(emit_hex_rows(c)) == c
    assert read_hex_text(format_hex_rows(c)) == c
    assert read_hex_text("# length 8\n0xF0, 0x0F") == LinearCode(8, [0xF0, 0x0F])
    with pytest.raises(ValueError):
        parse_hex_rows([1 << 24])


def test_json_record_round_trip(desd24):
    rec = json.loads(json.dumps(code_record(desd24[1])))
    assert code_from_record(rec) == desd24[1]
    rec["dim"] = 11
    with pytest.raises(ValueError):
        code_from_record(rec)


def test_components(desd24):
    assert [len(components(c)) for c in desd24] == [1, 1, 1, 1, 1, 1, 1, 2, 3]
    c = direct_sum(repetition(4), LinearCode(3, [0b011]))
    assert components(c) == [[0, 1, 2, 3], [4, 5]]
