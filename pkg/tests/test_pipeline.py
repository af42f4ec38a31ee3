
import pytest

from triplyeven.constructions import e8, padded_triangular_code
from triplyeven.divisible import c_meet_Rad
from triplyeven.gf2 import repetition
from triplyeven.pipeline import (
    BudgetExceeded,
    CheckpointError,
    CheckpointStore,
    ClassificationReport,
    Runner,
    _canon_unit,
    dedup_max_prd,
    doubling_forms,
    doubly_even_halves,
    make_entry,
    meet_perp,
    prune_spot_check,
    representatives48,
    subcode_step,
    table2,
)
from triplyeven.symmetry import automorphism_group


def test_checkpoint_round_trip(tmp_path):
    ck = CheckpointStore(tmp_path / "ck.ndjson")
    ck.store("level", 1, [{"rows": ["ff"]}])
    ck.store("level", 2, [])
    assert CheckpointStore(tmp_path / "ck.ndjson").load_kind("level") == {1: [{"rows": ["ff"]}], 2: []}


def test_checkpoint_rejects_corruption(tmp_path):
    path = tmp_path / "ck.ndjson"
    CheckpointStore(path).store("level", 1, [1, 2, 3])
    path.write_text(path.read_text().replace("[1,2,3]", "[1,2,4]"))
    with pytest.raises(CheckpointError):
        CheckpointStore(path).load_kind("level")


def test_report_json_round_trip():
    rep = ClassificationReport([9, 42], {12: (1, 2)}, (30, 214, 1268), (125, 225, 5), [{"label": "x", "dim": 9}], ["n"], (3, 3))
    back = ClassificationReport.from_json(rep.to_json())
    assert back == rep
    assert any("level counts" in f for f in back.failures())


def test_subcode_step_on_e8():
    c = e8()
    subs = subcode_step(c, repetition(8), automorphism_group(c).gens)
    # Aut(e8) is transitive on the seven hyperplanes through the all-ones word
    assert len(subs) == 1
    assert subs[0].dim == 3 and repetition(8) <= subs[0]


def test_meet_perp():
    c = e8()
    x = 0b11
    m = meet_perp(c, x)
    assert m.dim == 3 and all((r & x).bit_count() % 2 == 0 for r in m.rows)


def test_dedup_keeps_largest_prd():
    c = e8()
    d = c.permute((1, 0, 2, 3, 4, 5, 6, 7))
    items = [(c, 0), (d, 2), (repetition(8), 1)]
    forms = [_canon_unit((x.length, x.rows)) for x, _ in items]
    out = dedup_max_prd(items, forms)
    assert [(x.dim, p) for x, p, _ in out] == [(4, 2), (1, 1)]


def test_runner_budget():
    with Runner(budget_seconds=0) as r, pytest.raises(BudgetExceeded):
        r.map(abs, [1, 2, 3], "test")


def test_runner_jobs_are_deterministic():
    items = [(c.length, c.rows) for c in representatives48()[:4]]
    with Runner(jobs=1) as r1, Runner(jobs=2) as r2:
        a = [x[:2] for x in r1.map(_canon_unit, items, "canon")]
        b = [x[:2] for x in r2.map(_canon_unit, items, "canon")]
    assert a == b


def test_prune_spot_check(desd24):
    g = desd24[0]
    subs = subcode_step(g, repetition(24), automorphism_group(g).gens)
    entries = [make_entry(c, c_meet_Rad(c).dim) for c in subs]
    assert prune_spot_check(entries, count=3) == (len(entries), len(entries))
    # doublings of the top-level codes are maximal, so the check notices them
    top = [make_entry(c, c_meet_Rad(c).dim) for c in desd24[:2]]
    assert prune_spot_check(top) == (0, 2)


def test_table2_histogram():
    chain = {8: [repetition(8)], 16: [e8(), e8()]}
    assert table2(chain, (8, 16, 24)) == {8: {1: 1}, 16: {4: 2}, 24: {}}


def test_doubling_forms_at_length_16():
    halves = doubly_even_halves(stop=8)
    assert [c.dim for c in halves[8]] == [4]
    chain = {16: [padded_triangular_code(6)], 8: [repetition(8)]}
    forms = doubling_forms(chain, halves, (8, 16))
    assert forms[16][0] is not None and forms[16][0].dim == 4
    # the halves start at length 8 here, so nothing of length 4 is available
    assert forms[8] == [None]
