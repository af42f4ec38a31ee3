"""Acceptance criteria T1-T7, one test per criterion.

Each test records a one-line verdict; the lines are printed together in the
terminal summary.  The enumeration tiers share one checkpointed runner, so the
T5 run reuses the parts database built for T4.
"""

import pytest

from triplyeven.pipeline import CheckpointStore, Runner
from triplyeven.verify import run_suite

VERDICTS = {}


@pytest.fixture(scope="session")
def runner(tmp_path_factory):
    ck = CheckpointStore(tmp_path_factory.mktemp("acceptance") / "checkpoint.ndjson")
    with Runner(checkpoint=ck) as r:
        yield r


def record(criterion, results):
    ok = all(r.ok for r in results)
    checks = sum(len(r.checks) for r in results)
    passed = sum(c.ok for r in results for c in r.checks)
    seconds = sum(r.seconds for r in results)
    names = "+".join(r.suite for r in results)
    VERDICTS[criterion] = f"{criterion} {names}: {'PASS' if ok else 'FAIL'} ({passed}/{checks} checks, {seconds:.1f}s)"
    detail = "\n".join(r.summary() for r in results)
    print(detail)
    assert ok, detail


def test_T1_forms_and_radicals():
    record("T1", [run_suite("forms"), run_suite("radicals")])


def test_T2_constructions():
    record("T2", [run_suite("constructions")])


def test_T3_symmetry_small():
    record("T3", [run_suite("symmetry-small")])


@pytest.mark.slow
def test_T4_table1(runner):
    record("T4", [run_suite("table1", runner)])


@pytest.mark.slow
def test_T5_classify48(runner):
    record("T5", [run_suite("classify48", runner)])


@pytest.mark.slow
def test_T6_table2(runner):
    record("T6", [run_suite("table2", runner)])


def test_T7_proof_devices():
    record("T7", [run_suite("proof-devices")])
