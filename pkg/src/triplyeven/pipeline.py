"""The length-48 classification and the shortening chain below it.

Stages:

1. ``build_parts_db``: doubly even codes of length 24 with ``Rad C`` inside
   ``C``, found by descending through codimension-1 subcodes of the nine
   self-dual codes.
2. ``duplex_classify``: pair codes ``D(C, C, R, R, g)`` over double cosets of
   ``G0 \\ G1 / G0``.
3. ``hybrid_classify``: pair codes for inequivalent ``C1, C2`` whose quotients
   are isometric.
4. ``classify48``: identify every maximal output with one of ten known codes.

Work units are pure functions of plain data so they can run in a process
pool; results are always merged in input order.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import random
import time
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .constructions import (
    QuotientContext,
    generalized_doubling,
    padded_triangular_code,
    pair_code,
    quotient_context,
)
from .data import DESD24_NAMES, load_desd24
from .divisible import (
    c_meet_Rad,
    complement_basis,
    exists_outside_Rad,
    is_maximal,
    is_triply_even,
    maximalize,
    maximalize_doubly_even,
)
from .gf2 import (
    LinearCode,
    Solver,
    apply_perm,
    components,
    direct_sum,
    dual,
    shorten,
    weight_enumerator,
)
from .groups import MatrixGroup, mat_mul
from .symmetry import (
    CanonicalForm,
    PointCode,
    canonical_form,
    double_coset_reps,
    g0_group,
    is_equivalent,
    orbits_of,
    set_isomorphism,
    set_stabilizer,
)

log = logging.getLogger(__name__)

EXPECTED_LEVELS = (9, 42, 160, 377, 437, 220, 36, 1, 0)
EXPECTED_TABLE1 = {
    12: (7, 1, 1, 0, 0, 0),
    11: (33, 6, 3, 0, 0, 0),
    10: (130, 19, 10, 1, 0, 0),
    9: (308, 40, 23, 5, 0, 1),
    8: (363, 37, 25, 10, 1, 1),
    7: (180, 16, 10, 11, 2, 1),
    6: (27, 2, 0, 4, 2, 1),
    5: (0, 0, 0, 0, 1, 0),
}
EXPECTED_DUPLEX = (30, 214, 1268)
EXPECTED_HYBRID = (125, 225, 5)
EXPECTED_DIMS48 = (9, 13, 13, 13, 13, 13, 13, 13, 14, 15)
EXPECTED_TABLE2 = {
    8: {1: 1},
    16: {5: 1},
    24: {5: 1, 6: 1},
    32: {9: 1, 10: 1},
    40: {9: 7, 10: 2, 11: 1},
}
#: Maximal doubly even classes by length, the halves of the doublings above.
EXPECTED_HALVES = {4: 1, 8: 1, 12: 2, 16: 2, 20: 10}
#: (length, number of indecomposable components) of those halves, with counts.
EXPECTED_COMPONENTS = {(4, 1): 1, (8, 1): 1, (12, 1): 1, (12, 2): 1, (16, 1): 1, (16, 2): 1,
                       (20, 1): 7, (20, 2): 2, (20, 3): 1}
PROSE_NOTE = "narrative count of possibly maximal duplex codes is 216; the enforced tuple is (30, 214, 1268)"


class BudgetExceeded(RuntimeError):
    """Wall-clock budget for a pipeline run was exhausted."""


class IdentificationError(RuntimeError):
    """A maximal code matched none of the known representatives."""


class CheckpointError(ValueError):
    """A checkpoint record failed its checksum or could not be parsed."""


# ---------------------------------------------------------------------------
# run control


class Runner:
    """Maps work units over an optional process pool and enforces a deadline."""

    def __init__(self, jobs: int = 1, budget_seconds: float | None = None, checkpoint: CheckpointStore | None = None):
        self.jobs = max(1, int(jobs))
        self.deadline = None if budget_seconds is None else time.monotonic() + budget_seconds
        self.checkpoint = checkpoint
        self._pool: ProcessPoolExecutor | None = None

    def check_budget(self, stage: str) -> None:
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetExceeded(f"budget exhausted during {stage}")

    def map(self, fn: Callable, items: Sequence, stage: str) -> list:
        self.check_budget(stage)
        if self.jobs == 1 or len(items) < 2:
            out = []
            for it in items:
                out.append(fn(it))
                self.check_budget(stage)
            return out
        if self._pool is None:
            self._pool = ProcessPoolExecutor(max_workers=self.jobs)
        out = []
        chunk = max(1, len(items) // (self.jobs * 8))
        for res in self._pool.map(fn, items, chunksize=chunk):
            out.append(res)
            self.check_budget(stage)
        return out

    def close(self) -> None:
        if self._pool is not None:
            self._pool.shutdown(cancel_futures=True)
            self._pool = None

    def __enter__(self) -> Runner:
        return self

    def __exit__(self, *exc) -> None:
        self.close()


# ---------------------------------------------------------------------------
# parts database


@dataclass
class PartsEntry:
    code: LinearCode
    prd: int
    radical: LinearCode
    canonical: CanonicalForm
    invariant_key: tuple
    _ctx: QuotientContext | None = field(default=None, repr=False)
    _g0: MatrixGroup | None = field(default=None, repr=False)
    _g1: MatrixGroup | None = field(default=None, repr=False)
    _points: PointCode | None = field(default=None, repr=False)

    @property
    def ctx(self) -> QuotientContext:
        if self._ctx is None:
            self._ctx = quotient_context(self.code, self.radical, self.prd)
        return self._ctx

    @property
    def g0(self) -> MatrixGroup:
        if self._g0 is None:
            self._g0 = g0_group(self.ctx)
        return self._g0

    @property
    def g1(self) -> MatrixGroup:
        if self._g1 is None:
            self._g1 = set_stabilizer(self.ctx.singular, self.ctx.quotient_dim)[0]
        return self._g1

    @property
    def points(self) -> PointCode:
        if self._points is None:
            self._points = PointCode(self.ctx.singular, self.ctx.quotient_dim)
        return self._points

    @property
    def dim(self) -> int:
        return self.code.dim

    @property
    def rad_dim(self) -> int:
        return self.radical.dim

    def record(self) -> dict:
        return {"length": self.code.length, "rows": [f"{r:x}" for r in self.code.rows], "prd": self.prd}


def make_entry(code: LinearCode, prd: int, canon: CanonicalForm | None = None) -> PartsEntry:
    canon = canon or canonical_form(code)
    key = (code.dim, tuple(weight_enumerator(code).coeffs), canon.aut_group().order())
    return PartsEntry(code, prd, c_meet_Rad(code), canon, key)


def entry_from_record(rec: dict) -> PartsEntry:
    return make_entry(LinearCode(rec["length"], (int(r, 16) for r in rec["rows"])), rec["prd"])


def subcode_step(code: LinearCode, radical: LinearCode, aut_gens: Sequence[Sequence[int]]) -> list[LinearCode]:
    """Codimension-1 subcodes of ``code`` containing ``radical``, one per orbit of ``aut_gens``.

    A subcode is ``code`` meet ``x^perp`` for a nonzero coset ``x`` of
    ``dual(code)`` in ``dual(radical)``; orbits are taken on those cosets and
    represented by the smallest coset index.
    """
    if code.dim <= radical.dim:
        return []
    dc, dr = dual(code), dual(radical)
    comp = complement_basis(dr, dc)
    m = len(comp)
    solver = Solver(list(dc.rows) + comp)
    shift = dc.dim

    def rep(idx: int) -> int:
        v = 0
        for i in range(m):
            if idx >> i & 1:
                v ^= comp[i]
        return v

    def act(g, idx):
        return solver.coords(apply_perm(rep(idx), g)) >> shift

    gens = [tuple(g) for g in aut_gens]
    orbs = orbits_of(gens, range(1, 1 << m), act)
    return [meet_perp(code, rep(o[0])) for o in orbs]


def meet_perp(c: LinearCode, x: int) -> LinearCode:
    """``c`` meet ``x^perp``."""
    rows = list(c.rows)
    odd = [r for r in rows if (r & x).bit_count() & 1]
    if not odd:
        return c
    pivot = odd[0]
    return LinearCode(c.length, [r ^ pivot if (r & x).bit_count() & 1 else r for r in rows if r != pivot])


def _subcode_unit(args) -> list[tuple[int, tuple[int, ...]]]:
    n, rows, rad_rows, gens = args
    code = LinearCode(n, rows)
    rad = LinearCode(n, rad_rows)
    return [(n, s.rows) for s in subcode_step(code, rad, gens)]


def _canon_unit(args):
    n, rows = args
    code = LinearCode(n, rows)
    cf = canonical_form(code)
    key = (code.dim, tuple(weight_enumerator(code).coeffs), cf.aut_group().order())
    return key, cf.canonical_code.rows, cf


def _outside_unit(args) -> bool:
    n, rows, gens = args
    return exists_outside_Rad(LinearCode(n, rows), gens)


def dedup_max_prd(items: Sequence[tuple[LinearCode, int]], canon: Sequence) -> list[tuple[LinearCode, int, CanonicalForm]]:
    """First representative of each equivalence class, carrying the largest prd seen."""
    index: dict[tuple, int] = {}
    out: list[list] = []
    for (code, prd), (key, crow, cf) in zip(items, canon):
        full = key + (crow,)
        if full in index:
            slot = out[index[full]]
            slot[1] = max(slot[1], prd)
        else:
            index[full] = len(out)
            out.append([code, prd, cf])
    return [tuple(x) for x in out]


def build_parts_db(runner: Runner | None = None, progress: Callable[[str], None] | None = None) -> list[list[PartsEntry]]:
    """All levels of the descent, from dimension 12 down to the first empty level."""
    runner = runner or Runner()
    say = progress or (lambda msg: log.info(msg))
    ck = runner.checkpoint
    levels: list[list[PartsEntry]] = []
    cached = ck.load_kind("parts_level") if ck else {}
    if 0 in cached:
        top = [entry_from_record(r) for r in cached[0]]
    else:
        top = [make_entry(c, 0) for c in load_desd24()]
        if ck:
            ck.store("parts_level", 0, [e.record() for e in top])
    levels.append(top)
    say(f"dim 12: {len(top)} codes")
    for i in range(1, 10):
        d = 12 - i
        prev = levels[-1]
        if i in cached:
            level = [entry_from_record(r) for r in cached[i]]
        else:
            units = [(e.code.length, e.code.rows, e.radical.rows, e.canonical.aut_generators) for e in prev]
            subs = runner.map(_subcode_unit, units, f"subcodes of dim {d}")
            items = []
            for e, lst in zip(prev, subs):
                for n, rows in lst:
                    items.append((LinearCode(n, rows), e.rad_dim))
            canon = runner.map(_canon_unit, [(c.length, c.rows) for c, _ in items], f"canonical forms dim {d}")
            reps = dedup_max_prd(items, canon)
            outside = runner.map(
                _outside_unit, [(c.length, c.rows, cf.aut_generators) for c, _, cf in reps], f"radical test dim {d}"
            )
            level = [make_entry(c, prd, cf) for (c, prd, cf), bad in zip(reps, outside) if not bad]
            if ck:
                ck.store("parts_level", i, [e.record() for e in level])
        levels.append(level)
        say(f"dim {d}: {len(level)} codes")
        if not level:
            break
    return levels


def flatten(levels: Sequence[Sequence[PartsEntry]]) -> list[PartsEntry]:
    return [e for lvl in levels for e in lvl]


def table1(db: Iterable[PartsEntry]) -> dict[int, tuple[int, ...]]:
    counts = {d: [0] * 6 for d in range(12, 4, -1)}
    for e in db:
        if e.dim in counts and 1 <= e.rad_dim <= 6:
            counts[e.dim][e.rad_dim - 1] += 1
    return {d: tuple(v) for d, v in counts.items()}


def format_table1(t: dict[int, tuple[int, ...]]) -> str:
    lines = ["dim C \\ dim Rad C |    1    2    3    4    5    6", "-" * 50]
    for d in sorted(t, reverse=True):
        lines.append(f"{d:>17} | " + " ".join(f"{x:>4}" for x in t[d]))
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# pair constructions


@dataclass
class PairOutcome:
    constructed: int
    excluded: int
    maximal: list[LinearCode]


def _duplex_unit(rec: dict) -> dict:
    e = entry_from_record(rec)
    return _duplex_entry(e)


def _duplex_entry(e: PartsEntry) -> dict:
    ctx = e.ctx
    k = ctx.quotient_dim
    excluded = 0
    if k == 0:
        if e.rad_dim == e.prd:
            return {"constructed": 0, "excluded": 1, "maximal": []}
        codes = [direct_sum(e.radical, e.radical)]
    else:
        g0, g1 = e.g0, e.g1
        if g0.order() == g1.order():
            reps = [g1.identity]
        else:
            reps = double_coset_reps(g1, g0, g0, check=False)
        if e.rad_dim == e.prd:
            reps = reps[1:]
            excluded = 1
        codes = [pair_code(ctx, ctx, g) for g in reps]
    return _outcome(codes, excluded)


def _outcome(codes: Sequence[LinearCode], excluded: int) -> dict:
    maximal = []
    for c in codes:
        if not is_triply_even(c):
            raise AssertionError("pair construction produced a code that is not triply even")
        if is_maximal(c):
            maximal.append({"length": c.length, "rows": [f"{r:x}" for r in c.rows]})
    return {"constructed": len(codes), "excluded": excluded, "maximal": maximal}


def _code_of(rec: dict) -> LinearCode:
    return LinearCode(rec["length"], (int(r, 16) for r in rec["rows"]))


def duplex_classify(db: Sequence[PartsEntry], runner: Runner | None = None) -> tuple[list[LinearCode], int, int]:
    runner = runner or Runner()
    ck = runner.checkpoint
    done = ck.load_kind("duplex") if ck else {}
    todo = [i for i in range(len(db)) if i not in done]
    res = runner.map(_duplex_unit, [db[i].record() for i in todo], "duplex")
    results = dict(done)
    for i, r in zip(todo, res):
        results[i] = r
        if ck:
            ck.store("duplex", i, r)
    maximal, constructed, excluded = [], 0, 0
    for i in range(len(db)):
        r = results[i]
        constructed += r["constructed"]
        excluded += r["excluded"]
        maximal.extend(_code_of(m) for m in r["maximal"])
    return maximal, constructed, excluded


def isometric_pairs(db: Sequence[PartsEntry], runner: Runner | None = None) -> list[tuple[int, int]]:
    """Index pairs ``i < j`` whose quotients carry isometric singular sets."""
    runner = runner or Runner()
    units = [(e.ctx.singular, e.ctx.quotient_dim) for e in db]
    certs = runner.map(_point_cert_unit, units, "check-code canonical forms")
    pairs = []
    for i in range(len(db)):
        for j in range(i + 1, len(db)):
            if certs[i] == certs[j]:
                pairs.append((i, j))
    return pairs


def _point_cert_unit(args) -> tuple:
    points, k = args
    pc = PointCode(points, k)
    return (k, len(pc.points), pc.u, pc.canonical.canonical_code.rows)


def _hybrid_unit(args) -> dict:
    r1, r2 = args
    e1, e2 = entry_from_record(r1), entry_from_record(r2)
    c1, c2 = e1.ctx, e2.ctx
    k = c1.quotient_dim
    if k == 0:
        return _outcome([direct_sum(e1.radical, e2.radical)], 0)
    f = set_isomorphism(e1.points, e2.points)
    if f is None:
        raise AssertionError("paired entries have no isometry")
    a = e2.g0.conjugate(f)
    reps = double_coset_reps(e1.g1, a, e1.g0, check=False)
    codes = [pair_code(c1, c2, mat_mul(f, g)) for g in reps]
    return _outcome(codes, 0)


def hybrid_classify(db: Sequence[PartsEntry], runner: Runner | None = None) -> tuple[list[LinearCode], int, int]:
    """Returns (maximal codes, number of isometric pairs, number constructed)."""
    runner = runner or Runner()
    ck = runner.checkpoint
    cached = ck.load_kind("hybrid_pairs") if ck else {}
    if 0 in cached:
        pairs = [tuple(p) for p in cached[0]]
    else:
        pairs = isometric_pairs(db, runner)
        if ck:
            ck.store("hybrid_pairs", 0, [list(p) for p in pairs])
    done = ck.load_kind("hybrid") if ck else {}
    todo = [t for t in range(len(pairs)) if t not in done]
    res = runner.map(_hybrid_unit, [(db[pairs[t][0]].record(), db[pairs[t][1]].record()) for t in todo], "hybrid")
    results = dict(done)
    for t, r in zip(todo, res):
        results[t] = r
        if ck:
            ck.store("hybrid", t, r)
    maximal, constructed = [], 0
    for t in range(len(pairs)):
        constructed += results[t]["constructed"]
        maximal.extend(_code_of(m) for m in results[t]["maximal"])
    return maximal, len(pairs), constructed


# ---------------------------------------------------------------------------
# identification


REPRESENTATIVE_LABELS = tuple(f"tildeD({name})" for name in DESD24_NAMES) + ("ttgc(10)",)


def representatives48() -> list[LinearCode]:
    return [generalized_doubling(c) for c in load_desd24()] + [padded_triangular_code(10)]


@dataclass
class Identified:
    label: str
    code: LinearCode
    witness: tuple[int, ...] | None = None


@dataclass
class ClassificationReport:
    levels: list[int]
    parts_table: dict[int, tuple[int, ...]]
    duplex_counts: tuple[int, int, int]
    hybrid_counts: tuple[int, int, int]
    classes: list[dict]
    notes: list[str]
    prune_check: tuple[int, int] = (0, 0)

    def to_json(self) -> str:
        return json.dumps(
            {
                "levels": self.levels,
                "parts_table": {str(k): list(v) for k, v in sorted(self.parts_table.items(), reverse=True)},
                "duplex_counts": list(self.duplex_counts),
                "hybrid_counts": list(self.hybrid_counts),
                "classes": self.classes,
                "notes": self.notes,
                "prune_check": list(self.prune_check),
            },
            indent=2,
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> ClassificationReport:
        d = json.loads(text)
        return cls(
            d["levels"],
            {int(k): tuple(v) for k, v in d["parts_table"].items()},
            tuple(d["duplex_counts"]),
            tuple(d["hybrid_counts"]),
            d["classes"],
            d["notes"],
            tuple(d.get("prune_check", (0, 0))),
        )

    def failures(self) -> list[str]:
        out = []
        if tuple(self.levels) != EXPECTED_LEVELS:
            out.append(f"level counts {self.levels} != {list(EXPECTED_LEVELS)}")
        if self.parts_table != EXPECTED_TABLE1:
            out.append("parts table differs from the expected table")
        if self.duplex_counts != EXPECTED_DUPLEX:
            out.append(f"duplex counts {self.duplex_counts} != {EXPECTED_DUPLEX}")
        if self.hybrid_counts != EXPECTED_HYBRID:
            out.append(f"hybrid counts {self.hybrid_counts} != {EXPECTED_HYBRID}")
        dims = tuple(sorted(c["dim"] for c in self.classes))
        if dims != EXPECTED_DIMS48:
            out.append(f"class dimensions {dims} != {EXPECTED_DIMS48}")
        nonmax, checked = self.prune_check
        if nonmax != checked:
            out.append(f"prune spot-check: only {nonmax} of {checked} skipped codes are non-maximal")
        return out


def prune_spot_check(db: Sequence[PartsEntry], count: int = 20, seed: int = 0) -> tuple[int, int]:
    """Check that skipped identity cosets give non-maximal codes on a random sample.

    Returns (non-maximal, checked).
    """
    pruned = [e for e in db if e.rad_dim == e.prd]
    rng = random.Random(seed)
    sample = rng.sample(pruned, min(count, len(pruned)))
    nonmax = 0
    for e in sample:
        c = pair_code(e.ctx, e.ctx, tuple(1 << i for i in range(e.ctx.quotient_dim)))
        if c != generalized_doubling(e.code):
            raise AssertionError("identity coset differs from the generalized doubling")
        if not is_maximal(c):
            nonmax += 1
    return nonmax, len(sample)


def identify(codes: Sequence[LinearCode], reps: Sequence[LinearCode], labels: Sequence[str]) -> list[Identified]:
    """Match each code with a representative; raise if any code matches none."""
    rep_forms = [canonical_form(r).canonical_code for r in reps]
    if len(set(rep_forms)) != len(rep_forms):
        raise IdentificationError("representatives are not pairwise inequivalent")
    out = []
    for c in codes:
        cf = canonical_form(c).canonical_code
        for r, form, label in zip(reps, rep_forms, labels):
            if r.dim == c.dim and form == cf:
                w = is_equivalent(c, r)
                if w is None:
                    raise AssertionError("canonical forms agree but no witness was found")
                out.append(Identified(label, c, w))
                break
        else:
            raise IdentificationError(f"unidentified maximal code of dimension {c.dim}")
    return out


def classify48(runner: Runner | None = None, progress: Callable[[str], None] | None = None) -> ClassificationReport:
    runner = runner or Runner()
    say = progress or (lambda msg: log.info(msg))
    levels = build_parts_db(runner, say)
    db = flatten(levels)
    counts = [len(lv) for lv in levels]
    counts += [0] * (len(EXPECTED_LEVELS) - len(counts))
    say(f"parts database: {len(db)} codes")
    dmax, dcon, dexc = duplex_classify(db, runner)
    say(f"duplex: {len(dmax)} maximal, {dcon} constructed, {dexc} excluded")
    hmax, hpairs, hcon = hybrid_classify(db, runner)
    say(f"hybrid: {hpairs} pairs, {hcon} constructed, {len(hmax)} maximal")
    prune = prune_spot_check(db)
    say(f"prune spot-check: {prune[0]} of {prune[1]} skipped codes are non-maximal")
    reps = representatives48()
    found = identify(dmax + hmax, reps, REPRESENTATIVE_LABELS)
    seen: dict[str, Identified] = {}
    for f in found:
        seen.setdefault(f.label, f)
    classes = []
    for label, rep in zip(REPRESENTATIVE_LABELS, reps):
        if label in seen:
            classes.append({"label": label, "dim": rep.dim, "rows": [f"{r:x}" for r in rep.rows]})
    return ClassificationReport(
        counts[: len(EXPECTED_LEVELS)],
        table1(db),
        (len(dmax), dcon, dexc),
        (hpairs, hcon, len(hmax)),
        classes,
        [PROSE_NOTE],
        prune,
    )


# ---------------------------------------------------------------------------
# shortening


def _shorten_unit(args) -> list[tuple[int, tuple[int, ...]]]:
    n, rows, gens, doubly = args
    c = LinearCode(n, rows)
    grow = maximalize_doubly_even if doubly else maximalize
    out = []
    for orb in orbits_of([tuple(g) for g in gens], range(n), lambda g, p: g[p]):
        s = grow(shorten(c, [orb[0]]))
        out.append((s.length, s.rows))
    return out


def shorten_chain(maximal48: Sequence[LinearCode], stop: int = 8, runner: Runner | None = None,
                  progress: Callable[[str], None] | None = None, doubly: bool = False) -> dict[int, list[LinearCode]]:
    """Classes of maximal triply even codes for each length below the input length, down to ``stop``.

    Every maximal code of length ``n`` is a shortened code of a maximal code of
    length ``n + 1``; shortening on one coordinate per automorphism orbit and
    maximalizing gives a candidate list, which is then reduced to classes.
    With ``doubly`` the same walk runs over maximal doubly even codes.
    """
    runner = runner or Runner()
    say = progress or (lambda msg: log.info(msg))
    current = [(c, canonical_form(c)) for c in maximal48]
    out: dict[int, list[LinearCode]] = {}
    n = current[0][0].length if current else 0
    while n > stop:
        n -= 1
        units = [(c.length, c.rows, cf.aut_generators, doubly) for c, cf in current]
        cands = runner.map(_shorten_unit, units, f"shortening to length {n}")
        flat = [LinearCode(m, rows) for lst in cands for m, rows in lst]
        forms = runner.map(_canon_unit, [(c.length, c.rows) for c in flat], f"classes of length {n}")
        classes: dict[tuple, tuple[LinearCode, CanonicalForm]] = {}
        for c, (key, crow, cf) in zip(flat, forms):
            classes.setdefault(key + (crow,), (c, cf))
        current = list(classes.values())
        out[n] = [c for c, _ in current]
        say(f"length {n}: {len(current)} classes")
    return out


def table2(chain: dict[int, list[LinearCode]], lengths: Iterable[int] = (8, 16, 24, 32, 40)) -> dict[int, dict[int, int]]:
    out = {}
    for n in lengths:
        hist: dict[int, int] = {}
        for c in chain.get(n, []):
            hist[c.dim] = hist.get(c.dim, 0) + 1
        out[n] = dict(sorted(hist.items()))
    return out


def doubling_forms(chain: dict[int, list[LinearCode]], halves: dict[int, list[LinearCode]],
                   lengths: Iterable[int] = (8, 16, 24, 32, 40)) -> dict[int, list[LinearCode | None]]:
    """For each class of length ``n``, a maximal doubly even ``C`` of length ``n/2`` with ``tildeD(C)`` equivalent to it.

    ``halves`` maps a length to its maximal doubly even classes.  ``None``
    marks a class no doubling matches.
    """
    out: dict[int, list[LinearCode | None]] = {}
    for n in lengths:
        forms = {}
        for h in halves.get(n // 2, []):
            forms.setdefault(canonical_form(generalized_doubling(h)).canonical_code, h)
        out[n] = [forms.get(canonical_form(c).canonical_code) for c in chain.get(n, [])]
    return out


def format_table2(chain: dict[int, list[LinearCode]], halves: dict[int, list[LinearCode]],
                  lengths: Iterable[int] = (8, 16, 24, 32, 40, 48)) -> str:
    """Doubly even halves (length, dim, components, count) beside their doublings (length, dim, count).

    Classes with no matching half (``ttgc(10)`` at length 48) get a row of their own.
    """
    lines = ["len dim #compos #codes || len dim #codes", "-" * 39]
    for n, found in doubling_forms(chain, halves, lengths).items():
        rows: dict[tuple, int] = {}
        loose: dict[int, int] = {}
        for c, h in zip(chain.get(n, []), found):
            if h is None:
                loose[c.dim] = loose.get(c.dim, 0) + 1
            else:
                key = (h.dim, len(components(h)), c.dim)
                rows[key] = rows.get(key, 0) + 1
        for (hd, comp, d), cnt in sorted(rows.items()):
            lines.append(f"{n // 2:>3} {hd:>3} {comp:>7} {cnt:>6} || {n:>3} {d:>3} {cnt:>6}")
        for d, cnt in sorted(loose.items()):
            lines.append(f"{'':>3} {'':>3} {'':>7} {'':>6} || {n:>3} {d:>3} {cnt:>6}")
    return "\n".join(lines)


def doubly_even_halves(stop: int = 4, runner: Runner | None = None,
                       progress: Callable[[str], None] | None = None) -> dict[int, list[LinearCode]]:
    """Maximal doubly even classes of every length from 24 down to ``stop``."""
    top = load_desd24()
    out = {24: list(top)}
    out.update(shorten_chain(top, stop=stop, runner=runner, progress=progress, doubly=True))
    return out


# ---------------------------------------------------------------------------
# checkpoints


def _checksum(payload) -> str:
    return hashlib.sha256(json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()).hexdigest()


class CheckpointStore:
    """Append-only NDJSON records ``{kind, key, payload, sha256}``."""

    def __init__(self, path: str | os.PathLike):
        self.path = os.fspath(path)
        self._cache: dict[str, dict] | None = None

    def store(self, kind: str, key: int, payload) -> None:
        rec = {"kind": kind, "key": key, "payload": payload, "sha256": _checksum([kind, key, payload])}
        with open(self.path, "a", encoding="utf-8") as fh:
            fh.write(json.dumps(rec, sort_keys=True, separators=(",", ":")) + "\n")
        if self._cache is not None:
            self._cache.setdefault(kind, {})[key] = payload

    def _load(self) -> dict[str, dict]:
        if self._cache is None:
            self._cache = checkpoint_load(self.path)
        return self._cache

    def load_kind(self, kind: str) -> dict:
        return dict(self._load().get(kind, {}))


def checkpoint_store(path: str | os.PathLike, kind: str, key: int, payload) -> None:
    CheckpointStore(path).store(kind, key, payload)


def checkpoint_load(path: str | os.PathLike) -> dict[str, dict]:
    out: dict[str, dict] = {}
    if not os.path.exists(path):
        return out
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                rec = json.loads(line)
                kind, key, payload, digest = rec["kind"], rec["key"], rec["payload"], rec["sha256"]
            except (ValueError, KeyError) as exc:
                raise CheckpointError(f"line {lineno}: unreadable record") from exc
            if _checksum([kind, key, payload]) != digest:
                raise CheckpointError(f"line {lineno}: checksum mismatch")
            out.setdefault(kind, {})[key] = payload
    return out
