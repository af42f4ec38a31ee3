"""Verification suites, one per acceptance tier.

Each suite returns a :class:`SuiteResult` holding named checks.  Suites never
raise on a failed check; they record it, so a report always shows every
criterion.  Randomized checks use a fixed seed.
"""

from __future__ import annotations

import itertools
import time
from collections.abc import Callable
from dataclasses import dataclass, field
from math import comb

import numpy as np

from .constructions import (
    d16_plus,
    e8,
    extended_doubling,
    generalized_doubling,
    padded_triangular_code,
    quotient_context,
    triangular_basis,
    triangular_code,
)
from .data import DESD24_NAMES, load_desd24
from .divisible import (
    b_form,
    c_meet_Rad,
    c_meet_rad,
    is_maximal,
    is_triply_even,
    q_form,
    rad_brute,
    radical_summary,
    star_dual,
    t_form,
)
from .gf2 import (
    LinearCode,
    components,
    direct_sum,
    dual,
    meet_code,
    rank,
    repetition,
    span_array,
    star,
    star_code,
    weight_enumerator,
)
from .groups import MatrixGroup, gl_generators, gl_order, mat_apply, mat_mul
from .pipeline import (
    EXPECTED_COMPONENTS,
    EXPECTED_DIMS48,
    EXPECTED_DUPLEX,
    EXPECTED_HALVES,
    EXPECTED_HYBRID,
    EXPECTED_LEVELS,
    EXPECTED_TABLE1,
    EXPECTED_TABLE2,
    PROSE_NOTE,
    REPRESENTATIVE_LABELS,
    Runner,
    build_parts_db,
    classify48,
    doubling_forms,
    doubly_even_halves,
    flatten,
    format_table1,
    format_table2,
    representatives48,
    shorten_chain,
    table1,
    table2,
)
from .symmetry import (
    automorphism_group,
    canonical_form,
    double_coset_reps,
    gl_set_stabilizer,
    is_equivalent,
    set_stabilizer,
)

SEED = 20240601
RANDOM_CODES = 200


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class SuiteResult:
    suite: str
    criterion: str
    checks: list[Check] = field(default_factory=list)
    seconds: float = 0.0
    report: str = ""

    @property
    def ok(self) -> bool:
        return bool(self.checks) and all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(ok), detail))

    def summary(self) -> str:
        bad = [c for c in self.checks if not c.ok]
        status = "PASS" if self.ok else "FAIL"
        line = f"{self.criterion} {self.suite}: {status} ({len(self.checks) - len(bad)}/{len(self.checks)} checks, {self.seconds:.1f}s)"
        for c in bad:
            line += f"\n  failed: {c.name}" + (f" [{c.detail}]" if c.detail else "")
        return line


# ---------------------------------------------------------------------------
# random doubly even codes


def random_doubly_even(rng: np.random.Generator, n: int, k: int) -> LinearCode:
    """A doubly even code of length ``n`` and dimension at most ``k``.

    Rows of weight 4, 8 or 12 are added while they keep every weight and
    pairwise intersection compatible with double evenness.
    """
    rows: list[int] = []
    weights = [w for w in (4, 8, 12) if w <= n]
    for _ in range(60 * k):
        if len(rows) == k:
            break
        w = int(rng.choice(weights))
        v = sum(1 << int(i) for i in rng.choice(n, size=w, replace=False))
        if any((v & r).bit_count() % 2 for r in rows):
            continue
        if rank(rows + [v]) == len(rows):
            continue
        rows.append(v)
    return LinearCode(n, rows)


def random_corpus(count: int = RANDOM_CODES, seed: int = SEED) -> list[LinearCode]:
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        n = int(rng.integers(4, 17))
        k = int(rng.integers(1, n // 2 + 1))
        c = random_doubly_even(rng, n, k)
        if c.dim:
            out.append(c)
    return out


def _word_set(c: LinearCode) -> set[int]:
    return {int(v) for v in span_array(c.rows)}


def _sample(rng: np.random.Generator, c: LinearCode) -> int:
    v = 0
    for r in c.rows:
        if rng.integers(2):
            v ^= r
    return v


# ---------------------------------------------------------------------------
# T1: forms and radicals


def suite_forms(count: int = RANDOM_CODES, samples: int = 30) -> SuiteResult:
    """Polarization identities for Q, B and T on random doubly even codes."""
    res = SuiteResult("forms", "T1")
    rng = np.random.default_rng(SEED + 1)
    bad = {"QB": 0, "BT1": 0, "BT2": 0, "Tzero": 0, "B on C x D": 0, "Q on D": 0}
    for c in random_corpus(count):
        cd = dual(c)
        sd = star_dual(c)
        d = meet_code(c, sd)
        for _ in range(samples):
            x, y = _sample(rng, c), _sample(rng, c)
            u, v = _sample(rng, cd), _sample(rng, cd)
            z = _sample(rng, sd)
            if q_form(x ^ y) != q_form(x) ^ q_form(y) ^ b_form(x, y):
                bad["QB"] += 1
            if b_form(x, u ^ v) != b_form(x, u) ^ b_form(x, v) ^ t_form(x, u, v):
                bad["BT1"] += 1
            if b_form(x ^ y, u) != b_form(x, u) ^ b_form(y, u) ^ t_form(x, y, u):
                bad["BT2"] += 1
            if t_form(x, y, z):
                bad["Tzero"] += 1
            p, q = _sample(rng, d), _sample(rng, d)
            if b_form(x ^ y, p) != b_form(x, p) ^ b_form(y, p) or b_form(x, p ^ q) != b_form(x, p) ^ b_form(x, q):
                bad["B on C x D"] += 1
            if q_form(p ^ q) != q_form(p) ^ q_form(q) ^ b_form(p, q):
                bad["Q on D"] += 1
    for name, n in bad.items():
        res.add(f"{name} identity on {count} codes", n == 0, f"{n} violations")
    return res


def suite_radicals(count: int = RANDOM_CODES, samples: int = 25) -> SuiteResult:
    """Radical closures and the structured radical computation against brute force."""
    res = SuiteResult("radicals", "T1")
    rng = np.random.default_rng(SEED + 2)
    bad = {k: 0 for k in ("rad in star dual", "R0 (i)", "R0 (ii)", "RC rad", "RC Rad",
                          "C meet rad linear", "C meet Rad linear", "summary vs brute")}
    for c in random_corpus(count):
        cw = _word_set(c)
        rad, Rad = rad_brute(c, ambient="dual")
        sd = _word_set(star_dual(c))
        if not rad <= sd:
            bad["rad in star dual"] += 1
        c_rad = rad & cw
        c_Rad = Rad & cw
        c_sd = sd & cw
        rad_list = sorted(rad)
        picks = [rad_list[int(i)] for i in rng.integers(len(rad_list), size=min(samples, len(rad_list)))]
        for x in picks:
            if any(x ^ y not in rad for y in c_rad):
                bad["R0 (i)"] += 1
            if any((x ^ c0) in rad and c0 not in rad for c0 in cw):
                bad["R0 (ii)"] += 1
            if {x ^ y for y in c_rad} != {x ^ y for y in c_sd} & rad:
                bad["RC rad"] += 1
        Rad_list = sorted(Rad)
        picks = [Rad_list[int(i)] for i in rng.integers(len(Rad_list), size=min(samples, len(Rad_list)))]
        for z in picks:
            if {z ^ y for y in c_Rad} != {z ^ y for y in c_sd} & Rad:
                bad["RC Rad"] += 1
        if any(a ^ b not in c_rad for a in c_rad for b in c_rad):
            bad["C meet rad linear"] += 1
        if any(a ^ b not in c_Rad for a in c_Rad for b in c_Rad):
            bad["C meet Rad linear"] += 1
        s = radical_summary(c)
        if (
            _word_set(s.c_meet_rad) != c_rad
            or _word_set(s.c_meet_Rad) != c_Rad
            or _word_set(s.star_dual_meet) != c_sd
            or s.contains_Rad != (Rad <= cw)
            or c_meet_rad(c) != s.c_meet_rad
            or c_meet_Rad(c) != s.c_meet_Rad
        ):
            bad["summary vs brute"] += 1
    for name, n in bad.items():
        res.add(f"{name} on {count} codes", n == 0, f"{n} violations")
    return res


# ---------------------------------------------------------------------------
# T2: constructions


def triangular_enumerator(n: int) -> list[int]:
    """Closed-form weight distribution of the triangular graph code for ``n = 2 mod 4``."""
    coeffs = [0] * (n * (n - 1) // 2 + 1)
    for l in range((n - 1) // 4 + 1):
        coeffs[2 * l * (n - 2 * l)] += comb(n, 2 * l)
    return coeffs


def suite_constructions() -> SuiteResult:
    res = SuiteResult("constructions", "T2")
    res.add("extended doubling of <1_4>^perp is e8",
            is_equivalent(extended_doubling(dual(repetition(4))), e8()) is not None)
    small = [("e8", e8(), 16, 5), ("d16+", d16_plus(), 32, 9), ("e8+e8", direct_sum(e8(), e8()), 32, 10)]
    for name, c, n, k in small:
        t = generalized_doubling(c)
        res.add(f"tildeD({name}) is [{n},{k}]", (t.length, t.dim) == (n, k), f"got [{t.length},{t.dim}]")
    desd = load_desd24()
    dims = [generalized_doubling(c).dim for c in desd]
    res.add("tildeD dims over the nine length-24 codes", dims == [13] * 7 + [14, 15], str(dims))
    for n in (6, 10):
        we = weight_enumerator(triangular_code(n)).coeffs
        res.add(f"weight enumerator of T({n})", list(we) == triangular_enumerator(n))
        tb = triangular_basis(n)
        tc = triangular_code(n)
        res.add(f"explicit basis of T({n})", LinearCode(tc.length, tb) == tc and len(tb) == n - 2)
        star_dim = star_code(tc, tc).dim
        res.add(f"dim T({n})*T({n}) = {(n - 1) * (n - 2) // 2}", star_dim == (n - 1) * (n - 2) // 2, str(star_dim))
        prods = [star(a, b) for a, b in itertools.combinations_with_replacement(tb, 2)]
        res.add(f"star products of the basis of T({n}) are independent", rank(prods) == len(prods))
    for name, c in zip(DESD24_NAMES, desd):
        t = generalized_doubling(c)
        res.add(f"(tildeD*tildeD)^perp = tildeD for {name}", star_dual(t) == t)
    for label, rep in zip(REPRESENTATIVE_LABELS, representatives48()):
        res.add(f"{label} is maximal triply even", is_triply_even(rep) and is_maximal(rep))
    res.add("ttgc(6) is equivalent to tildeD(e8)",
            is_equivalent(padded_triangular_code(6), generalized_doubling(e8())) is not None)
    return res


# ---------------------------------------------------------------------------
# T3: small symmetry computations


def all_gl(k: int) -> list[tuple[int, ...]]:
    """Every element of GL(k, 2) as a column tuple."""
    out = []
    for cols in itertools.product(range(1, 1 << k), repeat=k):
        if rank(cols) == k:
            out.append(tuple(cols))
    return out


def _closure(gens: list[tuple[int, ...]], k: int) -> set[tuple[int, ...]]:
    ident = tuple(1 << i for i in range(k))
    seen = {ident}
    frontier = [ident]
    for g in frontier:
        for s in gens:
            h = mat_mul(s, g)
            if h not in seen:
                seen.add(h)
                frontier.append(h)
    return seen


def symmetry_corpus() -> list[LinearCode]:
    """Twenty codes with a spread of sizes and symmetry."""
    rng = np.random.default_rng(SEED + 3)
    desd = load_desd24()
    fixed = [
        e8(),
        d16_plus(),
        direct_sum(e8(), e8()),
        triangular_code(6),
        padded_triangular_code(6),
        generalized_doubling(e8()),
        repetition(8),
        dual(repetition(8)),
        desd[0],
        desd[4],
        desd[8],
    ]
    while len(fixed) < 20:
        c = random_doubly_even(rng, int(rng.integers(10, 25)), int(rng.integers(3, 8)))
        if c.dim >= 2:
            fixed.append(c)
    return fixed


def suite_symmetry_small(relabelings: int = 100) -> SuiteResult:
    res = SuiteResult("symmetry-small", "T3")
    rng = np.random.default_rng(SEED + 4)
    code = e8()
    brute = sum(1 for p in itertools.permutations(range(8)) if code.permute(p) == code)
    order = automorphism_group(code).order()
    res.add("|Aut(e8)| = 1344 from the canonical labeling and by S8 brute force", brute == order == 1344, f"{order} vs {brute}")

    stab_bad = 0
    trials = 0
    for k in range(1, 5):
        gl = all_gl(k)
        for _ in range(12):
            pts = {0} | {int(v) for v in rng.integers(1, 1 << k, size=int(rng.integers(1, 1 << k)))}
            grp, gorder = set_stabilizer(pts, k)
            brute_set = {g for g in gl if {mat_apply(g, p) for p in pts} == pts}
            trials += 1
            if gorder != len(brute_set) or not all(g in brute_set for g in grp.gens) or grp.chain.order() != gorder:
                stab_bad += 1
    res.add(f"set stabilizer vs GL(k,2) brute force, k <= 4 ({trials} sets)", stab_bad == 0, f"{stab_bad} mismatches")

    ctx_bad = 0
    for c in (e8(), generalized_doubling(e8()), triangular_code(6)):
        ctx = quotient_context(c)
        k = ctx.quotient_dim
        if k > 4:
            continue
        xs = set(ctx.singular)
        brute_set = {g for g in all_gl(k) if {mat_apply(g, p) for p in xs} == xs}
        if gl_set_stabilizer(ctx).order() != len(brute_set):
            ctx_bad += 1
    res.add("G1 of small quotient contexts vs brute force", ctx_bad == 0)

    dc_bad = 0
    dc_trials = 0
    for k in (1, 2, 3):
        gl = all_gl(k)
        for _ in range(10):
            pts = {0} | {int(v) for v in rng.integers(1, 1 << k, size=int(rng.integers(1, 1 << k)))}
            g1, _ = set_stabilizer(pts, k) if rng.integers(2) else (MatrixGroup(k, gl_generators(k), order=gl_order(k)), 0)
            g1_elems = sorted(_closure(list(g1.gens), k))
            a_gens = [g1_elems[int(i)] for i in rng.integers(len(g1_elems), size=int(rng.integers(0, 3)))]
            b_gens = [g1_elems[int(i)] for i in rng.integers(len(g1_elems), size=int(rng.integers(0, 3)))]
            a, b = _closure(a_gens, k), _closure(b_gens, k)
            reps = double_coset_reps(g1, MatrixGroup(k, a_gens), MatrixGroup(k, b_gens))
            dc_trials += 1
            cosets = [{mat_mul(x, mat_mul(r, y)) for x in a for y in b} for r in reps]
            union = set().union(*cosets)
            disjoint = sum(len(s) for s in cosets) == len(union)
            if not disjoint or union != set(g1_elems) or reps[0] != tuple(1 << i for i in range(k)):
                dc_bad += 1
        if k >= 2:
            # exhaustive over all cyclic subgroup pairs of GL(k, 2)
            for x, y in itertools.product(gl, repeat=2):
                if k == 3 and (gl.index(x) % 7 or gl.index(y) % 11):
                    continue
                a, b = _closure([x], k), _closure([y], k)
                reps = double_coset_reps(MatrixGroup(k, gl_generators(k), order=gl_order(k)), MatrixGroup(k, [x]), MatrixGroup(k, [y]))
                dc_trials += 1
                cosets = [{mat_mul(p, mat_mul(r, q)) for p in a for q in b} for r in reps]
                if sum(len(s) for s in cosets) != len(gl) or set().union(*cosets) != set(gl):
                    dc_bad += 1
    res.add(f"double cosets cover G1 disjointly, k <= 3 ({dc_trials} cases)", dc_bad == 0, f"{dc_bad} failures")

    inv_bad = 0
    corpus = symmetry_corpus()
    for c in corpus:
        ref = canonical_form(c).canonical_code
        for _ in range(relabelings):
            p = tuple(int(i) for i in rng.permutation(c.length))
            if canonical_form(c.permute(p)).canonical_code != ref:
                inv_bad += 1
    res.add(f"canonical form invariance ({len(corpus)} codes x {relabelings} relabelings)", inv_bad == 0,
            f"{inv_bad} disagreements")
    return res


# ---------------------------------------------------------------------------
# T4 - T6: the enumeration


def suite_table1(runner: Runner | None = None, progress: Callable[[str], None] | None = None) -> SuiteResult:
    res = SuiteResult("table1", "T4")
    levels = build_parts_db(runner, progress)
    counts = [len(lv) for lv in levels]
    counts += [0] * (len(EXPECTED_LEVELS) - len(counts))
    db = flatten(levels)
    t = table1(db)
    res.report = format_table1(t)
    res.add("per-level counts", tuple(counts[: len(EXPECTED_LEVELS)]) == EXPECTED_LEVELS, str(counts))
    for dim in sorted(EXPECTED_TABLE1, reverse=True):
        res.add(f"parts table row dim {dim}", t.get(dim) == EXPECTED_TABLE1[dim], f"got {t.get(dim)}")
    res.add("database size 1282", len(db) == 1282, str(len(db)))
    return res


def suite_classify48(runner: Runner | None = None, progress: Callable[[str], None] | None = None) -> SuiteResult:
    res = SuiteResult("classify48", "T5")
    report = classify48(runner, progress)
    res.report = report.to_json()
    res.add("duplex counts (maximal, constructed, excluded)", report.duplex_counts == EXPECTED_DUPLEX,
            str(report.duplex_counts))
    res.add("hybrid counts (pairs, constructed, maximal)", report.hybrid_counts == EXPECTED_HYBRID,
            str(report.hybrid_counts))
    res.add("ten classes", len(report.classes) == 10, str(len(report.classes)))
    dims = tuple(sorted(c["dim"] for c in report.classes))
    res.add("class dimensions {9, 13 x 7, 14, 15}", dims == EXPECTED_DIMS48, str(dims))
    res.add("ttgc(10) found among hybrid outputs", any(c["label"] == "ttgc(10)" for c in report.classes))
    res.add("prose count recorded as a note", PROSE_NOTE in report.notes)
    return res


def suite_table2(runner: Runner | None = None, progress: Callable[[str], None] | None = None) -> SuiteResult:
    res = SuiteResult("table2", "T6")
    chain = shorten_chain(representatives48(), stop=8, runner=runner, progress=progress)
    t = table2(chain)
    for n in sorted(EXPECTED_TABLE2):
        res.add(f"length {n} classes by dimension", t.get(n) == EXPECTED_TABLE2[n], f"got {t.get(n)}")
    halves = doubly_even_halves(stop=4, runner=runner, progress=progress)
    counts = {m: len(halves.get(m, [])) for m in sorted(EXPECTED_HALVES)}
    res.add("maximal doubly even classes of lengths 4..20", counts == EXPECTED_HALVES, str(counts))
    res.report = format_table2(chain, halves, sorted(EXPECTED_TABLE2))
    forms = doubling_forms(chain, halves, sorted(EXPECTED_TABLE2))
    bad = [(n, c.dim) for n in forms for c, h in zip(chain.get(n, []), forms[n]) if h is None]
    res.add("every class at lengths 8..40 is tildeD of a maximal doubly even code", not bad, str(bad))
    comps: dict[tuple[int, int], int] = {}
    for m in sorted(EXPECTED_HALVES):
        for h in halves.get(m, []):
            key = (m, len(components(h)))
            comps[key] = comps.get(key, 0) + 1
    res.add("halves by number of indecomposable components", comps == EXPECTED_COMPONENTS, str(comps))
    return res


# ---------------------------------------------------------------------------
# T7: proof devices


def repeated_column_classes(c: LinearCode) -> list[list[int]]:
    """Coordinates grouped by equal generator columns; weight-2 dual words join members of a group."""
    groups: dict[int, list[int]] = {}
    for i in range(c.length):
        col = sum(1 << j for j, r in enumerate(c.rows) if r >> i & 1)
        groups.setdefault(col, []).append(i)
    return sorted(groups.values())


def dual_min_weight_small(c: LinearCode) -> int | None:
    """Minimum weight of the dual when it is 1 or 2, else ``None``."""
    classes = repeated_column_classes(c)
    zero_col = [i for i in range(c.length) if not any(r >> i & 1 for r in c.rows)]
    if zero_col:
        return 1
    if any(len(g) > 1 for g in classes):
        return 2
    return None


def gamma_constraints_hold(c: LinearCode) -> tuple[bool, list[int]]:
    sizes = sorted((len(g) for g in repeated_column_classes(c)), reverse=True)
    if sizes[0] > 8:
        return False, sizes
    if sizes[0] > 4 and any(s > 3 for s in sizes[1:]):
        return False, sizes
    return True, sizes


def suite_proof_devices() -> SuiteResult:
    res = SuiteResult("proof-devices", "T7")
    for label, rep in zip(REPRESENTATIVE_LABELS, representatives48()):
        we = weight_enumerator(rep).coeffs
        res.add(f"{label} has a weight-24 codeword", we[24] > 0, f"A_24 = {we[24]}")
        ok, sizes = gamma_constraints_hold(rep)
        res.add(f"{label} weight-2 dual graph components", ok, f"component sizes {sizes[:6]}")
    res.add("dual of ttgc(10) has minimum weight 2", dual_min_weight_small(padded_triangular_code(10)) == 2)
    return res


# ---------------------------------------------------------------------------
# registry


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "forms": suite_forms,
    "radicals": suite_radicals,
    "constructions": suite_constructions,
    "symmetry-small": suite_symmetry_small,
    "table1": suite_table1,
    "classify48": suite_classify48,
    "table2": suite_table2,
    "proof-devices": suite_proof_devices,
}

PIPELINE_SUITES = {"table1", "classify48", "table2"}


def run_suite(name: str, runner: Runner | None = None, progress: Callable[[str], None] | None = None) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    t0 = time.perf_counter()
    if name in PIPELINE_SUITES:
        res = SUITES[name](runner, progress)
    else:
        res = SUITES[name]()
    res.seconds = time.perf_counter() - t0
    return res
