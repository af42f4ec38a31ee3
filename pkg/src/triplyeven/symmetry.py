"""Equivalence, automorphism groups and the quotient groups G0 and G1.

Canonical forms come from bliss (via ``igraph``) applied to the bipartite
incidence graph between coordinates and a spanning, permutation-invariant set
of codewords.  Set stabilizers in GL(k, 2) come from the automorphisms of the
code of linear relations among the points, extended by the maps that fix the
span of the points.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import igraph
import numpy as np

from .constructions import (
    QuotientContext,
    extend_to_basis,
    independent_points,
    matrix_from_bases,
)
from .gf2 import (
    ENUMERATION_CAP,
    EnumerationCapError,
    LengthMismatchError,
    LinearCode,
    Solver,
    apply_perm,
    popcount,
    rank,
    weight_enumerator,
)
from .groups import (
    Matrix,
    MatrixGroup,
    Perm,
    PermGroup,
    gl_generators,
    gl_order,
    mat_apply,
    matrix_to_vector_perm,
    orbits_of,
    perm_identity,
    perm_inv,
    perm_mul,
    vector_perm_to_matrix,
)

SET_STABILIZER_MAX_DIM = 12
COSET_SPACE_BOUND = 10**6


class SearchBudgetError(RuntimeError):
    """A symmetry search exceeded its node or size budget."""


# ---------------------------------------------------------------------------
# canonical forms


def distinguishing_words(c: LinearCode, cap: int = ENUMERATION_CAP) -> list[int]:
    """Codewords of the smallest nonzero weights, adding weight classes until they span ``c``."""
    if c.dim == 0:
        return []
    if c.dim > cap:
        raise EnumerationCapError(f"dimension {c.dim} exceeds enumeration cap {cap}")
    if c.length <= 64:
        arr = c.words(cap)
        by_weight: dict[int, list[int]] = {}
        for w, x in zip(popcount(arr).tolist(), arr.tolist()):
            by_weight.setdefault(w, []).append(x)
    else:
        by_weight = {}
        for x in _python_words(c.rows):
            by_weight.setdefault(x.bit_count(), []).append(x)
    chosen: list[int] = []
    for w in sorted(by_weight):
        if w == 0:
            continue
        chosen.extend(sorted(by_weight[w]))
        if rank(chosen) == c.dim:
            break
    return chosen


def _python_words(rows: Sequence[int]) -> list[int]:
    out = [0]
    for r in rows:
        out += [x ^ r for x in out]
    return out


def _incidence_graph(n: int, word_sets: Sequence[Sequence[int]]) -> tuple[igraph.Graph, list[int]]:
    """Coordinates ``0..n-1`` joined to one vertex per word; one colour per word set."""
    edges = []
    colors = [0] * n
    nxt = n
    for cell, ws in enumerate(word_sets, 1):
        for w in ws:
            edges.extend((i, nxt) for i in range(n) if w >> i & 1)
            colors.append(cell)
            nxt += 1
    return igraph.Graph(n=nxt, edges=edges), colors


@dataclass(frozen=True)
class CanonicalForm:
    canonical_code: LinearCode
    relabeling: Perm  # input coordinate i goes to relabeling[i]
    aut_generators: tuple[Perm, ...]

    def aut_group(self) -> PermGroup:
        return PermGroup(self.canonical_code.length, self.aut_generators)


def _canon(codes: Sequence[LinearCode]) -> tuple[Perm, list[Perm]]:
    n = codes[0].length
    for c in codes[1:]:
        if c.length != n:
            raise LengthMismatchError("codes in a coloured tuple must share a length")
    g, colors = _incidence_graph(n, [distinguishing_words(c) for c in codes])
    # canonical vertex j is input vertex lab[j] (the convention of permute_vertices)
    lab = g.canonical_permutation(color=colors)
    pos = [0] * len(lab)
    for j, v in enumerate(lab):
        pos[v] = j
    # coordinates keep their relative order inside the canonical labeling
    rank_of = {v: i for i, v in enumerate(sorted(pos[:n]))}
    relabel = tuple(rank_of[pos[i]] for i in range(n))
    gens = [tuple(p[:n]) for p in g.automorphism_group(color=colors)]
    return relabel, [p for p in gens if p != perm_identity(n)]


def canonical_form(c: LinearCode) -> CanonicalForm:
    relabel, gens = _canon([c])
    canon = c.permute(relabel)
    for gen in gens:
        if c.permute(gen) != c:
            raise AssertionError("the graph backend returned a non-automorphism")
    return CanonicalForm(canon, relabel, tuple(gens))


def canonical_pair(c: LinearCode, r: LinearCode) -> tuple[tuple[LinearCode, LinearCode], Perm, list[Perm]]:
    """Canonical form of the pair ``(C, R)`` under simultaneous relabeling."""
    relabel, gens = _canon([c, r])
    for gen in gens:
        if c.permute(gen) != c or r.permute(gen) != r:
            raise AssertionError("the graph backend returned a non-automorphism of the pair")
    return (c.permute(relabel), r.permute(relabel)), relabel, gens


def automorphism_group(c: LinearCode) -> PermGroup:
    return canonical_form(c).aut_group()


def pair_automorphism_group(c: LinearCode, r: LinearCode) -> PermGroup:
    """``Aut(C) meet Aut(R)``."""
    _, _, gens = canonical_pair(c, r)
    return PermGroup(c.length, gens)


def group_order(g: PermGroup | MatrixGroup) -> int:
    return g.order()


def orbits(g: PermGroup, points: Iterable[int] | None = None) -> list[list[int]]:
    return g.orbits(points)


def orbit_reps_on_vectors(perms: Sequence[Perm], vectors: Iterable[int], key=None) -> list[int]:
    """Minimum of each orbit of coordinate permutations on a set of vectors.

    ``key`` maps a permuted vector back to the representative used for the set
    (for example a canonical coset representative); by default the identity.
    """
    key = key or (lambda v: v)

    def act(g, v):
        return key(apply_perm(v, g))

    return [orb[0] for orb in orbits_of(list(perms), vectors, act)]


def invariant_key(c: LinearCode, cf: CanonicalForm | None = None) -> tuple:
    cf = cf or canonical_form(c)
    return (c.dim, tuple(weight_enumerator(c).coeffs), cf.aut_group().order())


def is_equivalent(c1: LinearCode, c2: LinearCode) -> Perm | None:
    """A permutation ``s`` with ``c1 == c2.permute(s)``, or ``None``."""
    if c1.length != c2.length:
        raise LengthMismatchError("codes have different lengths")
    if c1.dim != c2.dim or weight_enumerator(c1) != weight_enumerator(c2):
        return None
    f1, f2 = canonical_form(c1), canonical_form(c2)
    if f1.canonical_code != f2.canonical_code:
        return None
    witness = perm_mul(perm_inv(f1.relabeling), f2.relabeling)
    if c2.permute(witness) != c1:
        raise AssertionError("equivalence witness failed verification")
    return witness


# ---------------------------------------------------------------------------
# quotient actions


def induced_quotient_action(aut: PermGroup | Sequence[Perm], ctx: QuotientContext) -> MatrixGroup:
    """Matrices in lift coordinates induced on ``C/R`` by coordinate permutations."""
    gens = aut.gens if isinstance(aut, PermGroup) else [tuple(g) for g in aut]
    k = ctx.quotient_dim
    mats = []
    for g in gens:
        if ctx.code.permute(g) != ctx.code:
            raise ValueError("permutation does not stabilize the code")
        if ctx.radical.permute(g) != ctx.radical:
            raise ValueError("permutation does not stabilize the radical subcode")
        m = tuple(ctx.project(apply_perm(lift, g)) for lift in ctx.lifts)
        if m != tuple(1 << i for i in range(k)):
            mats.append(m)
    return MatrixGroup(k, mats)


def g0_group(ctx: QuotientContext) -> MatrixGroup:
    g0 = induced_quotient_action(pair_automorphism_group(ctx.code, ctx.radical), ctx)
    xs = ctx.singular_set()
    for m in g0.gens:
        if {mat_apply(m, x) for x in xs} != xs:
            raise AssertionError("G0 generator does not preserve the singular points")
    return g0


# ---------------------------------------------------------------------------
# point sets in GF(2)^k


class PointCode:
    """The code spanned by the rows of the matrix whose columns are the points of ``X``.

    A permutation of ``X`` comes from a linear map of ``span(X)`` exactly when
    it preserves every linear dependency among the points, that is, when it
    is a coordinate automorphism of this code.
    """

    def __init__(self, points: Iterable[int], k: int):
        if k > SET_STABILIZER_MAX_DIM:
            raise SearchBudgetError(f"quotient dimension {k} exceeds {SET_STABILIZER_MAX_DIM}")
        self.k = k
        self.points = tuple(sorted(set(int(p) for p in points)))
        if any(p >> k or p < 0 for p in self.points):
            raise ValueError("point outside GF(2)^k")
        self.index = {p: i for i, p in enumerate(self.points)}
        self.span_basis = independent_points([p for p in self.points if p])
        self.u = len(self.span_basis)
        solver = Solver(self.span_basis)
        rows = [0] * self.u
        for j, p in enumerate(self.points):
            m = solver.coords(p)
            for i in range(self.u):
                if m >> i & 1:
                    rows[i] |= 1 << j
        self.code = LinearCode(len(self.points), rows)
        self._canon: CanonicalForm | None = None

    @property
    def canonical(self) -> CanonicalForm:
        if self._canon is None:
            self._canon = canonical_form(self.code)
        return self._canon

    def complement(self) -> list[int]:
        return extend_to_basis(self.span_basis, self.k)[self.u:]

    def linear_map(self, target: PointCode, pmap: Sequence[int]) -> Matrix:
        """Matrix realizing the point bijection ``points[i] -> target.points[pmap[i]]``."""
        src = list(self.span_basis) + self.complement()
        dst = [target.points[pmap[self.index[b]]] for b in self.span_basis] + target.complement()
        g = matrix_from_bases(src, dst)
        for i, p in enumerate(self.points):
            if mat_apply(g, p) != target.points[pmap[i]]:
                raise AssertionError("point permutation is not induced by a linear map")
        return g


def set_stabilizer(points: Iterable[int], k: int) -> tuple[MatrixGroup, int]:
    """``{g in GL(k, 2) : g(X) = X}`` as a matrix group together with its order."""
    pc = PointCode(points, k)
    cf = pc.canonical
    gens = [pc.linear_map(pc, pi) for pi in cf.aut_generators]
    aut_order = cf.aut_group().order()
    u = pc.u
    comp = pc.complement()
    t = len(comp)
    src = list(pc.span_basis) + comp
    # maps fixing span(X) pointwise: shears into the span and GL of the complement
    for j in range(t):
        for b in pc.span_basis:
            dst = list(src)
            dst[u + j] ^= b
            gens.append(matrix_from_bases(src, dst))
    for g in gl_generators(t):
        dst = list(pc.span_basis) + [mat_apply_coords(g, comp, j) for j in range(t)]
        gens.append(matrix_from_bases(src, dst))
    order = aut_order * (1 << (t * u)) * gl_order(t)
    ident = tuple(1 << i for i in range(k))
    gens = [g for g in gens if g != ident]
    return MatrixGroup(k, gens, order=order), order


def mat_apply_coords(g: Matrix, basis: Sequence[int], j: int) -> int:
    """Image of ``basis[j]`` under the matrix ``g`` written in the coordinates of ``basis``."""
    col = g[j]
    out = 0
    i = 0
    while col:
        if col & 1:
            out ^= basis[i]
        col >>= 1
        i += 1
    return out


def set_isomorphism(x1: Iterable[int] | PointCode, x2: Iterable[int] | PointCode, k: int | None = None) -> Matrix | None:
    """Some ``g in GL(k, 2)`` with ``g(X1) = X2``, or ``None``."""
    p1 = x1 if isinstance(x1, PointCode) else PointCode(x1, k)
    p2 = x2 if isinstance(x2, PointCode) else PointCode(x2, k)
    if p1.k != p2.k or len(p1.points) != len(p2.points) or p1.u != p2.u:
        return None
    if p1.canonical.canonical_code != p2.canonical.canonical_code:
        return None
    # p1.code relabeled by r1 equals p2.code relabeled by r2
    r2inv = perm_inv(p2.canonical.relabeling)
    pmap = [r2inv[j] for j in p1.canonical.relabeling]
    return p1.linear_map(p2, pmap)


def gl_set_stabilizer(ctx: QuotientContext) -> MatrixGroup:
    """G1: the stabilizer of the singular points in GL(C/R)."""
    return set_stabilizer(ctx.singular, ctx.quotient_dim)[0]


# ---------------------------------------------------------------------------
# double cosets


class _CosetKeyer:
    """Canonical keys for left cosets ``gB`` (lexicographically least basis images)."""

    def __init__(self, b: MatrixGroup):
        chain = b.chain
        self.levels = []
        for trans in chain.transversals:
            pts = np.array(list(trans.keys()), dtype=np.int64)
            elems = list(trans.values())
            self.levels.append((pts, elems))
        self.basis = np.array([1 << i for i in range(b.k)], dtype=np.int64)

    def __call__(self, g: np.ndarray) -> bytes:
        h = g
        for pts, elems in self.levels:
            if len(pts) > 1:
                h = h[elems[int(np.argmin(h[pts]))]]
        return h[self.basis].tobytes()


def double_coset_reps(g1: MatrixGroup, a: MatrixGroup, b: MatrixGroup,
                      bound: int = COSET_SPACE_BOUND, check: bool = True) -> list[Matrix]:
    """One representative per double coset ``A g B`` in ``G1``; the identity first.

    Left cosets of ``B`` are enumerated by a breadth-first walk under the
    generators of ``G1``; each newly met coset outside the listed double cosets
    starts a new one, whose ``A``-orbit is then marked.
    """
    if check:
        for h in a.gens + b.gens:
            if h not in g1:
                raise ValueError("subgroup containment violated")
    index = g1.order() // b.order()
    if index > bound:
        raise SearchBudgetError(f"coset space of size {index} exceeds bound {bound}")
    keyer = _CosetKeyer(b)
    g1_gens = [matrix_to_vector_perm(g) for g in g1.gens]
    a_gens = [matrix_to_vector_perm(g) for g in a.gens]
    ident = np.arange(1 << g1.k, dtype=np.int64)
    covered: set[bytes] = set()  # cosets inside a listed double coset
    reps: list[Matrix] = []
    visited = {keyer(ident)}
    queue = deque([ident])
    while queue:
        g = queue.popleft()
        key = keyer(g)
        if key not in covered:
            reps.append(vector_perm_to_matrix(g, g1.k))
            covered.add(key)
            orbit = [g]
            for h in orbit:
                for s in a_gens:
                    hh = s[h]
                    kk = keyer(hh)
                    if kk not in covered:
                        covered.add(kk)
                        orbit.append(hh)
        if len(covered) == index:
            break
        for s in g1_gens:
            gg = s[g]
            kk = keyer(gg)
            if kk not in visited:
                visited.add(kk)
                queue.append(gg)
    if len(covered) != index:
        raise AssertionError(f"covered {len(covered)} cosets, expected {index}")
    return reps
