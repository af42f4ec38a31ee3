"""Code constructions: doublings, triangular-graph codes and pair codes.

A pair code glues two doubly even codes ``C1``, ``C2`` along an isometry
``f: C1/R1 -> C2/R2`` of quotients by radical subcodes; the result
``{(x1|x2) : x1 in C1, x2 in f(x1 + R1)}`` is triply even.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .divisible import PreconditionError, c_meet_Rad, is_doubly_even, is_triply_even
from .gf2 import (
    LinearCode,
    Solver,
    direct_sum,
    dual,
    in_span,
    juxtapose_diag,
    kernel_rows,
    ones,
    pad,
    popcount,
    rank,
    reduce_mod,
    repetition,
    restrict,
    rref,
    span_array,
    subcode_vanishing_on,
    sum_code,
    support,
    weight,
)

#: Extended Hamming [8, 4, 4] code.
E8_ROWS = (0xB1, 0xE2, 0x74, 0xD8)


def e8() -> LinearCode:
    return LinearCode(8, E8_ROWS)


def d16_plus() -> LinearCode:
    return extended_doubling(dual(repetition(8)))


def reed_muller_1(m: int) -> LinearCode:
    """First-order Reed-Muller code RM(1, m); coordinate ``j`` is the point ``j`` of GF(2)^m."""
    n = 1 << m
    rows = [ones(n)]
    for i in range(m):
        rows.append(sum(1 << j for j in range(n) if j >> i & 1))
    return LinearCode(n, rows)


def extended_doubling(c: LinearCode) -> LinearCode:
    n = c.length
    rows = [ones(n), ones(n) << n] + [r | r << n for r in c.rows]
    return LinearCode(2 * n, rows)


def generalized_doubling(c: LinearCode) -> LinearCode:
    """``<(R|0), (x|x) : x in C>`` with ``R = C meet Rad C``."""
    if not is_doubly_even(c):
        raise PreconditionError("generalized doubling needs a doubly even code")
    r = c_meet_Rad(c)
    return sum_code(juxtapose_diag(c), direct_sum(r, LinearCode(c.length)))


tilde_d = generalized_doubling


def triangular_pairs(n: int) -> list[tuple[int, int]]:
    """Vertices of T(n) (1-based 2-subsets) in the coordinate order used here."""
    return list(combinations(range(1, n + 1), 2))


def triangular_adjacency(n: int) -> list[int]:
    if n < 4:
        raise ValueError("triangular graph codes need n >= 4")
    verts = triangular_pairs(n)
    rows = []
    for a in verts:
        rows.append(sum(1 << j for j, b in enumerate(verts) if len(set(a) & set(b)) == 1))
    return rows


def triangular_code(n: int) -> LinearCode:
    return LinearCode(n * (n - 1) // 2, triangular_adjacency(n))


def padded_length(n: int) -> int:
    m = n * (n - 1) // 2
    return 8 * -(-m // 8)


def padded_triangular_code(n: int) -> LinearCode:
    t = triangular_code(n)
    length = padded_length(n)
    return sum_code(pad(t, length - t.length), repetition(length))


def triangular_basis(n: int) -> list[int]:
    """Rows indexed by the vertices ``{i, n}``, ``i = 1..n-2``."""
    if n % 2:
        raise ValueError("the explicit basis needs even n")
    verts = triangular_pairs(n)
    adj = triangular_adjacency(n)
    index = {v: j for j, v in enumerate(verts)}
    return [adj[index[(i, n)]] for i in range(1, n - 1)]


# ---------------------------------------------------------------------------
# quotients by radical subcodes


@dataclass(frozen=True)
class QuotientContext:
    """``C/R`` with lifts, singular points and the check code.

    Quotient vectors are ``k``-bit ints in lift coordinates: bit ``i`` stands for
    ``lifts[i]``.  ``singular`` is sorted, so the zero coset comes first.
    """

    code: LinearCode
    radical: LinearCode
    lifts: tuple[int, ...]
    singular: tuple[int, ...]
    check_code: LinearCode
    prd: int = 0
    _solver: Solver = field(repr=False, compare=False, default=None)

    @property
    def quotient_dim(self) -> int:
        return len(self.lifts)

    @property
    def length(self) -> int:
        return self.code.length

    def lift(self, q: int) -> int:
        v = 0
        i = 0
        while q:
            if q & 1:
                v ^= self.lifts[i]
            q >>= 1
            i += 1
        return v

    def project(self, c: int) -> int:
        m = self._solver.coords(c)
        if m is None:
            raise ValueError("vector is not a codeword")
        return m >> self.radical.dim

    def singular_set(self) -> frozenset[int]:
        return frozenset(self.singular)


def choose_lifts(c: LinearCode, r: LinearCode) -> list[int]:
    cur = list(r.rows)
    lifts = []
    for row in c.rows:
        red = reduce_mod(row, cur)
        if red:
            lifts.append(row)
            cur = list(rref(cur + [red]))
    return lifts


def singular_points(lifts: Sequence[int]) -> list[int]:
    arr = span_array(lifts)
    return [int(q) for q in np.nonzero(popcount(arr) % 8 == 0)[0]]


def check_code_of(singular: Sequence[int], k: int) -> LinearCode:
    """Linear dependencies among the singular points, as a code on ``X``."""
    rows = []
    for i in range(k):
        rows.append(sum(1 << j for j, x in enumerate(singular) if x >> i & 1))
    return LinearCode(len(singular), kernel_rows(rows, len(singular)))


def quotient_context(c: LinearCode, r: LinearCode | None = None, prd: int = 0) -> QuotientContext:
    if r is None:
        r = c_meet_Rad(c)
    if not r <= c:
        raise PreconditionError("radical subcode is not contained in the code")
    if not r <= c_meet_Rad(c):
        raise PreconditionError("R is not inside C meet Rad C")
    lifts = choose_lifts(c, r)
    solver = Solver(list(r.rows) + lifts)
    sing = singular_points(lifts)
    return QuotientContext(c, r, tuple(lifts), tuple(sing), check_code_of(sing, len(lifts)), prd, solver)


# ---------------------------------------------------------------------------
# isometries and pair codes


def apply_matrix(cols: Sequence[int], q: int) -> int:
    """Apply the linear map whose ``i``-th column is ``cols[i]``."""
    v = 0
    i = 0
    while q:
        if q & 1:
            v ^= cols[i]
        q >>= 1
        i += 1
    return v


@dataclass(frozen=True)
class Isometry:
    source: QuotientContext
    target: QuotientContext
    matrix: tuple[int, ...]  # images of the source basis vectors

    def __call__(self, q: int) -> int:
        return apply_matrix(self.matrix, q)

    def check(self) -> None:
        k = self.source.quotient_dim
        if k != self.target.quotient_dim or len(self.matrix) != k:
            raise ValueError("quotient dimensions differ")
        if rank(self.matrix) != k:
            raise ValueError("isometry matrix is singular")
        tgt = self.target.singular_set()
        if {self(x) for x in self.source.singular} != tgt:
            raise ValueError("map does not carry singular points onto singular points")


def pair_code(ctx1: QuotientContext, ctx2: QuotientContext, f: Isometry | Sequence[int]) -> LinearCode:
    matrix = f.matrix if isinstance(f, Isometry) else tuple(f)
    if isinstance(f, Isometry) and (f.source is not ctx1 or f.target is not ctx2):
        if f.source.code != ctx1.code or f.target.code != ctx2.code:
            raise ValueError("isometry does not match the contexts")
    n1 = ctx1.length
    rows = [r for r in ctx1.radical.rows]
    rows += [r << n1 for r in ctx2.radical.rows]
    rows += [lift | ctx2.lift(img) << n1 for lift, img in zip(ctx1.lifts, matrix)]
    d = LinearCode(n1 + ctx2.length, rows)
    expected = ctx1.code.dim + ctx2.radical.dim
    if d.dim != expected:
        raise AssertionError(f"pair code has dimension {d.dim}, expected {expected}")
    return d


def identity_isometry(ctx: QuotientContext) -> Isometry:
    return Isometry(ctx, ctx, tuple(1 << i for i in range(ctx.quotient_dim)))


def independent_points(points: Sequence[int]) -> list[int]:
    """Greedy maximal independent subsequence."""
    chosen: list[int] = []
    ech: list[int] = []
    for p in points:
        red = reduce_mod(p, ech)
        if red:
            chosen.append(p)
            ech = list(rref(ech + [red]))
    return chosen


def extend_to_basis(vectors: Sequence[int], k: int) -> list[int]:
    out = list(vectors)
    ech = list(rref(out))
    for i in range(k):
        e = 1 << i
        if not in_span(e, ech):
            out.append(e)
            ech = list(rref(ech + [e]))
    return out


def matrix_from_bases(src: Sequence[int], dst: Sequence[int]) -> tuple[int, ...]:
    """Columns of the linear map sending ``src[i]`` to ``dst[i]`` (src a basis)."""
    k = len(src)
    solver = Solver(src)
    cols = []
    for i in range(k):
        m = solver.coords(1 << i)
        cols.append(apply_matrix(dst, m))
    return tuple(cols)


def isometry_from_point_map(ctx1: QuotientContext, ctx2: QuotientContext, pmap: dict[int, int]) -> Isometry:
    """Extend a map ``X1 -> X2`` (quotient vectors) linearly, then to a complement."""
    k = ctx1.quotient_dim
    src = independent_points([x for x in ctx1.singular if x])
    dst = [pmap[x] for x in src]
    src_full = extend_to_basis(src, k)
    dst_full = extend_to_basis(dst, k)
    if len(src_full) != len(dst_full):
        raise ValueError("point map does not preserve the span")
    f = Isometry(ctx1, ctx2, matrix_from_bases(src_full, dst_full))
    f.check()
    return f


def isometry_from_check_equiv(ctx1: QuotientContext, ctx2: QuotientContext, g: Sequence[int]) -> Isometry:
    """Isometry induced by a check-code equivalence ``g`` (``X1[i] -> X2[g[i]]``)."""
    if ctx1.quotient_dim != ctx2.quotient_dim or len(ctx1.singular) != len(ctx2.singular):
        raise ValueError("contexts have different shapes")
    if ctx1.check_code.permute(g) != ctx2.check_code:
        raise ValueError("g is not an equivalence of the check codes")
    pmap = {x: ctx2.singular[g[i]] for i, x in enumerate(ctx1.singular)}
    return isometry_from_point_map(ctx1, ctx2, pmap)


def split_by_codeword(d: LinearCode, x: int):
    """Decompose ``d`` along the codeword ``x``.

    Returns ``(ctx1, ctx2, f, order)`` where ``ctx1`` lives on ``supp(x)``,
    ``ctx2`` on the complement, and ``order`` lists the coordinates of ``d``
    in the glued order, so ``d.permute(inverse(order))`` equals the pair code.
    """
    n = d.length
    if x not in d:
        raise ValueError("x is not a codeword")
    if not 0 < weight(x) < n:
        raise ValueError("x must have weight strictly between 0 and n")
    if not is_triply_even(d):
        raise PreconditionError("split needs a triply even code")
    s2 = support(x)
    s1 = [i for i in range(n) if not x >> i & 1]
    order = s2 + s1  # glued order: supp(x) first
    comp = ones(n) ^ x
    c1 = LinearCode(len(s2), (restrict(r, s2) for r in d.rows))
    c2 = LinearCode(len(s1), (restrict(r, s1) for r in d.rows))
    r1 = LinearCode(len(s2), (restrict(r, s2) for r in subcode_vanishing_on(d, comp).rows))
    r2 = LinearCode(len(s1), (restrict(r, s1) for r in subcode_vanishing_on(d, x).rows))
    ctx1 = quotient_context(c1, r1)
    ctx2 = quotient_context(c2, r2)
    # lift each quotient basis vector back to a codeword of d
    basis = _projection_basis(d, s2)
    proj = Solver([restrict(r, s2) for r in basis])
    cols = []
    for lift in ctx1.lifts:
        full = apply_matrix(basis, proj.coords(lift))
        cols.append(ctx2.project(restrict(full, s1)))
    f = Isometry(ctx1, ctx2, tuple(cols))
    f.check()
    return ctx1, ctx2, f, order


def _projection_basis(d: LinearCode, coords: Sequence[int]) -> list[int]:
    """Codewords of ``d`` whose projections onto ``coords`` form a basis of the projection."""
    chosen, ech = [], []
    for r in d.rows:
        p = restrict(r, coords)
        red = reduce_mod(p, ech)
        if red:
            chosen.append(r)
            ech = list(rref(ech + [red]))
    return chosen
