"""Quadratic/bilinear/trilinear forms on doubly even codes, radicals and maximality.

For a doubly even code ``C`` the doubly even radical ``rad C`` is the set of
``y`` in the dual with ``wt(x*y) = 0 mod 4`` for every ``x`` in ``C``; the
triply even radical ``Rad C`` keeps the members of weight ``0 mod 8``.  Both are
point sets; only their intersections with ``C`` are guaranteed linear.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

import numpy as np

from .gf2 import (
    EnumerationCapError,
    LinearCode,
    Solver,
    apply_perm,
    dual,
    kernel_rows,
    meet_code,
    ones,
    popcount,
    reduce_mod,
    rref,
    span_array,
    star_code,
    weight,
)

#: Vectors handled per numpy batch in the coset scans.
CHUNK_BITS = 20


class FormDomainError(ValueError):
    pass


class PreconditionError(ValueError):
    pass


def q_form(u: int) -> int:
    w = weight(u)
    if w % 4:
        raise FormDomainError(f"Q needs weight divisible by 4, got {w}")
    return (w >> 2) & 1


def b_form(u: int, v: int) -> int:
    w = weight(u & v)
    if w % 2:
        raise FormDomainError("B needs an even intersection")
    return (w >> 1) & 1


def t_form(u: int, v: int, w: int) -> int:
    return weight(u & v & w) & 1


def is_doubly_even(c: LinearCode) -> bool:
    rows = c.rows
    if any(weight(r) % 4 for r in rows):
        return False
    return all(weight(rows[i] & rows[j]) % 2 == 0 for i in range(len(rows)) for j in range(i + 1, len(rows)))


def is_maximal_doubly_even(c: LinearCode) -> bool:
    """No doubly even code properly contains ``c``.

    ``C + <v>`` is doubly even exactly for ``v`` in the dual with weight ``0 mod 4``,
    so ``c`` is maximal when those vectors are just its codewords.
    """
    if not is_doubly_even(c):
        return False
    count = 0
    for xs in iter_span_chunks(dual(c).rows):
        count += int(np.count_nonzero(popcount(xs) % 4 == 0))
    return count == 1 << c.dim


def maximalize_doubly_even(c: LinearCode) -> LinearCode:
    """Adjoin dual vectors of weight ``0 mod 4`` until maximal, smallest reduced vector first."""
    if not is_doubly_even(c):
        raise PreconditionError("maximalize_doubly_even needs a doubly even code")
    while True:
        best = None
        for xs in iter_span_chunks(dual(c).rows):
            for x in xs[popcount(xs) % 4 == 0]:
                r = reduce_mod(int(x), c.rows)
                if r and (best is None or r < best):
                    best = r
        if best is None:
            return c
        c = LinearCode(c.length, c.rows + (best,))


def is_triply_even(c: LinearCode) -> bool:
    """Check weights of basis singles, pairs and triples (mod 8, 4, 2)."""
    rows = c.rows
    k = len(rows)
    if any(weight(r) % 8 for r in rows):
        return False
    for i in range(k):
        for j in range(i + 1, k):
            uv = rows[i] & rows[j]
            if weight(uv) % 4:
                return False
            for l in range(j + 1, k):
                if weight(uv & rows[l]) % 2:
                    return False
    return True


def star_dual(c: LinearCode) -> LinearCode:
    """``(C*C)^perp``."""
    return dual(star_code(c, c))


# ---------------------------------------------------------------------------
# small linear-map helpers


def linear_kernel(gens: Sequence[int], images: Sequence[int]) -> list[int]:
    """Kernel of the linear map sending ``gens[i]`` to ``images[i]``, as vectors."""
    rows: list[tuple[int, int, int]] = []  # (pivot, image, source)
    kernel = []
    for g, im in zip(gens, images):
        for p, pim, psrc in rows:
            if im >> p & 1:
                im ^= pim
                g ^= psrc
        if im:
            rows.append((im.bit_length() - 1, im, g))
            rows.sort(reverse=True)
        else:
            kernel.append(g)
    return kernel


class LinearImage:
    """Image of a linear map with a fixed preimage section."""

    def __init__(self, gens: Sequence[int], images: Sequence[int]):
        piv: dict[int, tuple[int, int]] = {}
        for g, im in zip(gens, images):
            for p, (pim, psrc) in piv.items():
                if im >> p & 1:
                    im ^= pim
                    g ^= psrc
            if not im:
                continue
            p = im.bit_length() - 1
            for q, (qim, qsrc) in list(piv.items()):
                if qim >> p & 1:
                    piv[q] = (qim ^ im, qsrc ^ g)
            piv[p] = (im, g)
        self.pivots = piv

    def preimage(self, v: int) -> int | None:
        src = 0
        for p, (pim, psrc) in self.pivots.items():
            if v >> p & 1:
                v ^= pim
                src ^= psrc
        return src if v == 0 else None

    @property
    def basis(self) -> list[int]:
        return [im for im, _ in self.pivots.values()]


def phi(x: int, basis: Sequence[int]) -> int:
    """Bit ``i`` is ``B(basis[i], x)``."""
    out = 0
    for i, c in enumerate(basis):
        if (weight(c & x) >> 1) & 1:
            out |= 1 << i
    return out


def complement_basis(ambient: LinearCode, sub: LinearCode) -> list[int]:
    """Deterministic complement of ``sub`` inside ``ambient`` (echelon pivots)."""
    out = []
    cur = list(sub.rows)
    for r in ambient.rows:
        red = reduce_mod(r, cur)
        if red:
            out.append(r)
            cur = list(rref(cur + [red]))
    return out


def iter_span_chunks(gens: Sequence[int], chunk_bits: int = CHUNK_BITS) -> Iterator[np.ndarray]:
    """Yield the span of ``gens`` in numpy batches (counter order overall)."""
    gens = list(gens)
    low, high = gens[:chunk_bits], gens[chunk_bits:]
    base = span_array(low)
    for mask in range(1 << len(high)):
        off = 0
        for i, h in enumerate(high):
            if mask >> i & 1:
                off ^= h
        yield base ^ np.uint64(off) if off else base


def _bforms_vanish(xs: np.ndarray, basis: Sequence[int]) -> np.ndarray:
    ok = np.ones(xs.shape, dtype=bool)
    for c in basis:
        ok &= ((popcount(xs & np.uint64(c)) >> 1) & 1) == 0
    return ok


# ---------------------------------------------------------------------------
# radicals


@dataclass(frozen=True)
class RadicalSummary:
    code: LinearCode
    star_dual_meet: LinearCode
    c_meet_rad: LinearCode
    c_meet_Rad: LinearCode
    contains_Rad: bool


def c_meet_rad(c: LinearCode) -> LinearCode:
    d = meet_code(star_dual(c), c)
    images = [phi(y, c.rows) for y in d.rows]
    return LinearCode(c.length, linear_kernel(d.rows, images))


def c_meet_Rad(c: LinearCode) -> LinearCode:
    rad = c_meet_rad(c)
    return LinearCode(c.length, linear_kernel(rad.rows, [q_form(r) for r in rad.rows]))


def radical_summary(c: LinearCode) -> RadicalSummary:
    if not is_doubly_even(c):
        raise PreconditionError("radical_summary needs a doubly even code")
    d = meet_code(star_dual(c), c)
    rad = LinearCode(c.length, linear_kernel(d.rows, [phi(y, c.rows) for y in d.rows]))
    Rad = LinearCode(c.length, linear_kernel(rad.rows, [q_form(r) for r in rad.rows]))
    return RadicalSummary(c, d, rad, Rad, not exists_outside_Rad(c))


def _brute_pairs(c: LinearCode, candidates: np.ndarray) -> np.ndarray:
    """Mask of candidates ``y`` with ``wt(x*y) = 0 mod 4`` for every ``x`` in ``c``."""
    cw = span_array(c.rows)
    ok = np.ones(candidates.shape, dtype=bool)
    step = max(1, (1 << 22) // max(1, len(cw)))
    for s in range(0, len(candidates), step):
        block = candidates[s : s + step]
        inter = popcount(block[:, None] & cw[None, :])
        ok[s : s + step] = np.all(inter % 4 == 0, axis=1)
    return ok


def rad_brute(c: LinearCode, ambient: str = "star_dual") -> tuple[set[int], set[int]]:
    """``(rad C, Rad C)`` by direct evaluation of the definitions.

    Candidates are drawn from ``(C*C)^perp`` (``ambient="star_dual"``) or from
    the whole dual (``ambient="dual"``); every codeword of ``C`` is tested.
    """
    if not is_doubly_even(c):
        raise PreconditionError("radicals are defined for doubly even codes")
    amb = star_dual(c) if ambient == "star_dual" else dual(c)
    if amb.dim > 24:
        raise EnumerationCapError("candidate space too large for brute force")
    cand = span_array(amb.rows)
    ok = _brute_pairs(c, cand)
    rad = cand[ok]
    Rad = rad[popcount(rad) % 8 == 0]
    return {int(v) for v in rad}, {int(v) for v in Rad}


def Rad_brute(c: LinearCode) -> set[int]:
    return rad_brute(c)[1]


# ---------------------------------------------------------------------------
# cosets of (C*C)^perp modulo D


class _CosetSpace:
    def __init__(self, c: LinearCode):
        self.code = c
        self.ambient = star_dual(c)
        self.d = meet_code(self.ambient, c)
        self.complement = complement_basis(self.ambient, self.d)
        self.solver = Solver(list(self.d.rows) + self.complement)

    def coset_index(self, v: int) -> int:
        m = self.solver.coords(v)
        if m is None:
            raise ValueError("vector outside (C*C)^perp")
        return m >> self.d.dim

    def rep(self, idx: int) -> int:
        v = 0
        for i, w in enumerate(self.complement):
            if idx >> i & 1:
                v ^= w
        return v


def outside_vectors(c: LinearCode, aut: Iterable[Sequence[int]] = ()) -> list[int]:
    """One representative per ``aut``-orbit of nonzero cosets of ``(C*C)^perp / D``.

    ``aut`` is an iterable of coordinate permutations stabilizing ``c``; each
    orbit is represented by its member with the smallest coset index.
    """
    space = _CosetSpace(c)
    m = len(space.complement)
    gens = [list(g) for g in aut]
    seen = bytearray(1 << m)
    reps = []
    for start in range(1, 1 << m):
        if seen[start]:
            continue
        seen[start] = 1
        reps.append(space.rep(start))
        stack = [start]
        while stack:
            idx = stack.pop()
            v = space.rep(idx)
            for g in gens:
                j = space.coset_index(apply_perm(v, g))
                if not seen[j]:
                    seen[j] = 1
                    stack.append(j)
    return reps


def exists_outside_Rad(c: LinearCode, aut: Iterable[Sequence[int]] | None = None) -> bool:
    """True iff ``Rad C`` is not contained in ``C``.

    Uses the coset criterion on ``(C*C)^perp / D``; that criterion needs the
    all-ones word in ``C`` and length divisible by 8, otherwise the radical is
    enumerated directly.
    """
    if not is_doubly_even(c):
        raise PreconditionError("exists_outside_Rad needs a doubly even code")
    if c.length % 8 or not c.contains_ones():
        _, Rad = rad_brute(c)
        return any(v not in c for v in Rad)
    space = _CosetSpace(c)
    d = space.d
    basis = c.rows
    img = LinearImage(d.rows, [phi(y, basis) for y in d.rows])
    rad_rows = linear_kernel(d.rows, [phi(y, basis) for y in d.rows])
    b1 = any(q_form(r) for r in rad_rows)
    if aut is not None:
        for x in outside_vectors(c, aut):
            y = img.preimage(phi(x, basis))
            if y is not None and (b1 or q_form(x ^ y) == 0):
                return True
        return False
    return _scan_outside(space, basis, img, b1)


def _scan_outside(space: _CosetSpace, basis: Sequence[int], img: LinearImage, b1: bool) -> bool:
    k = len(basis)
    # parity checks of the image subspace inside F_2^k
    checks = kernel_rows(img.basis, k)
    pivots = [(p, pim, psrc) for p, (pim, psrc) in img.pivots.items()]
    for xs in iter_span_chunks(space.complement):
        xs = xs[1:] if xs[0] == 0 else xs
        if not len(xs):
            continue
        # phi(x) as a k-bit integer per row
        ph = np.zeros(xs.shape, dtype=np.uint64)
        for i, cvec in enumerate(basis):
            bit = (popcount(xs & np.uint64(cvec)) >> 1) & 1
            ph |= bit.astype(np.uint64) << np.uint64(i)
        member = np.ones(xs.shape, dtype=bool)
        for h in checks:
            member &= (popcount(ph & np.uint64(h)) & 1) == 0
        if not member.any():
            continue
        if b1:
            return True
        xs, ph = xs[member], ph[member]
        pre = np.zeros(xs.shape, dtype=np.uint64)
        for p, _pim, psrc in pivots:
            sel = ((ph >> np.uint64(p)) & np.uint64(1)).astype(bool)
            pre[sel] ^= np.uint64(psrc)
        if np.any(popcount(xs ^ pre) % 8 == 0):
            return True
    return False


# ---------------------------------------------------------------------------
# maximality


def _radical_cosets(c: LinearCode) -> Iterator[np.ndarray]:
    """Batches of complement vectors ``x`` (inside ``(C*C)^perp``) lying in ``Rad C``."""
    amb = star_dual(c)
    comp = complement_basis(amb, c)
    for xs in iter_span_chunks(comp):
        ok = (popcount(xs) % 8 == 0) & (xs != 0)
        ok &= _bforms_vanish(xs, c.rows)
        if ok.any():
            yield xs[ok]


def is_maximal(c: LinearCode) -> bool:
    """A triply even code is maximal iff no vector outside it lies in its radical."""
    if not is_triply_even(c):
        raise PreconditionError("is_maximal needs a triply even code")
    for _ in _radical_cosets(c):
        return False
    return True


def maximalize(c: LinearCode) -> LinearCode:
    """Adjoin radical vectors until maximal.

    Each step adds the radical vector whose canonical representative modulo
    the current code (reduced against its echelon basis) is the smallest integer.
    """
    if not is_triply_even(c):
        raise PreconditionError("maximalize needs a triply even code")
    while True:
        best = None
        for xs in _radical_cosets(c):
            for x in xs:
                r = reduce_mod(int(x), c.rows)
                if best is None or r < best:
                    best = r
        if best is None:
            return c
        c = LinearCode(c.length, c.rows + (best,))


def all_ones_in(c: LinearCode) -> bool:
    return ones(c.length) in c
