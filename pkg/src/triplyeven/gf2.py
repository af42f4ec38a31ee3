"""Bit-packed linear algebra over GF(2) and binary linear codes.

Vectors are plain Python ints: coordinate ``i`` (0-based) is bit ``i``.
A vector's length is carried by the code or call site that owns it.
Every :class:`LinearCode` stores its basis in reduced row-echelon form,
so two codes are equal as subspaces iff their ``rows`` tuples are equal.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Iterator, Sequence
from fractions import Fraction
from math import comb

import numpy as np

#: Largest dimension :func:`words` will enumerate without an explicit override.
ENUMERATION_CAP = 24


class EnumerationCapError(ValueError):
    pass


class LengthMismatchError(ValueError):
    pass


def weight(u: int) -> int:
    return u.bit_count()


def star(u: int, v: int) -> int:
    """Coordinatewise product; the support is the intersection of supports."""
    return u & v


def ones(n: int) -> int:
    return (1 << n) - 1


def support(u: int) -> list[int]:
    """0-based support of ``u``."""
    out = []
    while u:
        low = u & -u
        out.append(low.bit_length() - 1)
        u ^= low
    return out


def from_support(indices: Iterable[int]) -> int:
    v = 0
    for i in indices:
        v |= 1 << i
    return v


def to_bitstring(u: int, n: int) -> str:
    return "".join("1" if u >> i & 1 else "0" for i in range(n))


def from_bitstring(s: str) -> int:
    """Parse ``"1100"`` style strings, leftmost character is coordinate 0."""
    return from_support(i for i, ch in enumerate(s) if ch == "1")


# ---------------------------------------------------------------------------
# Gaussian elimination


def _reduced_pivots(rows: Iterable[int]) -> dict[int, int]:
    """Fully reduced echelon form as ``{pivot bit: row}``; pivot = highest bit."""
    piv: dict[int, int] = {}
    for r in rows:
        for p, pr in piv.items():
            if r >> p & 1:
                r ^= pr
        if not r:
            continue
        p = r.bit_length() - 1
        for q in piv:
            if piv[q] >> p & 1:
                piv[q] ^= r
        piv[p] = r
    return piv


def rref(rows: Iterable[int]) -> tuple[int, ...]:
    """Reduced row-echelon basis of the span, sorted by decreasing pivot."""
    piv = _reduced_pivots(rows)
    return tuple(piv[p] for p in sorted(piv, reverse=True))


def rank(rows: Iterable[int]) -> int:
    return len(_reduced_pivots(rows))


def kernel_rows(rows: Iterable[int], ncols: int) -> tuple[int, ...]:
    """Basis of ``{x : r.x = 0 for every row r}``."""
    piv = _reduced_pivots(rows)
    free = [c for c in range(ncols) if c not in piv]
    out = []
    for f in free:
        x = 1 << f
        for p, r in piv.items():
            if r >> f & 1:
                x |= 1 << p
        out.append(x)
    return rref(out)


def in_span(v: int, basis: Sequence[int]) -> bool:
    """Membership test against a basis already in reduced echelon form."""
    for r in basis:
        p = r.bit_length() - 1
        if v >> p & 1:
            v ^= r
    return v == 0


def reduce_mod(v: int, basis: Sequence[int]) -> int:
    """Canonical coset representative of ``v`` modulo an echelon ``basis``."""
    for r in basis:
        p = r.bit_length() - 1
        if v >> p & 1:
            v ^= r
    return v


class Solver:
    """Express vectors in terms of a fixed (not necessarily echelon) generating list.

    ``coords(v)`` returns a bitmask ``m`` with ``v = XOR(gens[i] for i in m)``,
    or ``None`` when ``v`` is outside the span.  Generators must be independent.
    """

    def __init__(self, gens: Sequence[int]):
        self.gens = list(gens)
        self._rows: list[tuple[int, int, int]] = []  # (pivot, row, combination mask)
        for i, g in enumerate(self.gens):
            r, m = g, 1 << i
            for p, pr, pm in self._rows:
                if r >> p & 1:
                    r ^= pr
                    m ^= pm
            if not r:
                raise ValueError("generators are linearly dependent")
            self._rows.append((r.bit_length() - 1, r, m))
        self._rows.sort(reverse=True)

    def coords(self, v: int) -> int | None:
        m = 0
        for p, r, rm in self._rows:
            if v >> p & 1:
                v ^= r
                m ^= rm
        return m if v == 0 else None

    def combine(self, mask: int) -> int:
        v = 0
        i = 0
        while mask:
            if mask & 1:
                v ^= self.gens[i]
            mask >>= 1
            i += 1
        return v


# ---------------------------------------------------------------------------
# Codes


class LinearCode:
    """A binary linear code of a fixed length, held as its reduced echelon basis."""

    __slots__ = ("length", "rows")

    def __init__(self, length: int, rows: Iterable[int] = ()):
        if length < 0:
            raise ValueError("length must be nonnegative")
        rows = list(rows)
        limit = 1 << length
        for r in rows:
            if r < 0 or r >= limit:
                raise ValueError(f"row {r:#x} does not fit in length {length}")
        self.length = length
        self.rows = rref(rows)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __contains__(self, v: int) -> bool:
        return in_span(v, self.rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.length == other.length and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.length, self.rows))

    def __repr__(self) -> str:
        return f"LinearCode([{self.length},{self.dim}])"

    def __le__(self, other: LinearCode) -> bool:
        _check_lengths(self, other)
        return all(r in other for r in self.rows)

    def contains_ones(self) -> bool:
        return ones(self.length) in self

    def permute(self, perm: Sequence[int]) -> LinearCode:
        """Image under the coordinate map ``i -> perm[i]``."""
        return LinearCode(self.length, (apply_perm(r, perm) for r in self.rows))

    def words(self, cap: int = ENUMERATION_CAP) -> np.ndarray:
        return words(self, cap)


def _check_lengths(*codes: LinearCode) -> None:
    n = codes[0].length
    for c in codes[1:]:
        if c.length != n:
            raise LengthMismatchError(f"lengths differ: {n} vs {c.length}")


def apply_perm(v: int, perm: Sequence[int]) -> int:
    out = 0
    i = 0
    while v:
        if v & 1:
            out |= 1 << perm[i]
        v >>= 1
        i += 1
    return out


def zero_code(n: int) -> LinearCode:
    return LinearCode(n)


def full_space(n: int) -> LinearCode:
    return LinearCode(n, (1 << i for i in range(n)))


def repetition(n: int) -> LinearCode:
    return LinearCode(n, [ones(n)])


def span(n: int, vectors: Iterable[int]) -> LinearCode:
    return LinearCode(n, vectors)


def dual(c: LinearCode) -> LinearCode:
    return LinearCode(c.length, kernel_rows(c.rows, c.length))


def sum_code(c: LinearCode, d: LinearCode) -> LinearCode:
    _check_lengths(c, d)
    return LinearCode(c.length, c.rows + d.rows)


def meet_code(c: LinearCode, d: LinearCode) -> LinearCode:
    _check_lengths(c, d)
    return dual(sum_code(dual(c), dual(d)))


def direct_sum(*codes: LinearCode) -> LinearCode:
    rows = []
    shift = 0
    for c in codes:
        rows.extend(r << shift for r in c.rows)
        shift += c.length
    return LinearCode(shift, rows)


def juxtapose_diag(c: LinearCode) -> LinearCode:
    """``{(x|x) : x in C}``."""
    n = c.length
    return LinearCode(2 * n, (r | r << n for r in c.rows))


def _check_indices(n: int, s: Iterable[int]) -> list[int]:
    s = sorted(set(s))
    if s and (s[0] < 0 or s[-1] >= n):
        raise IndexError(f"coordinate out of range for length {n}")
    return s


def delete_coordinates(v: int, n: int, removed: Sequence[int]) -> int:
    """Drop the coordinates in ``removed`` and close up the gaps."""
    keep = [i for i in range(n) if i not in set(removed)]
    out = 0
    for j, i in enumerate(keep):
        if v >> i & 1:
            out |= 1 << j
    return out


def puncture(c: LinearCode, s: Iterable[int]) -> LinearCode:
    """Delete the coordinates in ``s`` (0-based) from every codeword."""
    s = _check_indices(c.length, s)
    n = c.length - len(s)
    return LinearCode(n, (delete_coordinates(r, c.length, s) for r in c.rows))


def shorten(c: LinearCode, s: Iterable[int]) -> LinearCode:
    """Keep codewords vanishing on ``s``, then delete the coordinates of ``s``."""
    s = _check_indices(c.length, s)
    mask = from_support(s)
    sub = subcode_vanishing_on(c, mask)
    n = c.length - len(s)
    return LinearCode(n, (delete_coordinates(r, c.length, s) for r in sub.rows))


def subcode_vanishing_on(c: LinearCode, mask: int) -> LinearCode:
    """Codewords of ``c`` whose support avoids ``mask``."""
    # Eliminate the masked coordinates first: pivot on masked bits.
    rows = list(c.rows)
    out = []
    used = [False] * len(rows)
    for bit in support(mask):
        piv = next((i for i, r in enumerate(rows) if not used[i] and r >> bit & 1), None)
        if piv is None:
            continue
        used[piv] = True
        pr = rows[piv]
        for i, r in enumerate(rows):
            if i != piv and r >> bit & 1:
                rows[i] = r ^ pr
    for i, r in enumerate(rows):
        if not used[i]:
            out.append(r)
    return LinearCode(c.length, out)


def pad(c: LinearCode, r: int) -> LinearCode:
    """Append ``r`` zero coordinates."""
    return LinearCode(c.length + r, c.rows)


def restrict(v: int, coords: Sequence[int]) -> int:
    """Project ``v`` onto ``coords`` (in the given order)."""
    out = 0
    for j, i in enumerate(coords):
        if v >> i & 1:
            out |= 1 << j
    return out


def star_code(c: LinearCode, d: LinearCode) -> LinearCode:
    """Span of all products ``u*v``, ``u`` in ``c``, ``v`` in ``d``."""
    _check_lengths(c, d)
    if c == d:
        rows = c.rows
        prods = [rows[i] & rows[j] for i in range(len(rows)) for j in range(i, len(rows))]
    else:
        prods = [u & v for u in c.rows for v in d.rows]
    return LinearCode(c.length, prods)


# ---------------------------------------------------------------------------
# Enumeration and weights


def words(c: LinearCode, cap: int = ENUMERATION_CAP) -> np.ndarray:
    """All codewords as a ``uint64`` array in counter order.

    Word ``i`` is the XOR of ``c.rows[j]`` over the set bits ``j`` of ``i``.
    """
    if c.dim > cap:
        raise EnumerationCapError(f"dimension {c.dim} exceeds enumeration cap {cap}")
    if c.length > 64:
        raise ValueError("word enumeration supports lengths up to 64")
    return span_array(c.rows)


def span_array(gens: Sequence[int]) -> np.ndarray:
    arr = np.zeros(1, dtype=np.uint64)
    for r in gens:
        arr = np.concatenate([arr, arr ^ np.uint64(r)])
    return arr


def iter_words(c: LinearCode, cap: int = ENUMERATION_CAP) -> Iterator[int]:
    for w in words(c, cap):
        yield int(w)


def components(c: LinearCode, cap: int = ENUMERATION_CAP) -> list[list[int]]:
    """Coordinate sets of the indecomposable direct summands of ``c``.

    Coordinates are joined when some codeword of minimal support covers both;
    coordinates outside every support are left out.
    """
    arr = words(c, cap)[1:]
    parent = list(range(c.length))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for x in arr:
        inside = (arr & x) == arr
        if np.count_nonzero(inside) > 1:
            continue  # another codeword sits strictly inside supp(x)
        supp = support(int(x))
        for j in supp[1:]:
            parent[find(j)] = find(supp[0])
    covered = 0
    for r in c.rows:
        covered |= r
    out: dict[int, list[int]] = {}
    for i in support(covered):
        out.setdefault(find(i), []).append(i)
    return sorted(out.values())


def popcount(arr: np.ndarray) -> np.ndarray:
    return np.bitwise_count(arr).astype(np.int64)


class WeightEnumerator:
    """Coefficient list ``a[i]`` = number of codewords of weight ``i``."""

    __slots__ = ("coeffs", "length")

    def __init__(self, length: int, coeffs: Sequence):
        if len(coeffs) != length + 1:
            raise ValueError("need length+1 coefficients")
        self.length = length
        self.coeffs = tuple(coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightEnumerator):
            return NotImplemented
        return self.length == other.length and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.length, self.coeffs))

    def __getitem__(self, i: int):
        return self.coeffs[i]

    def nonzero(self) -> dict[int, int]:
        return {i: a for i, a in enumerate(self.coeffs) if a}

    def __repr__(self) -> str:
        terms = " + ".join(f"{a}x^{i}" for i, a in self.nonzero().items())
        return f"WeightEnumerator({terms})"


def weight_enumerator(c: LinearCode, cap: int = ENUMERATION_CAP) -> WeightEnumerator:
    counts = np.bincount(popcount(words(c, cap)), minlength=c.length + 1)
    return WeightEnumerator(c.length, [int(a) for a in counts])


def weight_distribution_of(vectors: np.ndarray, n: int) -> list[int]:
    return [int(a) for a in np.bincount(popcount(vectors), minlength=n + 1)]


def krawtchouk(j: int, i: int, n: int) -> int:
    return sum((-1) ** s * comb(i, s) * comb(n - i, j - s) for s in range(j + 1))


def macwilliams(we: WeightEnumerator, dim: int) -> WeightEnumerator:
    """Weight enumerator of the dual of an ``[n, dim]`` code.

    Coefficients are ints when integral, otherwise :class:`Fraction` (useful
    for testing hypothetical enumerators).
    """
    n = we.length
    scale = Fraction(1, 2**dim)
    out = []
    for j in range(n + 1):
        b = scale * sum(Fraction(a) * krawtchouk(j, i, n) for i, a in enumerate(we.coeffs) if a)
        out.append(int(b) if b.denominator == 1 else b)
    return WeightEnumerator(n, out)


# ---------------------------------------------------------------------------
# Hex rows and JSON records

HEX_WIDTH = 24


def parse_hex_rows(values: Iterable[int], n: int = HEX_WIDTH) -> LinearCode:
    """Bit ``b`` of each value is coordinate ``b+1`` (coordinate ``b`` internally)."""
    rows = []
    for v in values:
        if v < 0 or v >= 1 << n:
            raise ValueError(f"row value {v:#x} out of range for length {n}")
        rows.append(v)
    return LinearCode(n, rows)


def emit_hex_rows(c: LinearCode) -> list[int]:
    return list(c.rows)


def format_hex_rows(c: LinearCode) -> str:
    width = max(1, (c.length + 3) // 4)
    return "\n".join(f"0x{r:0{width}X}" for r in c.rows)


def read_hex_text(text: str, n: int | None = None) -> LinearCode:
    """Parse whitespace/comma separated ``0x..`` values; ``n`` defaults to 24.

    A leading ``# length N`` comment overrides the default length.
    """
    values = []
    for line in text.splitlines():
        line = line.strip()
        if line.startswith("#"):
            parts = line[1:].split()
            if len(parts) == 2 and parts[0] == "length" and n is None:
                n = int(parts[1])
            continue
        for tok in line.replace(",", " ").split():
            values.append(int(tok, 16))
    return parse_hex_rows(values, HEX_WIDTH if n is None else n)


def code_record(c: LinearCode, with_enumerator: bool = True) -> dict:
    rec = {
        "length": c.length,
        "dim": c.dim,
        "rows_hex": [f"0x{r:X}" for r in c.rows],
    }
    if with_enumerator:
        rec["weight_enumerator"] = list(weight_enumerator(c).coeffs)
    return rec


def code_from_record(rec: dict) -> LinearCode:
    c = LinearCode(rec["length"], (int(h, 16) for h in rec["rows_hex"]))
    if c.dim != rec["dim"]:
        raise ValueError("record dimension does not match its rows")
    return c


def dumps_code(c: LinearCode) -> str:
    return json.dumps(code_record(c), sort_keys=True)
