"""Permutation groups and matrix groups over GF(2) with stabilizer chains.

Group elements compose functionally: ``mul(g, h)`` is "apply ``h``, then ``g``".
Permutations are tuples of images.  Matrices are tuples of column images
(``cols[i]`` is the image of the ``i``-th basis vector) acting on ``k``-bit ints.
"""

from __future__ import annotations

from collections.abc import Callable, Hashable, Iterable, Sequence

import numpy as np

Perm = tuple[int, ...]
Matrix = tuple[int, ...]


# ---------------------------------------------------------------------------
# permutations


def perm_identity(n: int) -> Perm:
    return tuple(range(n))


def perm_mul(g: Perm, h: Perm) -> Perm:
    return tuple(g[i] for i in h)


def perm_inv(g: Perm) -> Perm:
    out = [0] * len(g)
    for i, j in enumerate(g):
        out[j] = i
    return tuple(out)


def is_perm(g: Sequence[int]) -> bool:
    return sorted(g) == list(range(len(g)))


# ---------------------------------------------------------------------------
# GF(2) matrices as column tuples


def mat_apply(m: Matrix, v: int) -> int:
    out = 0
    i = 0
    while v:
        if v & 1:
            out ^= m[i]
        v >>= 1
        i += 1
    return out


def mat_mul(g: Matrix, h: Matrix) -> Matrix:
    return tuple(mat_apply(g, c) for c in h)


def mat_identity(k: int) -> Matrix:
    return tuple(1 << i for i in range(k))


def mat_inv(m: Matrix) -> Matrix:
    k = len(m)
    # solve m x = e_i for each i by elimination on augmented columns
    rows = []  # (pivot bit of image, image, source mask)
    for i, c in enumerate(m):
        src = 1 << i
        for p, pim, psrc in rows:
            if c >> p & 1:
                c ^= pim
                src ^= psrc
        if not c:
            raise ValueError("singular matrix")
        p = c.bit_length() - 1
        new = []
        for q, qim, qsrc in rows:
            if qim >> p & 1:
                qim ^= c
                qsrc ^= src
            new.append((q, qim, qsrc))
        rows = new + [(p, c, src)]
    out = [0] * k
    for p, im, src in rows:
        # im is a single bit after full reduction
        out[im.bit_length() - 1] = src
    return tuple(out)


def gl_generators(k: int) -> list[Matrix]:
    """Two generators of GL(k, 2) (one for k <= 2 cases handled explicitly)."""
    if k == 0:
        return []
    if k == 1:
        return []
    ident = list(mat_identity(k))
    transvection = list(ident)
    transvection[1] ^= 1  # e_1 -> e_1 + e_0
    cycle = [1 << ((i + 1) % k) for i in range(k)]
    return [tuple(transvection), tuple(cycle)]


def gl_order(k: int) -> int:
    out = 1
    for i in range(k):
        out *= (1 << k) - (1 << i)
    return out


# ---------------------------------------------------------------------------
# Schreier-Sims


class StabilizerChain:
    """Deterministic Schreier-Sims for a group acting on hashable points."""

    def __init__(
        self,
        gens: Iterable,
        identity,
        mul: Callable,
        inv: Callable,
        act: Callable[[object, Hashable], Hashable],
        base: Sequence[Hashable] = (),
        moved_point: Callable | None = None,
        key: Callable = lambda g: g,
    ):
        self.identity = identity
        self.mul = mul
        self.inv = inv
        self.act = act
        self.moved_point = moved_point
        self.key = key
        self._ident_key = key(identity)
        self.base: list = list(base)
        gens = [g for g in gens if key(g) != self._ident_key]
        self.strong: list[list] = []
        self.transversals: list[dict] = []
        for g in gens:
            if all(act(g, b) == b for b in self.base):
                self._extend_base(g)
        for i in range(len(self.base)):
            self.strong.append([g for g in gens if all(act(g, b) == b for b in self.base[:i])])
            self.transversals.append(self._orbit(i))
        self._complete()

    def _extend_base(self, g) -> None:
        if self.moved_point is None:
            raise ValueError("element fixes the whole base but is not the identity")
        self.base.append(self.moved_point(g))

    def _orbit(self, i: int) -> dict:
        b = self.base[i]
        trans = {b: self.identity}
        queue = [b]
        for p in queue:
            u = trans[p]
            for s in self.strong[i]:
                q = self.act(s, p)
                if q not in trans:
                    trans[q] = self.mul(s, u)
                    queue.append(q)
        return trans

    def strip(self, g):
        for i, b in enumerate(self.base):
            p = self.act(g, b)
            u = self.transversals[i].get(p)
            if u is None:
                return g, i
            g = self.mul(self.inv(u), g)
        return g, len(self.base)

    def _complete(self) -> None:
        # (point, generator index) pairs already sifted at each level; they stay
        # valid because the chain only ever grows
        done: list[set] = [set() for _ in self.base]
        i = len(self.base) - 1
        while i >= 0:
            restart = None
            trans = self.transversals[i]
            for p, u in list(trans.items()):
                for si, s in enumerate(self.strong[i]):
                    if (p, si) in done[i]:
                        continue
                    done[i].add((p, si))
                    sp = self.act(s, p)
                    schreier = self.mul(self.inv(trans[sp]), self.mul(s, u))
                    h, j = self.strip(schreier)
                    if j < len(self.base) or self.key(h) != self._ident_key:
                        if j == len(self.base):
                            self._extend_base(h)
                            self.strong.append([])
                            self.transversals.append({self.base[-1]: self.identity})
                            done.append(set())
                        for l in range(i + 1, j + 1):
                            self.strong[l].append(h)
                            self.transversals[l] = self._orbit(l)
                        restart = j
                        break
                if restart is not None:
                    break
            if restart is not None:
                i = restart
            else:
                i -= 1

    def order(self) -> int:
        out = 1
        for t in self.transversals:
            out *= len(t)
        return out

    def contains(self, g) -> bool:
        h, j = self.strip(g)
        return j == len(self.base) and self.key(h) == self._ident_key

    def basic_orbits(self) -> list[list]:
        return [list(t) for t in self.transversals]

# ---------------------------------------------------------------------------
# user-facing groups


def orbits_of(gens: Sequence[Callable[[int], int]] | Sequence, points: Iterable, act: Callable) -> list[list]:
    """Partition ``points`` into orbits; each orbit listed from its minimum point."""
    points = list(points)
    seen: set = set()
    out = []
    for p in sorted(points):
        if p in seen:
            continue
        seen.add(p)
        orb = [p]
        for q in orb:
            for g in gens:
                r = act(g, q)
                if r not in seen:
                    seen.add(r)
                    orb.append(r)
        out.append(sorted(orb))
    return out


class PermGroup:
    """Group of permutations of ``range(degree)`` given by generators."""

    def __init__(self, degree: int, gens: Iterable[Sequence[int]] = ()):
        self.degree = degree
        self.gens = [tuple(g) for g in gens]
        for g in self.gens:
            if len(g) != degree or not is_perm(g):
                raise ValueError("generator is not a permutation of the right degree")
        self._chain: StabilizerChain | None = None

    @property
    def chain(self) -> StabilizerChain:
        if self._chain is None:
            ident = perm_identity(self.degree)
            self._chain = StabilizerChain(
                self.gens,
                ident,
                perm_mul,
                perm_inv,
                lambda g, p: g[p],
                moved_point=lambda g: next(i for i, j in enumerate(g) if i != j),
            )
        return self._chain

    def order(self) -> int:
        return self.chain.order()

    def __contains__(self, g: Sequence[int]) -> bool:
        return self.chain.contains(tuple(g))
    def orbits(self, points: Iterable[int] | None = None) -> list[list[int]]:
        pts = range(self.degree) if points is None else points
        return orbits_of(self.gens, pts, lambda g, p: g[p])


class MatrixGroup:
    """Subgroup of GL(k, 2) given by column-tuple generators."""

    def __init__(self, k: int, gens: Iterable[Sequence[int]] = (), order: int | None = None):
        self.k = k
        self.gens = [tuple(g) for g in gens]
        self.known_order = order
        self._chain: StabilizerChain | None = None

    @property
    def identity(self) -> Matrix:
        return mat_identity(self.k)

    @property
    def chain(self) -> StabilizerChain:
        """Stabilizer chain over the action on all ``2^k`` vectors (numpy permutations)."""
        if self._chain is None:
            self._chain = StabilizerChain(
                [matrix_to_vector_perm(g) for g in self.gens],
                np.arange(1 << self.k, dtype=np.int64),
                _vp_mul,
                _vp_inv,
                _vp_act,
                base=[1 << i for i in range(self.k)],
                key=_vp_key,
            )
        return self._chain

    def order(self) -> int:
        if self.known_order is None:
            self.known_order = self.chain.order()
        return self.known_order

    def __contains__(self, g: Sequence[int]) -> bool:
        return self.chain.contains(matrix_to_vector_perm(g))

    def orbits_on_vectors(self, nonzero: bool = True) -> list[list[int]]:
        pts = range(1 if nonzero else 0, 1 << self.k)
        return orbits_of(self.gens, pts, mat_apply)

    def conjugate(self, f: Matrix) -> MatrixGroup:
        """``f^-1 G f``."""
        fi = mat_inv(f)
        return MatrixGroup(self.k, [mat_mul(fi, mat_mul(g, f)) for g in self.gens])

    def is_subgroup_of(self, other: MatrixGroup) -> bool:
        return all(g in other for g in self.gens)


def matrix_to_vector_perm(m: Sequence[int]) -> np.ndarray:
    """The permutation of all ``2^k`` vectors induced by a matrix."""
    arr = np.zeros(1, dtype=np.int64)
    for c in m:
        arr = np.concatenate([arr, arr ^ c])
    return arr


def vector_perm_to_matrix(p: np.ndarray, k: int) -> Matrix:
    return tuple(int(p[1 << i]) for i in range(k))


def _vp_mul(g: np.ndarray, h: np.ndarray) -> np.ndarray:
    return g[h]


def _vp_inv(g: np.ndarray) -> np.ndarray:
    out = np.empty_like(g)
    out[g] = np.arange(len(g), dtype=g.dtype)
    return out


def _vp_act(g: np.ndarray, p: int) -> int:
    return int(g[p])


def _vp_key(g: np.ndarray) -> bytes:
    return g.tobytes()


def gl_group(k: int) -> MatrixGroup:
    return MatrixGroup(k, gl_generators(k))
