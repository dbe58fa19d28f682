"""Brute-force GF(2) linear algebra used to cross-check the contraction pipeline.

Nothing here touches contractions: Betti numbers come from ranks of boundary
matrices and the cup structure from explicit bases of cocycles and cycles.
Matrices are lists of ``int`` bitmasks, one per column of the boundary map.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .errors import OracleSizeError
from .simplicial import SimplicialComplex

DEFAULT_MAX_SIMPLICES = 60_000


def _check_size(K: SimplicialComplex, limit: int) -> None:
    if len(K) > limit:
        raise OracleSizeError(f"complex has {len(K)} simplices, oracle limit is {limit}")


def boundary_columns(K: SimplicialComplex, q: int) -> list[int]:
    """Column ``j`` is the bitmask of facets of the j-th q-simplex (lexicographic bases)."""
    if q <= 0:
        return [0] * len(K.simplices(max(q, 0)))
    lower = {s: i for i, s in enumerate(K.simplices(q - 1))}
    cols = []
    for s in K.simplices(q):
        mask = 0
        for i in range(len(s)):
            mask ^= 1 << lower[s[:i] + s[i + 1:]]
        cols.append(mask)
    return cols


def coboundary_columns(K: SimplicialComplex, q: int) -> list[int]:
    """Column ``j`` is the bitmask of (q+1)-simplices having the j-th q-simplex as a face."""
    lower = {s: i for i, s in enumerate(K.simplices(q))}
    cols = [0] * len(lower)
    for j, s in enumerate(K.simplices(q + 1)):
        for i in range(len(s)):
            cols[lower[s[:i] + s[i + 1:]]] ^= 1 << j
    return cols


class Eliminator:
    """Incremental row echelon form keyed by leading bit."""

    def __init__(self):
        self.pivots: dict[int, int] = {}

    def reduce(self, v: int) -> int:
        while v:
            top = v.bit_length() - 1
            p = self.pivots.get(top)
            if p is None:
                return v
            v ^= p
        return 0

    def add(self, v: int) -> bool:
        v = self.reduce(v)
        if v:
            self.pivots[v.bit_length() - 1] = v
            return True
        return False

    @property
    def rank(self) -> int:
        return len(self.pivots)


def rank(vectors) -> int:
    e = Eliminator()
    for v in vectors:
        e.add(v)
    return e.rank


def kernel_basis(cols: list[int]) -> list[int]:
    """Basis (as bitmasks over column indices) of the null space of the column map."""
    pivots: dict[int, tuple[int, int]] = {}
    kernel = []
    for j, v in enumerate(cols):
        comb = 1 << j
        while v:
            top = v.bit_length() - 1
            if top not in pivots:
                pivots[top] = (v, comb)
                break
            pv, pc = pivots[top]
            v ^= pv
            comb ^= pc
        if not v:
            kernel.append(comb)
    return kernel


def image_vectors(cols: list[int]) -> list[int]:
    return [c for c in cols if c]


def quotient_basis(sub: list[int], whole: list[int]) -> list[int]:
    """Elements of ``whole`` completing a basis of ``span(sub)`` to ``span(whole)``."""
    e = Eliminator()
    for v in sub:
        e.add(v)
    return [v for v in whole if e.add(v)]


def betti_oracle(K: SimplicialComplex, *, limit: int = DEFAULT_MAX_SIMPLICES) -> tuple[int, int, int, int]:
    _check_size(K, limit)
    ranks = [0] + [rank(boundary_columns(K, q)) for q in range(1, 4)] + [0]
    n = K.counts()
    return tuple(n[q] - ranks[q] - ranks[q + 1] for q in range(4))


@dataclass
class CupOracle:
    cocycles: list[frozenset]   # basis of H^1 as edge sets
    cycles: list[frozenset]     # basis of H_2 as triangle sets
    columns: list[tuple[int, int]]
    bits: list[list[int]]
    rank: int


def _decode(mask: int, basis: list) -> frozenset:
    out = []
    while mask:
        low = mask & -mask
        out.append(basis[low.bit_length() - 1])
        mask ^= low
    return frozenset(out)


def cohomology_cup_oracle(K: SimplicialComplex, *, limit: int = DEFAULT_MAX_SIMPLICES) -> CupOracle:
    """Cup pairing of an H^1 basis evaluated on an H_2 basis."""
    _check_size(K, limit)
    edges, tris = K.simplices(1), K.simplices(2)

    z1 = kernel_basis(coboundary_columns(K, 1))
    b1 = image_vectors(coboundary_columns(K, 0))
    h1 = [_decode(m, edges) for m in quotient_basis(b1, z1)]

    z2 = kernel_basis(boundary_columns(K, 2))
    b2 = image_vectors(boundary_columns(K, 3))
    h2 = [_decode(m, tris) for m in quotient_basis(b2, z2)]

    cols = list(combinations_with_replacement(range(len(h1)), 2))
    bits = []
    for z in h2:
        row = []
        for j, k in cols:
            cj, ck = h1[j], h1[k]
            v = 0
            for s in z:
                if (s[0], s[1]) in cj and (s[1], s[2]) in ck:
                    v ^= 1
            row.append(v)
        bits.append(row)
    r = rank(int("".join(map(str, row)) or "0", 2) for row in bits)
    return CupOracle(h1, h2, cols, bits, r)
