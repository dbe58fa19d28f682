"""Cup products of cohomology classes, the cup matrix, and its rank HB1.

Given a contraction ``(f, g, φ)`` onto generators ``h``, the cochain
``σ ↦ coefficient of α in f(σ)`` represents the cohomology class dual to the
generator ``α``.  Row ``i`` of the cup matrix collects, for every pair of
1-dimensional generators ``(αj, αk)``, the value of ``αj* f ⌣ αk* f`` on the
representative 2-cycle ``g(βi)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable

import numpy as np

from . import chains
from .contraction import ChainContraction, GeneratorComplex
from .errors import InvariantViolation
from .simplicial import Simplex


def cocycle_of(alpha: Simplex, K: ChainContraction) -> frozenset:
    alpha = tuple(alpha)
    if alpha not in K.target:
        raise KeyError(f"{alpha} is not a generator")
    return frozenset(s for s, img in K.f.items() if alpha in img)


def cup_classes(alpha: Simplex, beta: Simplex, K: ChainContraction) -> frozenset:
    """``α ⌣ β`` as a combination of 2-dimensional generators."""
    alpha, beta = tuple(alpha), tuple(beta)
    if len(alpha) != 2 or len(beta) != 2:
        raise ValueError("cup_classes takes two 1-dimensional generators")
    prod = chains.cup(cocycle_of(alpha, K), cocycle_of(beta, K), K.source)
    return frozenset(
        gamma for gamma in K.target.of_dim(2) if chains.evaluate(prod, K.g[gamma])
    )


def f_odot_f(x: Iterable[Simplex], K: ChainContraction) -> dict[tuple, int]:
    """Ordered pairs ``(αi, αj)`` from the f-images of front and back edges.

    Coefficients are kept per ordered pair; ``(a, b)`` and ``(b, a)`` are
    different keys.  Only keys with coefficient 1 are returned.
    """
    acc: Counter = Counter()
    for s in x:
        if len(s) != 3:
            raise ValueError(f"{s} is not a 2-simplex")
        front = K.f.get(s[:2])
        back = K.f.get(s[1:])
        if not front or not back:
            continue
        for a in front:
            for b in back:
                acc[a, b] ^= 1
    return {pair: 1 for pair, v in acc.items() if v}


@dataclass
class CupMatrix:
    rows: list[Simplex]
    generators: list[Simplex]
    columns: list[tuple[int, int]]
    bits: np.ndarray

    @property
    def rank(self) -> int:
        return gf2_rank(self.bits)

    def to_json(self) -> dict:
        enc = _enc
        return {
            "rows": [enc(b) for b in self.rows],
            "generators": [enc(a) for a in self.generators],
            "columns": [[j + 1, k + 1] for j, k in self.columns],
            "bits": self.bits.astype(int).tolist(),
            "rank": self.rank,
        }


def _enc(simplex):
    return [list(v) if isinstance(v, tuple) else v for v in simplex]


def cup_matrix(K: ChainContraction) -> CupMatrix:
    H: GeneratorComplex = K.target
    ones = H.of_dim(1)
    twos = H.of_dim(2)
    cols = list(combinations_with_replacement(range(len(ones)), 2))
    bits = np.zeros((len(twos), len(cols)), dtype=np.uint8)
    for i, beta in enumerate(twos):
        row = f_odot_f(K.g[beta], K)
        for c, (j, k) in enumerate(cols):
            a, b = ones[j], ones[k]
            v = row.get((a, b), 0)
            if v != row.get((b, a), 0):
                raise InvariantViolation(f"asymmetric cup coefficient for {a}, {b} on {beta}")
            bits[i, c] = v
    return CupMatrix(twos, ones, cols, bits)


def gf2_rank(matrix) -> int:
    """Rank over Z/2 by row reduction."""
    rows = [int("".join("1" if v else "0" for v in r) or "0", 2) for r in np.asarray(matrix) % 2]
    rank = 0
    pivots: dict[int, int] = {}
    for r in rows:
        while r:
            top = r.bit_length() - 1
            if top in pivots:
                r ^= pivots[top]
            else:
                pivots[top] = r
                rank += 1
                break
    return rank


def hb1(M: CupMatrix) -> int:
    return M.rank
