"""Algebraic thinning: a contraction of C(K) onto its homology.

Simplices are added one at a time in a filtration order.  A simplex whose
boundary has zero image under ``f`` creates a homology generator; otherwise it
destroys the generator of smallest filtration index occurring in ``f∂σ`` and
every ``f`` and ``φ`` image containing that generator is updated.

Chains are held as Python ``int`` bitmasks over filtration indices while the
algorithm runs, and converted to simplex sets at the end.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Sequence

from .contraction import ChainContraction, GeneratorComplex, compose
from .errors import InvariantViolation
from .simplicial import SimplicialComplex, Simplex, check_filtration, default_filtration, facets
from .topothin import CollapsePair, collapse, collapse_contraction


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _decode(x: int, order: Sequence[Simplex]) -> frozenset:
    return frozenset(order[i] for i in _bits(x))


def algebraic_thinning(
    K: SimplicialComplex,
    order: Sequence[Simplex] | None = None,
    *,
    trace: list | None = None,
) -> tuple[GeneratorComplex, ChainContraction]:
    """Run the incremental algorithm over ``order`` (default: dimension, then lex).

    If ``trace`` is a list, a snapshot ``(f, φ)`` of the non-zero images is
    appended after every step; this is slow and meant for inspection.
    """
    order = default_filtration(K) if order is None else [tuple(s) for s in order]
    check_filtration(K, order)
    index = {s: i for i, s in enumerate(order)}
    m = len(order)
    f = [0] * m
    phi = [0] * m
    occurs = defaultdict(set)  # generator index -> indices k with it in f[k]
    alive: set[int] = set()

    for i, s in enumerate(order):
        bd = [index[t] for t in facets(s)] if len(s) > 1 else []
        fd = 0
        for t in bd:
            fd ^= f[t]
        if not fd:
            alive.add(i)
            f[i] = 1 << i
            occurs[i].add(i)
        else:
            j = (fd & -fd).bit_length() - 1
            if j not in alive:
                raise InvariantViolation(f"{order[j]} is not a current generator")
            alive.discard(j)
            pd = 1 << i
            for t in bd:
                pd ^= phi[t]
            fd_bits = list(_bits(fd))
            for k in list(occurs[j]):
                new = f[k] ^ fd
                f[k] = new
                for b in fd_bits:
                    if (new >> b) & 1:
                        occurs[b].add(k)
                    else:
                        occurs[b].discard(k)
                phi[k] ^= pd
            if occurs.pop(j, None):
                raise InvariantViolation(f"{order[j]} still occurs after its destruction")
        if trace is not None:
            trace.append((
                {order[k]: _decode(v, order) for k, v in enumerate(f) if v},
                {order[k]: _decode(v, order) for k, v in enumerate(phi) if v},
            ))

    gens = sorted(alive)
    H = GeneratorComplex(order[i] for i in gens)
    g = {}
    for i in gens:
        s = order[i]
        x = 1 << i
        if len(s) > 1:
            for t in facets(s):
                x ^= phi[index[t]]
        g[s] = _decode(x, order)
    fmap = {order[k]: _decode(v, order) for k, v in enumerate(f) if v}
    phimap = {order[k]: _decode(v, order) for k, v in enumerate(phi) if v}
    return H, ChainContraction(K, H, fmap, g, phimap)


def betti(h: GeneratorComplex) -> tuple[int, int, int]:
    b = h.betti()
    if h.of_dim(3):
        raise InvariantViolation("a 3-dimensional homology generator cannot occur in R^3")
    return b


@dataclass
class Pipeline:
    """Everything produced on the way from K to its homology."""

    complex: SimplicialComplex
    thinned: SimplicialComplex
    collapses: list[CollapsePair] = field(default_factory=list)
    top: ChainContraction | None = None
    alg: ChainContraction | None = None
    generators: GeneratorComplex | None = None
    _composite: ChainContraction | None = None

    @property
    def composite(self) -> ChainContraction:
        """The contraction of C(K) onto homology (computed on first use)."""
        if self._composite is None:
            self._composite = compose(self.top, self.alg) if self.collapses else self.alg
        return self._composite

    def betti(self) -> tuple[int, int, int]:
        return betti(self.generators)


def full_pipeline(K: SimplicialComplex, *, thin: bool = True) -> Pipeline:
    if thin:
        M, seq = collapse(K)
    else:
        M, seq = K, []
    top = collapse_contraction(K, M, seq) if seq else ChainContraction.identity(K)
    H, alg = algebraic_thinning(M)
    return Pipeline(K, M, seq, top, alg, H)
