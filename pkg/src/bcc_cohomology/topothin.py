"""Topological thinning by elementary simplicial collapses.

The collapse step repeatedly takes the first maximal simplex (in order of
decreasing dimension, then lexicographic) that has a free facet, and removes
it together with its lexicographically smallest free facet.  A heap with lazy
invalidation gives the same sequence as rescanning after every removal.
"""

from __future__ import annotations

import heapq

from .chains import ZERO
from .contraction import ChainContraction, apply_map
from .simplicial import SimplicialComplex, Simplex, facets

CollapsePair = tuple[Simplex, Simplex]


def _scan_key(s: Simplex):
    return (-len(s), s)


def collapse(K: SimplicialComplex) -> tuple[SimplicialComplex, list[CollapsePair]]:
    """Collapse ``K`` until no maximal simplex has a free facet.

    Returns the thinned complex and the collapse pairs ``(facet, simplex)``,
    most recent first.
    """
    cofaces = K.cofaces
    alive = set(K)
    count = {s: len(cofaces[s]) for s in K}

    def free_facet(s):
        if count[s] != 0 or len(s) < 2:
            return None
        free = [t for t in facets(s) if count[t] == 1]
        return min(free) if free else None

    heap = [_scan_key(s) for s in K if free_facet(s) is not None]
    heapq.heapify(heap)
    seq: list[CollapsePair] = []

    while heap:
        _, s = heapq.heappop(heap)
        if s not in alive:
            continue
        t = free_facet(s)
        if t is None:
            continue
        alive.discard(s)
        alive.discard(t)
        seq.append((t, s))
        touched = []
        for u in facets(s):
            count[u] -= 1
            if u != t:
                touched.append(u)
        if len(t) > 1:
            for u in facets(t):
                count[u] -= 1
                touched.append(u)
        for u in touched:
            if free_facet(u) is not None:
                heapq.heappush(heap, _scan_key(u))
            for w in cofaces[u]:
                if w in alive and free_facet(w) is not None:
                    heapq.heappush(heap, _scan_key(w))

    seq.reverse()
    return SimplicialComplex(alive, check=False), seq


def replay(K: SimplicialComplex, seq: list[CollapsePair]) -> SimplicialComplex:
    """Apply the pairs chronologically, checking each facet is free when removed."""
    current = K
    for t, s in reversed(seq):
        if current.classify(s).value != "maximal" or current.cofaces[t] != (s,):
            raise ValueError(f"({t}, {s}) is not an elementary collapse")
        current = current.without([t, s])
    return current


def collapse_contraction(
    K: SimplicialComplex, M: SimplicialComplex, seq: list[CollapsePair]
) -> ChainContraction:
    """Contraction of C(K) onto C(M) induced by the collapse pairs."""
    f = {s: frozenset([s]) for s in K}
    phi: dict = {}
    for t, s in seq:
        if s not in K or t not in K or len(s) != len(t) + 1 or t not in facets(s):
            raise ValueError(f"collapse pair ({t}, {s}) does not match the complex")
        rest = [u for u in facets(s) if u != t]
        f[t] = apply_map(f, rest)
        phi[t] = frozenset([s]) ^ apply_map(phi, rest)
        f[s] = ZERO
    f = {s: img for s, img in f.items() if img}
    phi = {s: img for s, img in phi.items() if img}
    g = {s: frozenset([s]) for s in M}
    return ChainContraction(K, M, f, g, phi)
