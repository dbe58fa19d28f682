"""Z/2 chains and cochains.

Both are represented by their support, a ``frozenset`` of simplices of one
dimension.  Addition is symmetric difference and the empty set is zero.  A
cochain's support is the set of simplices on which it takes the value 1.
"""

from __future__ import annotations

from typing import Iterable

from .simplicial import SimplicialComplex, Simplex, facets

Chain = frozenset
Cochain = frozenset

ZERO: frozenset = frozenset()


def chain(*simplices: Iterable) -> frozenset:
    """Build a chain from simplices; repeated simplices cancel in pairs."""
    out = set()
    for s in simplices:
        _toggle(out, tuple(s))
    return frozenset(out)


def add(*chains: Iterable) -> frozenset:
    out = set()
    for c in chains:
        out ^= set(c)
    return frozenset(out)


def chain_dim(c: Iterable[Simplex]) -> int | None:
    """Common dimension of the support, ``None`` for the zero chain."""
    dims = {len(s) - 1 for s in c}
    if len(dims) > 1:
        raise ValueError(f"mixed dimensions {sorted(dims)} in one chain")
    return dims.pop() if dims else None


def _toggle(out: set, item) -> None:
    if item in out:
        out.remove(item)
    else:
        out.add(item)


def boundary(c: Iterable[Simplex]) -> frozenset:
    out: set = set()
    for s in c:
        if len(s) > 1:
            for t in facets(s):
                _toggle(out, t)
    return frozenset(out)


def coboundary(c: Iterable[Simplex], K: SimplicialComplex) -> frozenset:
    """``δc = c∂``: the (q+1)-simplices with an odd number of facets in ``c``."""
    out: set = set()
    co = K.cofaces
    for s in c:
        for t in co[s]:
            _toggle(out, t)
    return frozenset(out)


def evaluate(cochain: Iterable[Simplex], c: Iterable[Simplex]) -> int:
    cochain, c = frozenset(cochain), frozenset(c)
    p, q = chain_dim(cochain), chain_dim(c)
    if p is not None and q is not None and p != q:
        raise ValueError(f"cannot evaluate a {p}-cochain on a {q}-chain")
    return len(cochain & c) & 1


def cup_value(c1: frozenset, p: int, c2: frozenset, simplex: Simplex) -> int:
    """``(c1 ⌣ c2)(σ) = c1(front p-face) · c2(back face)``."""
    return int(simplex[: p + 1] in c1 and simplex[p:] in c2)


def cup(c1: Iterable[Simplex], c2: Iterable[Simplex], K: SimplicialComplex) -> frozenset:
    c1, c2 = frozenset(c1), frozenset(c2)
    p, q = chain_dim(c1), chain_dim(c2)
    if p is None or q is None:
        return ZERO
    if p + q > 3:
        raise ValueError(f"cup of degrees {p} and {q} exceeds dimension 3")
    return frozenset(s for s in K.simplices(p + q) if s[: p + 1] in c1 and s[p:] in c2)


def sorted_chain(c: Iterable[Simplex]) -> list[Simplex]:
    return sorted(c, key=lambda s: (len(s), s))
