"""Simplices, simplicial complexes and the simplicial representation K(I).

A simplex is a strictly increasing tuple of vertices.  Vertices are either BCC
grid points (compared lexicographically) or integer labels for complexes that
do not come from a picture.  All vertices of one complex must be mutually
comparable.
"""

from __future__ import annotations

import enum
from collections import defaultdict
from functools import cached_property
from itertools import combinations
from pathlib import Path
from typing import Hashable, Iterable, Iterator, Sequence

import numpy as np

from .errors import FiltrationError, InvariantViolation, ParseError
from .grid import DigitalPicture, are_adjacent

Vertex = Hashable
Simplex = tuple

MAX_DIM = 3


def dim(simplex: Simplex) -> int:
    return len(simplex) - 1


def facets(simplex: Simplex) -> list[Simplex]:
    """The codimension-one faces, vertex ``i`` deleted in position ``i``."""
    if len(simplex) < 2:
        raise ValueError(f"a {dim(simplex)}-simplex has no facets")
    return [simplex[:i] + simplex[i + 1:] for i in range(len(simplex))]


def faces(simplex: Simplex) -> Iterator[Simplex]:
    """All non-empty faces, including the simplex itself."""
    for k in range(1, len(simplex) + 1):
        yield from combinations(simplex, k)


def simplex_key(simplex: Simplex):
    return (len(simplex), simplex)


class Role(str, enum.Enum):
    MAXIMAL = "maximal"
    FREE = "free"
    SHARED = "shared"


class SimplicialComplex:
    """A face-closed set of simplices of dimension at most 3.

    Instances are immutable; derived indices are built lazily.
    """

    def __init__(self, simplices: Iterable[Simplex] = (), *, check: bool = True):
        by_dim: list[set] = [set() for _ in range(MAX_DIM + 1)]
        for s in simplices:
            s = tuple(s)
            if not s:
                continue
            if len(s) > MAX_DIM + 1:
                raise ValueError(f"simplex {s} has dimension > {MAX_DIM}")
            by_dim[len(s) - 1].add(s)
        self._by_dim = tuple(frozenset(d) for d in by_dim)
        if check:
            self._check()

    def _check(self):
        for q in range(1, MAX_DIM + 1):
            for s in self._by_dim[q]:
                if any(s[i] >= s[i + 1] for i in range(len(s) - 1)):
                    raise ValueError(f"simplex {s} is not strictly increasing")
                for t in facets(s):
                    if t not in self._by_dim[q - 1]:
                        raise ValueError(f"face {t} of {s} is missing")

    @classmethod
    def from_maximal(cls, maximal: Iterable[Sequence[Vertex]]) -> "SimplicialComplex":
        """Close a collection of simplices under taking faces."""
        out = set()
        for s in maximal:
            s = tuple(sorted(s))
            if len(set(s)) != len(s):
                raise ValueError(f"repeated vertex in {s}")
            out.update(faces(s))
        return cls(out, check=False)

    def __contains__(self, simplex) -> bool:
        simplex = tuple(simplex)
        return 0 < len(simplex) <= MAX_DIM + 1 and simplex in self._by_dim[len(simplex) - 1]

    def __len__(self) -> int:
        return sum(len(d) for d in self._by_dim)

    def __iter__(self) -> Iterator[Simplex]:
        for q in range(MAX_DIM + 1):
            yield from self.simplices(q)

    def __eq__(self, other) -> bool:
        return isinstance(other, SimplicialComplex) and self._by_dim == other._by_dim

    def __hash__(self):
        return hash(self._by_dim)

    def __repr__(self) -> str:
        return f"SimplicialComplex(counts={self.counts()})"

    def simplices(self, q: int) -> list[Simplex]:
        if not 0 <= q <= MAX_DIM:
            return []
        return self._sorted[q]

    def simplex_set(self, q: int) -> frozenset:
        if not 0 <= q <= MAX_DIM:
            return frozenset()
        return self._by_dim[q]

    @cached_property
    def _sorted(self) -> tuple[list[Simplex], ...]:
        return tuple(sorted(d) for d in self._by_dim)

    def counts(self) -> list[int]:
        return [len(d) for d in self._by_dim]

    @property
    def dimension(self) -> int:
        return max((q for q in range(MAX_DIM + 1) if self._by_dim[q]), default=-1)

    @property
    def vertices(self) -> list[Vertex]:
        return [s[0] for s in self.simplices(0)]

    @cached_property
    def cofaces(self) -> dict[Simplex, tuple[Simplex, ...]]:
        """Map each simplex to the simplices having it as a facet."""
        co = defaultdict(list)
        for q in range(1, MAX_DIM + 1):
            for s in self.simplices(q):
                for t in facets(s):
                    co[t].append(s)
        return {s: tuple(co.get(s, ())) for s in self}

    def maximal_simplices(self) -> list[Simplex]:
        co = self.cofaces
        return [s for s in self if not co[s]]

    def classify(self, simplex: Simplex) -> Role:
        simplex = tuple(simplex)
        if simplex not in self:
            raise KeyError(f"{simplex} is not in the complex")
        n = len(self.cofaces[simplex])
        if n == 0:
            return Role.MAXIMAL
        return Role.FREE if n == 1 else Role.SHARED

    def without(self, removed: Iterable[Simplex]) -> "SimplicialComplex":
        removed = set(removed)
        return SimplicialComplex((s for s in self if s not in removed))

    def relabel(self, mapping) -> "SimplicialComplex":
        """Apply a vertex map, re-sorting every simplex."""
        return SimplicialComplex.from_maximal(
            tuple(mapping(v) for v in s) for s in self.maximal_simplices()
        )


Filtration = list


def default_filtration(K: SimplicialComplex) -> list[Simplex]:
    """Simplices by dimension, then lexicographically."""
    return list(K)


def check_filtration(K: SimplicialComplex, order: Sequence[Simplex]) -> None:
    seen = set()
    for s in order:
        s = tuple(s)
        if s not in K:
            raise FiltrationError(f"{s} is not a simplex of the complex")
        if s in seen:
            raise FiltrationError(f"{s} appears twice")
        if len(s) > 1 and any(t not in seen for t in facets(s)):
            raise FiltrationError(f"{s} precedes one of its faces")
        seen.add(s)
    if len(seen) != len(K):
        raise FiltrationError("order does not list every simplex")


def build_representation(picture: DigitalPicture, *, check: bool = True) -> SimplicialComplex:
    """The clique complex of the 14-adjacency graph on the black points."""
    pts = picture.black
    up: dict = {}
    for p in pts:
        up[p] = {q for q in _candidate_neighbors(p) if q in pts and q > p}
    out: list[Simplex] = []
    for v in sorted(pts):
        out.append((v,))
        nv = up[v]
        for u in nv:
            out.append((v, u))
            nvu = nv & up[u]
            for w in nvu:
                out.append((v, u, w))
                for x in nvu & up[w]:
                    out.append((v, u, w, x))
                    if check and nvu & up[w] & up[x]:
                        raise InvariantViolation(f"5-clique of black points at {(v, u, w, x)}")
    K = SimplicialComplex(out, check=False)
    if check:
        for tet in K.simplices(3):
            e = np.array(tet[1:]) - np.array(tet[0])
            if round(np.linalg.det(e)) == 0:
                raise InvariantViolation(f"degenerate tetrahedron {tet}")
    return K


def _candidate_neighbors(p):
    a, b, c = p
    return [
        (a - 2, b, c), (a + 2, b, c), (a, b - 2, c), (a, b + 2, c), (a, b, c - 2), (a, b, c + 2),
        (a - 1, b - 1, c - 1), (a - 1, b - 1, c + 1), (a - 1, b + 1, c - 1), (a - 1, b + 1, c + 1),
        (a + 1, b - 1, c - 1), (a + 1, b - 1, c + 1), (a + 1, b + 1, c - 1), (a + 1, b + 1, c + 1),
    ]


def is_clique(points: Sequence) -> bool:
    return all(are_adjacent(p, q) for p, q in combinations(points, 2))


def parse_sc(text: str) -> SimplicialComplex:
    """Parse one maximal simplex per line; labels are integers when possible."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) > MAX_DIM + 1:
            raise ParseError(f"line {lineno}: more than {MAX_DIM + 1} vertices")
        rows.append(fields)
    try:
        rows = [[int(v) for v in r] for r in rows]
    except ValueError:
        pass
    try:
        return SimplicialComplex.from_maximal(rows)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def load_sc(path: str | Path) -> SimplicialComplex:
    return parse_sc(Path(path).read_text())


def format_sc(K: SimplicialComplex) -> str:
    return "".join(" ".join(str(v) for v in s) + "\n" for s in K.maximal_simplices())
