"""Chain contractions ``(f, g, φ)`` between Z/2 chain complexes.

A contraction of ``C`` onto ``C'`` consists of chain maps ``f: C -> C'`` and
``g: C' -> C`` with ``fg = id`` and a degree +1 map ``φ`` on ``C`` satisfying
``φ∂ + ∂φ = id + gf``.  Maps are stored as dictionaries from a cell to the
support of its image; missing keys mean zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Union

from . import chains
from .chains import ZERO
from .errors import NotABoundaryError, NotACycleError
from .simplicial import SimplicialComplex, Simplex


class GeneratorComplex:
    """Formal generators of homology with zero differential.

    Generators are the simplices that created a class during algebraic
    thinning, kept in filtration order.
    """

    def __init__(self, generators: Iterable[Simplex] = ()):
        self.h: tuple[Simplex, ...] = tuple(tuple(s) for s in generators)
        self._set = frozenset(self.h)

    def __iter__(self) -> Iterator[Simplex]:
        return iter(self.h)

    def __len__(self) -> int:
        return len(self.h)

    def __contains__(self, cell) -> bool:
        return tuple(cell) in self._set

    def __eq__(self, other) -> bool:
        return isinstance(other, GeneratorComplex) and self.h == other.h

    def __repr__(self) -> str:
        return f"GeneratorComplex({list(self.h)})"

    def of_dim(self, q: int) -> list[Simplex]:
        return [s for s in self.h if len(s) == q + 1]

    def betti(self) -> tuple[int, int, int]:
        return tuple(len(self.of_dim(q)) for q in range(3))

    def index(self, cell: Simplex) -> int:
        return self.h.index(tuple(cell))


Target = Union[SimplicialComplex, GeneratorComplex]


def target_boundary(target: Target, c: Iterable[Simplex]) -> frozenset:
    if isinstance(target, GeneratorComplex):
        return ZERO
    return chains.boundary(c)


def _cells(target: Target) -> Iterable[Simplex]:
    return iter(target)


def apply_map(mapping: Mapping[Simplex, frozenset], c: Iterable[Simplex]) -> frozenset:
    out: set = set()
    for s in c:
        img = mapping.get(s)
        if img:
            out.symmetric_difference_update(img)
    return frozenset(out)


@dataclass
class ChainContraction:
    source: SimplicialComplex
    target: Target
    f: dict[Simplex, frozenset]
    g: dict[Simplex, frozenset]
    phi: dict[Simplex, frozenset] = field(default_factory=dict)

    @classmethod
    def identity(cls, K: SimplicialComplex) -> "ChainContraction":
        return cls(K, K, {s: frozenset([s]) for s in K}, {s: frozenset([s]) for s in K}, {})

    def _check_in(self, c, space, name):
        for s in c:
            if s not in space:
                raise ValueError(f"{name}: {s} is not a cell of its domain")

    def apply_f(self, c: Iterable[Simplex]) -> frozenset:
        c = frozenset(c)
        self._check_in(c, self.source, "f")
        return apply_map(self.f, c)

    def apply_g(self, c: Iterable[Simplex]) -> frozenset:
        c = frozenset(c)
        self._check_in(c, self.target, "g")
        return apply_map(self.g, c)

    def apply_phi(self, c: Iterable[Simplex]) -> frozenset:
        c = frozenset(c)
        self._check_in(c, self.source, "phi")
        return apply_map(self.phi, c)

    def to_json(self) -> dict:
        def encode(mapping):
            return [
                [_jsonable(s), [_jsonable(t) for t in chains.sorted_chain(img)]]
                for s, img in sorted(mapping.items(), key=lambda kv: (len(kv[0]), kv[0]))
                if img
            ]

        return {
            "target": "homology" if isinstance(self.target, GeneratorComplex) else "complex",
            "f": encode(self.f),
            "g": encode(self.g),
            "phi": encode(self.phi),
        }


def _jsonable(simplex: Simplex) -> list:
    return [list(v) if isinstance(v, tuple) else v for v in simplex]


@dataclass
class AxiomCheck:
    ok: bool = True
    checked: int = 0
    counterexample: object = None


@dataclass
class VerifyReport:
    fg_identity: AxiomCheck
    chain_maps: AxiomCheck
    homotopy: AxiomCheck

    def __bool__(self) -> bool:
        return self.fg_identity.ok and self.chain_maps.ok and self.homotopy.ok

    @property
    def ok(self) -> bool:
        return bool(self)

    def as_dict(self) -> dict:
        return {
            name: {"ok": chk.ok, "checked": chk.checked,
                   "counterexample": None if chk.counterexample is None else repr(chk.counterexample)}
            for name, chk in (("fg_identity", self.fg_identity),
                              ("chain_maps", self.chain_maps),
                              ("homotopy", self.homotopy))
        }


def verify(c: ChainContraction) -> VerifyReport:
    """Check the three contraction axioms on every cell; failures are data."""
    fg = AxiomCheck()
    for cell in _cells(c.target):
        fg.checked += 1
        if apply_map(c.f, c.g.get(cell, ZERO)) != frozenset([cell]):
            fg.ok, fg.counterexample = False, cell
            break

    cm = AxiomCheck()
    for s in c.source:
        cm.checked += 1
        if target_boundary(c.target, c.f.get(s, ZERO)) != apply_map(c.f, chains.boundary([s])):
            cm.ok, cm.counterexample = False, ("f", s)
            break
    if cm.ok:
        for cell in _cells(c.target):
            cm.checked += 1
            lhs = chains.boundary(c.g.get(cell, ZERO))
            if lhs != apply_map(c.g, target_boundary(c.target, [cell])):
                cm.ok, cm.counterexample = False, ("g", cell)
                break

    ht = AxiomCheck()
    for s in c.source:
        ht.checked += 1
        lhs = apply_map(c.phi, chains.boundary([s])) ^ chains.boundary(c.phi.get(s, ZERO))
        rhs = frozenset([s]) ^ apply_map(c.g, c.f.get(s, ZERO))
        if lhs != rhs:
            ht.ok, ht.counterexample = False, s
            break
    return VerifyReport(fg, cm, ht)


def compose(c1: ChainContraction, c2: ChainContraction) -> ChainContraction:
    """Composite contraction ``(f2 f1, g1 g2, φ1 + g1 φ2 f1)``."""
    if c1.target != c2.source:
        raise ValueError("the first contraction's target is not the second's source")
    f, phi = {}, {}
    for s in c1.source:
        f1 = c1.f.get(s, ZERO)
        img = apply_map(c2.f, f1)
        if img:
            f[s] = img
        ph = c1.phi.get(s, ZERO) ^ apply_map(c1.g, apply_map(c2.phi, f1))
        if ph:
            phi[s] = ph
    g = {cell: apply_map(c1.g, c2.g.get(cell, ZERO)) for cell in _cells(c2.target)}
    return ChainContraction(c1.source, c2.target, f, g, phi)


def homology_class(c: ChainContraction, a: Iterable[Simplex]) -> frozenset:
    """The combination of generators ``f(a)`` representing the class of a cycle."""
    a = frozenset(a)
    if chains.boundary(a):
        raise NotACycleError("chain has non-zero boundary")
    return c.apply_f(a)


def fill_boundary(c: ChainContraction, a: Iterable[Simplex]) -> frozenset:
    """A chain whose boundary is ``a``, namely ``φ(a)``."""
    a = frozenset(a)
    if homology_class(c, a):
        raise NotABoundaryError("cycle represents a non-zero homology class")
    return c.apply_phi(a)
