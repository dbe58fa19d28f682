"""Test pictures and small literature complexes.

Pictures are voxelisations of implicit shapes on the BCC grid: a shell keeps
the grid points within ``thickness`` of a surface, a solid keeps the points
inside it.  Shapes are combined by taking unions of the resulting point sets.
Their homotopy types are checked against the oracle in the test suite.
"""

from __future__ import annotations

import numpy as np

from .grid import DigitalPicture
from .simplicial import SimplicialComplex


def bcc_box(lo, hi) -> np.ndarray:
    """All BCC points with coordinates in ``[lo, hi]`` as an ``(n, 3)`` array."""
    r = np.arange(lo, hi + 1)
    a, b, c = np.meshgrid(r, r, r, indexing="ij")
    pts = np.stack([a.ravel(), b.ravel(), c.ravel()], axis=1)
    ok = ((pts[:, 0] - pts[:, 1]) % 2 == 0) & ((pts[:, 1] - pts[:, 2]) % 2 == 0)
    return pts[ok]


def sphere_sdf(p, center=(0, 0, 0), radius=6.0):
    return np.linalg.norm(p - np.asarray(center, float), axis=1) - radius


def torus_sdf(p, center=(0, 0, 0), major=8.0, minor=3.0, axis=2):
    """Signed distance to a torus whose symmetry axis is coordinate ``axis``."""
    q = p - np.asarray(center, float)
    plane = [i for i in range(3) if i != axis]
    rho = np.hypot(q[:, plane[0]], q[:, plane[1]]) - major
    return np.hypot(rho, q[:, axis]) - minor


def _points(mask, pts) -> frozenset:
    return frozenset(map(tuple, pts[mask].tolist()))


def shell(sdf, thickness: float, extent: int) -> frozenset:
    pts = bcc_box(-extent, extent)
    return _points(np.abs(sdf(pts.astype(float))) <= thickness, pts)


def solid(sdf, extent: int) -> frozenset:
    pts = bcc_box(-extent, extent)
    return _points(sdf(pts.astype(float)) <= 0, pts)


def torus_shell(scale: float = 1.0) -> DigitalPicture:
    """A hollow torus: Betti numbers (1, 2, 1)."""
    s = scale
    sdf = lambda p: torus_sdf(p, major=7.0 * s, minor=3.5 * s)
    return DigitalPicture(shell(sdf, 1.1 * s, int(12 * s)))


def thick_torus(scale: float = 1.0) -> DigitalPicture:
    """Hollow torus whose shell thickness grows with ``scale``."""
    sdf = lambda p: torus_sdf(p, major=9.0, minor=5.0)
    return DigitalPicture(shell(sdf, 1.1 * scale, 17))


def wedge_circles_sphere() -> DigitalPicture:
    """A hollow sphere with two solid rings touching it: S1 v S1 v S2."""
    sph = shell(lambda p: sphere_sdf(p, radius=5.0), 1.1, 20)
    ring1 = solid(lambda p: torus_sdf(p, center=(11.5, 0, 0), major=5.0, minor=1.5, axis=1), 20)
    ring2 = solid(lambda p: torus_sdf(p, center=(-11.5, 0, 0), major=5.0, minor=1.5, axis=2), 20)
    return DigitalPicture(sph | ring1 | ring2)


def _bridge(center, radius: float, extent: int) -> frozenset:
    return solid(lambda p: sphere_sdf(p, center=center, radius=radius), extent)


def two_tori_wedge() -> DigitalPicture:
    """Two hollow tori joined by a small solid ball: T v T."""
    sdf1 = lambda p: torus_sdf(p, center=(-11.0, 0, 0), major=6.0, minor=3.0)
    sdf2 = lambda p: torus_sdf(p, center=(11.0, 0, 0), major=6.0, minor=3.0)
    return DigitalPicture(shell(sdf1, 1.1, 22) | shell(sdf2, 1.1, 22) | _bridge((0, 0, 0), 2.6, 22))


def genus2_shell() -> DigitalPicture:
    """The surface of a solid double torus: Betti numbers (1, 4, 1)."""
    return DigitalPicture(shell(_double_torus, 1.1, 22))


def _double_torus(p):
    a = torus_sdf(p, center=(-6.0, 0, 0), major=5.5, minor=2.8)
    b = torus_sdf(p, center=(6.0, 0, 0), major=5.5, minor=2.8)
    return np.minimum(a, b)


def sphere_genus2_wedge() -> DigitalPicture:
    """A hollow sphere joined by a solid ball to a genus-2 surface."""
    g2 = shell(_double_torus, 1.1, 22)
    sph = shell(lambda p: sphere_sdf(p, center=(0, 0, 11.0), radius=4.5), 1.1, 22)
    return DigitalPicture(g2 | sph | _bridge((0, 0, 5.0), 2.6, 22))


PICTURES = {
    "torus-shell": torus_shell,
    "wedge-circles-sphere": wedge_circles_sphere,
    "two-tori": two_tori_wedge,
    "sphere-genus2": sphere_genus2_wedge,
    "genus2-shell": genus2_shell,
    "thick-torus": thick_torus,
}


TETRA_TAIL_POINTS = ((-1, -1, 1), (-1, 1, 1), (0, 0, 0), (0, 0, 2), (0, 2, 0))


def tetra_tail_picture() -> DigitalPicture:
    return DigitalPicture(frozenset(TETRA_TAIL_POINTS))


def collapse_example() -> SimplicialComplex:
    return SimplicialComplex.from_maximal([(1, 5), (2, 5), (1, 2, 3), (2, 3, 4)])


def incremental_example() -> SimplicialComplex:
    return SimplicialComplex.from_maximal([(1, 4), (1, 2), (2, 3, 4)])


INCREMENTAL_ORDER = [(1,), (2,), (3,), (2, 3), (4,), (3, 4), (1, 4), (1, 2), (2, 4), (2, 3, 4)]

# The 3x3 grid torus labelled so that every cycle, cocycle and cup value of
# the torus example holds.
TORUS9_TRIANGLES = (
    (1, 2, 4), (1, 2, 8), (1, 3, 5), (1, 3, 7), (1, 4, 7), (1, 5, 8),
    (2, 3, 6), (2, 3, 9), (2, 4, 6), (2, 8, 9), (3, 5, 9), (3, 6, 7),
    (4, 5, 6), (4, 5, 9), (4, 7, 9), (5, 6, 8), (6, 7, 8), (7, 8, 9),
)


def torus9() -> SimplicialComplex:
    return SimplicialComplex.from_maximal(TORUS9_TRIANGLES)


def tetrahedron_boundary() -> SimplicialComplex:
    return SimplicialComplex.from_maximal([(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)])


def solid_tetrahedron() -> SimplicialComplex:
    return SimplicialComplex.from_maximal([(1, 2, 3, 4)])


def wedge_s1_s1_s2() -> SimplicialComplex:
    """Two triangles and a tetrahedron boundary sharing vertex 1."""
    return SimplicialComplex.from_maximal([
        (1, 2), (2, 3), (1, 3),
        (1, 4), (4, 5), (1, 5),
        (1, 6, 7), (1, 6, 8), (1, 7, 8), (6, 7, 8),
    ])
