"""Digital pictures on the body-centered cubic grid.

Grid points are plain ``(a, b, c)`` integer tuples.  A BCC point has all three
coordinates of the same parity; its 14 neighbours are the six axial points at
distance 2 and the eight diagonal points at ``(±1, ±1, ±1)``.

Pictures given on the cubic (14,14) grid are mapped onto the BCC grid with the
linear isomorphism ``(x, y, z) -> (x + y - 2z, -x + y, -x - y)``.
"""

from __future__ import annotations

import enum
import struct
from dataclasses import dataclass, field
from itertools import product
from pathlib import Path
from typing import Iterable

import numpy as np

from .errors import ParityError, ParseError

Point = tuple[int, int, int]

BCC_OFFSETS: tuple[Point, ...] = (
    (-2, 0, 0), (2, 0, 0), (0, -2, 0), (0, 2, 0), (0, 0, -2), (0, 0, 2),
) + tuple(product((-1, 1), repeat=3))

_BCC_OFFSET_SET = frozenset(BCC_OFFSETS)


class SourceGrid(str, enum.Enum):
    BCC = "bcc"
    CUBIC14 = "cubic14"


def is_bcc(p: Point) -> bool:
    a, b, c = p
    return (a - b) % 2 == 0 and (b - c) % 2 == 0


def neighbors14_bcc(p: Point) -> list[Point]:
    if not is_bcc(p):
        raise ParityError(f"{p} is not a BCC grid point")
    a, b, c = p
    return [(a + da, b + db, c + dc) for da, db, dc in BCC_OFFSETS]


def are_adjacent(p: Point, q: Point) -> bool:
    return (q[0] - p[0], q[1] - p[1], q[2] - p[2]) in _BCC_OFFSET_SET


def cubic_to_bcc(p: Point) -> Point:
    x, y, z = p
    return (x + y - 2 * z, -x + y, -x - y)


def bcc_to_cubic(p: Point) -> Point:
    """Inverse of :func:`cubic_to_bcc`."""
    a, b, c = p
    if not is_bcc(p):
        raise ParityError(f"{p} is not a BCC grid point")
    x = -(b + c) // 2
    y = (b - c) // 2
    z = (x + y - a) // 2
    return (x, y, z)


# The cubic offsets are the preimages of the BCC offsets, so adjacency is
# preserved exactly by cubic_to_bcc.
CUBIC_OFFSETS: tuple[Point, ...] = tuple(bcc_to_cubic(v) for v in BCC_OFFSETS)


def neighbors14_cubic(p: Point) -> list[Point]:
    x, y, z = p
    return [(x + dx, y + dy, z + dz) for dx, dy, dz in CUBIC_OFFSETS]


@dataclass(frozen=True)
class DigitalPicture:
    """A finite set of black BCC points.

    ``source_grid`` records whether the points were read from the cubic grid;
    they are always stored in BCC coordinates.
    """

    black: frozenset[Point] = field(default_factory=frozenset)
    source_grid: SourceGrid = SourceGrid.BCC

    def __post_init__(self):
        black = frozenset(tuple(int(v) for v in p) for p in self.black)
        for p in black:
            if len(p) != 3:
                raise ParseError(f"expected 3 coordinates, got {p}")
            if not is_bcc(p):
                raise ParityError(f"{p} is not a BCC grid point")
        object.__setattr__(self, "black", black)

    @classmethod
    def from_cubic(cls, points: Iterable[Point]) -> "DigitalPicture":
        return cls(frozenset(cubic_to_bcc(p) for p in points), SourceGrid.CUBIC14)

    def __len__(self) -> int:
        return len(self.black)

    def sorted_points(self) -> list[Point]:
        return sorted(self.black)

    def transformed(self, fn) -> "DigitalPicture":
        return DigitalPicture(frozenset(fn(p) for p in self.black), self.source_grid)


PICTURE_FORMATS = ("pts-bcc", "pts-cubic", "raw-raster")


def parse_pts(text: str) -> list[Point]:
    points = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 3:
            raise ParseError(f"line {lineno}: expected 3 integers, got {line!r}")
        try:
            points.append(tuple(int(v) for v in fields))
        except ValueError:
            raise ParseError(f"line {lineno}: expected 3 integers, got {line!r}") from None
    return points


def format_pts(points: Iterable[Point], header: str | None = None) -> str:
    lines = [f"# {header}"] if header else []
    lines += ["%d %d %d" % p for p in sorted(points)]
    return "\n".join(lines) + "\n"


RASTER_HEADER = struct.Struct("<III4x")


def parse_raster(data: bytes) -> list[Point]:
    """Black cubic-grid voxels of a raw raster (x-fastest byte order)."""
    if len(data) < RASTER_HEADER.size:
        raise ParseError("raster shorter than its 16-byte header")
    nx, ny, nz = RASTER_HEADER.unpack_from(data)
    body = data[RASTER_HEADER.size:]
    if len(body) != nx * ny * nz:
        raise ParseError(f"raster body has {len(body)} bytes, header says {nx}x{ny}x{nz}")
    vox = np.frombuffer(body, dtype=np.uint8).reshape(nz, ny, nx)
    zs, ys, xs = np.nonzero(vox)
    return [(int(x), int(y), int(z)) for x, y, z in zip(xs, ys, zs)]


def encode_raster(points: Iterable[Point]) -> bytes:
    """Inverse of :func:`parse_raster` for points with non-negative coordinates."""
    pts = list(points)
    dims = [max((p[i] for p in pts), default=-1) + 1 for i in range(3)]
    vox = np.zeros((dims[2], dims[1], dims[0]), dtype=np.uint8)
    for x, y, z in pts:
        vox[z, y, x] = 1
    return RASTER_HEADER.pack(*dims) + vox.tobytes()


def load_picture(path: str | Path, format: str = "pts-bcc") -> DigitalPicture:
    path = Path(path)
    if format == "pts-bcc":
        return DigitalPicture(frozenset(parse_pts(path.read_text())))
    if format == "pts-cubic":
        return DigitalPicture.from_cubic(parse_pts(path.read_text()))
    if format == "raw-raster":
        return DigitalPicture.from_cubic(parse_raster(path.read_bytes()))
    raise ValueError(f"unknown picture format {format!r}; expected one of {PICTURE_FORMATS}")


def save_pts(picture: DigitalPicture, path: str | Path) -> None:
    Path(path).write_text(format_pts(picture.black))
