from functools import lru_cache
from pathlib import Path

import numpy as np
import pytest

from bcc_cohomology import fixtures
from bcc_cohomology.grid import DigitalPicture
from bcc_cohomology.simplicial import build_representation

DATA = Path(__file__).parent / "data"

PICTURE_FIXTURES = ["torus-shell", "wedge-circles-sphere", "two-tori", "sphere-genus2"]


@lru_cache(maxsize=None)
def picture(name: str) -> DigitalPicture:
    if name == "tetra_tail":
        return fixtures.tetra_tail_picture()
    return fixtures.PICTURES[name]()


@lru_cache(maxsize=None)
def picture_complex(name: str):
    return build_representation(picture(name))


def random_picture(rng: np.random.Generator, max_points: int = 40, extent: int = 3) -> DigitalPicture:
    box = fixtures.bcc_box(-extent, extent)
    n = int(rng.integers(1, max_points + 1))
    idx = rng.choice(len(box), size=n, replace=False)
    return DigitalPicture(frozenset(map(tuple, box[idx].tolist())))


def random_complex(rng, max_points: int = 40, extent: int = 3):
    return build_representation(random_picture(rng, max_points, extent))


@pytest.fixture
def data_dir() -> Path:
    return DATA


@pytest.fixture
def rng():
    return np.random.default_rng(20241015)


# One line per acceptance criterion, printed at the end of the run.
ACCEPTANCE: dict[int, str] = {}


def record(n: int, ok: bool, detail: str) -> None:
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}"
    ACCEPTANCE[n] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[n])
