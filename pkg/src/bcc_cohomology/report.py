"""Run the full analysis of one input and serialise the results.

The report is a plain ``dict`` ready for ``json.dumps``.  Every set is emitted
in sorted order so that repeated runs produce identical bytes; wall-clock
timings are only included on request.
"""

from __future__ import annotations

import json
import logging
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from pathlib import Path

from . import chains
from .algthin import Pipeline, full_pipeline
from .contraction import verify
from .cupring import CupMatrix, cocycle_of, cup_matrix
from .errors import InvariantViolation
from .grid import DigitalPicture, load_picture
from .oracle import betti_oracle, cohomology_cup_oracle
from .simplicial import SimplicialComplex, build_representation, load_sc

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1
INPUT_FORMATS = ("pts-bcc", "pts-cubic", "raw-raster", "sc")


def guess_format(path: str | Path) -> str:
    suffix = Path(path).suffix.lower()
    return {".sc": "sc", ".raw": "raw-raster", ".cubic": "pts-cubic"}.get(suffix, "pts-bcc")


def encode_simplex(s) -> list:
    return [list(v) if isinstance(v, tuple) else v for v in s]


def encode_chain(c) -> list:
    return [encode_simplex(s) for s in chains.sorted_chain(c)]


@dataclass
class Analysis:
    complex: SimplicialComplex
    pipeline: Pipeline
    matrix: CupMatrix
    picture: DigitalPicture | None = None
    timings: dict = field(default_factory=dict)

    @property
    def generators(self):
        return self.pipeline.generators

    def cycle(self, alpha) -> frozenset:
        return self.pipeline.composite.g[alpha]

    def cocycle(self, alpha) -> frozenset:
        return cocycle_of(alpha, self.pipeline.composite)


@contextmanager
def _timed(timings: dict, stage: str):
    t0 = time.perf_counter()
    yield
    timings[stage] = round(time.perf_counter() - t0, 6)


def load_input(path: str | Path, format: str | None = None):
    """Return ``(picture or None, complex)`` for a picture or ``.sc`` file."""
    format = format or guess_format(path)
    if format == "sc":
        return None, load_sc(path)
    if format not in INPUT_FORMATS:
        raise ValueError(f"unknown format {format!r}")
    picture = load_picture(path, format)
    return picture, build_representation(picture)


def run_analysis(
    K: SimplicialComplex,
    *,
    picture: DigitalPicture | None = None,
    thin: bool = True,
    cup_on_full: bool = False,
) -> Analysis:
    timings: dict = {}
    with _timed(timings, "thinning"):
        p = full_pipeline(K, thin=thin)
    with _timed(timings, "compose"):
        composite = p.composite
    with _timed(timings, "cup_matrix"):
        M = cup_matrix(composite if cup_on_full else p.alg)
    if list(p.generators.betti()) != [len(p.generators.of_dim(q)) for q in range(3)]:
        raise InvariantViolation("Betti numbers disagree with generator counts")
    return Analysis(K, p, M, picture, timings)


def build_report(
    analysis: Analysis,
    *,
    source: dict | None = None,
    oracle: bool = False,
    check: bool = False,
    timings: bool = False,
) -> dict:
    p = analysis.pipeline
    H = p.generators
    gens = []
    for i, alpha in enumerate(H, 1):
        gens.append({
            "index": i,
            "dimension": len(alpha) - 1,
            "simplex": encode_simplex(alpha),
            "cycle": encode_chain(analysis.cycle(alpha)),
            "cocycle": encode_chain(analysis.cocycle(alpha)),
        })
    report = {
        "schema_version": SCHEMA_VERSION,
        "input": source or {},
        "counts": {"complex": analysis.complex.counts(), "thinned": p.thinned.counts()},
        "collapses": len(p.collapses),
        "betti": list(p.betti()),
        "generators": gens,
        "cup_matrix": analysis.matrix.to_json(),
        "hb1": analysis.matrix.rank,
    }
    if check:
        t0 = time.perf_counter()
        results = {"topological": verify(p.top), "algebraic": verify(p.alg), "composite": verify(p.composite)}
        analysis.timings["verify"] = round(time.perf_counter() - t0, 6)
        report["verify"] = {k: v.as_dict() for k, v in results.items()}
        bad = [k for k, v in results.items() if not v]
        if bad:
            raise InvariantViolation(f"contraction axioms fail for: {', '.join(bad)}")
    if oracle:
        t0 = time.perf_counter()
        b = betti_oracle(analysis.complex)
        cup = cohomology_cup_oracle(analysis.complex)
        analysis.timings["oracle"] = round(time.perf_counter() - t0, 6)
        report["oracle"] = {
            "betti": list(b[:3]),
            "cup_rank": cup.rank,
            "agree": list(b[:3]) == report["betti"] and b[3] == 0 and cup.rank == report["hb1"],
        }
    if timings:
        report["timings"] = dict(analysis.timings)
    return report


def analyze_file(
    path: str | Path,
    format: str | None = None,
    *,
    thin: bool = True,
    oracle: bool = False,
    check: bool = False,
    timings: bool = False,
    cup_on_full: bool = False,
) -> tuple[Analysis, dict]:
    format = format or guess_format(path)
    t0 = time.perf_counter()
    picture, K = load_input(path, format)
    load_time = round(time.perf_counter() - t0, 6)
    analysis = run_analysis(K, picture=picture, thin=thin, cup_on_full=cup_on_full)
    analysis.timings = {"load": load_time, **analysis.timings}
    source = {"path": str(path), "format": format}
    if picture is not None:
        source["points"] = len(picture)
    return analysis, build_report(analysis, source=source, oracle=oracle, check=check, timings=timings)


def dumps(report) -> str:
    return json.dumps(report, indent=1) + "\n"


def export_cycles(analysis: Analysis, out_dir: str | Path, stem: str = "cycles") -> list[Path]:
    """Write representative cycles and cocycles as OBJ objects plus a JSON sidecar.

    Complexes without coordinates only get the JSON file.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    items = []
    for i, alpha in enumerate(analysis.generators, 1):
        items.append((f"cycle_{i}_dim{len(alpha) - 1}", analysis.cycle(alpha)))
        items.append((f"cocycle_{i}_dim{len(alpha) - 1}", analysis.cocycle(alpha)))
    sidecar = {
        "schema_version": SCHEMA_VERSION,
        "generators": [
            {"index": i, "dimension": len(a) - 1, "simplex": encode_simplex(a),
             "cycle": encode_chain(analysis.cycle(a)), "cocycle": encode_chain(analysis.cocycle(a))}
            for i, a in enumerate(analysis.generators, 1)
        ],
    }
    written = []
    json_path = out_dir / f"{stem}.json"
    json_path.write_text(json.dumps(sidecar, indent=1) + "\n")
    written.append(json_path)
    if not _has_coordinates(analysis.complex):
        log.warning("input has no vertex coordinates; skipping OBJ export")
        return written
    obj_path = out_dir / f"{stem}.obj"
    obj_path.write_text(format_obj(analysis.complex, items))
    written.append(obj_path)
    return written


def _has_coordinates(K: SimplicialComplex) -> bool:
    verts = K.vertices
    return bool(verts) and all(isinstance(v, tuple) and len(v) == 3 for v in verts)


def format_obj(K: SimplicialComplex, objects) -> str:
    """One OBJ object per named chain; vertices are shared across objects."""
    verts = K.vertices
    index = {v: i + 1 for i, v in enumerate(verts)}
    lines = ["# representative (co)cycles"]
    lines += ["v %d %d %d" % v for v in verts]
    for name, c in objects:
        lines.append(f"o {name}")
        for s in chains.sorted_chain(c):
            ids = " ".join(str(index[v]) for v in s)
            if len(s) == 1:
                lines.append(f"p {ids}")
            elif len(s) == 2:
                lines.append(f"l {ids}")
            elif len(s) == 3:
                lines.append(f"f {ids}")
            else:
                for face in ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)):
                    lines.append("f " + " ".join(str(index[s[k]]) for k in face))
    return "\n".join(lines) + "\n"


def write_tables(report: dict, out_dir: str | Path) -> list[Path]:
    """Tab-separated generator and cup-matrix tables."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    gen_path = out_dir / "generators.tsv"
    rows = ["index\tdimension\tsimplex\tcycle_size\tcocycle_size"]
    for g in report["generators"]:
        rows.append("\t".join(map(str, (
            g["index"], g["dimension"], json.dumps(g["simplex"]), len(g["cycle"]), len(g["cocycle"])))))
    gen_path.write_text("\n".join(rows) + "\n")
    cm = report["cup_matrix"]
    cup_path = out_dir / "cup_matrix.tsv"
    header = ["row"] + [f"({j},{k})" for j, k in cm["columns"]]
    rows = ["\t".join(header)]
    for i, bits in enumerate(cm["bits"], 1):
        rows.append("\t".join([f"beta{i}"] + [str(b) for b in bits]))
    cup_path.write_text("\n".join(rows) + "\n")
    return [gen_path, cup_path]
