"""Matplotlib figures for an analysis: cup matrix, simplex counts, cycles."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
from mpl_toolkits.mplot3d.art3d import Line3DCollection, Poly3DCollection  # noqa: E402

DIM_COLORS = {0: "black", 1: "tab:blue", 2: "tab:green", 3: "tab:red"}


def plot_cup_matrix(report: dict, path: Path) -> Path:
    cm = report["cup_matrix"]
    bits = np.array(cm["bits"], dtype=float).reshape(len(cm["rows"]), len(cm["columns"]))
    w = max(3.0, 0.45 * len(cm["columns"]) + 1.5)
    h = max(1.6, 0.45 * len(cm["rows"]) + 1.2)
    fig, ax = plt.subplots(figsize=(w, h))
    if bits.size:
        ax.imshow(bits, cmap="Greys", vmin=0, vmax=1, aspect="equal")
    ax.set_xticks(range(len(cm["columns"])))
    ax.set_xticklabels([f"({j},{k})" for j, k in cm["columns"]], rotation=90, fontsize=8)
    ax.set_yticks(range(len(cm["rows"])))
    ax.set_yticklabels([f"β{i + 1}" for i in range(len(cm["rows"]))], fontsize=8)
    ax.set_title(f"cup matrix, HB1 = {cm['rank']}", fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_counts(report: dict, path: Path) -> Path:
    before = report["counts"]["complex"]
    after = report["counts"]["thinned"]
    x = np.arange(len(before))
    fig, ax = plt.subplots(figsize=(4.5, 3))
    ax.bar(x - 0.2, before, width=0.4, label="K(I)", color="0.6")
    ax.bar(x + 0.2, after, width=0.4, label="thinned", color="tab:blue")
    ax.set_xticks(x)
    ax.set_xticklabels([f"dim {q}" for q in x])
    ax.set_ylabel("simplices")
    ax.legend(frameon=False, fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_generators(report: dict, path: Path, *, kind: str = "cycle") -> Path | None:
    """Each positive-dimensional generator's cycle (or cocycle) drawn over the picture."""
    gens = [g for g in report["generators"] if g["dimension"] > 0]
    if not gens or not all(isinstance(v, list) for g in gens for s in g[kind] for v in s):
        return None
    n = len(gens)
    ncols = min(n, 3)
    nrows = -(-n // ncols)
    fig = plt.figure(figsize=(3.6 * ncols, 3.4 * nrows))
    for i, g in enumerate(gens, 1):
        ax = fig.add_subplot(nrows, ncols, i, projection="3d")
        segs, tris = [], []
        for s in g[kind]:
            if len(s) == 2:
                segs.append(s)
            elif len(s) == 3:
                tris.append(s)
        color = DIM_COLORS[g["dimension"]]
        if tris:
            ax.add_collection3d(Poly3DCollection(tris, facecolor=color, alpha=0.35, edgecolor="none"))
        if segs:
            ax.add_collection3d(Line3DCollection(segs, colors=color, linewidths=1.2))
        pts = np.array([v for s in g[kind] for v in s], dtype=float)
        if len(pts):
            lo, hi = pts.min(axis=0) - 1, pts.max(axis=0) + 1
            ax.set_xlim(lo[0], hi[0])
            ax.set_ylim(lo[1], hi[1])
            ax.set_zlim(lo[2], hi[2])
        ax.set_title(f"{kind} {g['index']} (dim {g['dimension']})", fontsize=9)
        ax.tick_params(labelsize=6)
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)
    return path


def render_figures(report: dict, out_dir: str | Path) -> list[Path]:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = [plot_cup_matrix(report, out_dir / "cup_matrix.png"),
               plot_counts(report, out_dir / "simplex_counts.png")]
    for kind in ("cycle", "cocycle"):
        p = plot_generators(report, out_dir / f"{kind}s.png", kind=kind)
        if p is not None:
            written.append(p)
    return written
