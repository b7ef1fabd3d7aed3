"""Matplotlib figures and delimited reports for friezes and mutations.

The report path writes PNG figures next to CSV tables so a mutation run
can be inspected without re-running anything.
"""

from __future__ import annotations

import csv
import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .frieze import Frieze
from .mutation import RegionTag, delta_map, region_map
from .polygon import Chord, Triangulation, all_diagonals

REGION_COLORS = {
    RegionTag.BC: "#a6cee3",
    RegionTag.DE: "#b2df8a",
    RegionTag.BE: "#fdbf6f",
    RegionTag.CD: "#cab2d6",
    RegionTag.BD_INTERIOR: "#fb9a99",
    RegionTag.CE_INTERIOR: "#99d8c9",
    RegionTag.PA_SHIFT: "#e31a1c",
    RegionTag.SA: "#33a02c",
    RegionTag.F: "#eeeeee",
}
RAY_COLOR = "#ffff99"


def _vertex_xy(v: int, n: int) -> tuple[float, float]:
    # clockwise labelling: angle decreases as the label grows
    angle = math.pi / 2 - 2 * math.pi * (v - 1) / n
    return math.cos(angle), math.sin(angle)


def polygon_figure(t: Triangulation, highlight: Chord | None = None,
                   flipped: Chord | None = None):
    """The polygon with its triangulation; optionally the flip pair."""
    fig, ax = plt.subplots(figsize=(5, 5))
    n = t.n
    pts = {v: _vertex_xy(v, n) for v in range(1, n + 1)}
    for v in range(1, n + 1):
        w = v % n + 1
        ax.plot(*zip(pts[v], pts[w]), color="0.4", lw=1.2, zorder=1)
    for c in sorted(t.diagonals):
        color, lw = ("tab:red", 2.2) if c == highlight else ("tab:blue", 1.4)
        ax.plot(*zip(pts[c.a], pts[c.b]), color=color, lw=lw, zorder=2)
    if flipped is not None:
        ax.plot(*zip(pts[flipped.a], pts[flipped.b]), color="tab:green",
                lw=2.0, ls="--", zorder=3)
    for v, (x, y) in pts.items():
        ax.annotate(str(v), (1.1 * x, 1.1 * y), ha="center", va="center")
    ax.set_aspect("equal")
    ax.set_xlim(-1.25, 1.25)
    ax.set_ylim(-1.25, 1.25)
    ax.axis("off")
    return fig


def frieze_figure(f: Frieze, regions: dict[Chord, RegionTag] | None = None,
                  deltas: dict[Chord, int] | None = None, periods: int = 1):
    """Staggered frieze grid; entries optionally colored by mutation region
    and annotated with their delta values."""
    n = f.n
    fig, ax = plt.subplots(figsize=(1.1 * n * periods, 0.65 * (n + 1)))
    for d in range(n + 1):
        for i in range(1, n * periods + 2):
            x = 2 * i + d
            y = -d
            v = f.value_at(i, i + d)
            face = None
            if regions is not None and 2 <= d <= n - 2:
                tag = regions[f_chord(f, i, i + d)]
                face = REGION_COLORS.get(tag, RAY_COLOR)
            if face:
                ax.add_patch(plt.Rectangle((x - 0.9, y - 0.42), 1.8, 0.84,
                                           color=face, zorder=1))
            ax.text(x, y, str(v), ha="center", va="center", zorder=2)
            if deltas is not None and 2 <= d <= n - 2:
                dv = deltas[f_chord(f, i, i + d)]
                if dv:
                    ax.text(x, y - 0.33, f"{dv:+d}", ha="center", va="center",
                            fontsize=6, color="tab:red", zorder=2)
    ax.set_xlim(0, 2 * (n * periods + 2) + n + 1)
    ax.set_ylim(-(n + 1), 1)
    ax.axis("off")
    fig.tight_layout()
    return fig


def f_chord(f: Frieze, i: int, j: int) -> Chord:
    from .polygon import chord

    return chord(i, j, f.n)


def write_frieze_report(outdir, f: Frieze, t: Triangulation) -> list[str]:
    """PNG figures and a CSV of entries for a generated frieze."""
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    written = []

    fig = polygon_figure(t)
    fig.savefig(out / "triangulation.png", dpi=150)
    plt.close(fig)
    written.append("triangulation.png")

    fig = frieze_figure(f)
    fig.savefig(out / "frieze.png", dpi=150)
    plt.close(fig)
    written.append("frieze.png")

    with open(out / "frieze.csv", "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["i", "j", "value"])
        for c in sorted(f.entries):
            w.writerow([c.a, c.b, f.entries[c]])
    written.append("frieze.csv")
    return written


def write_mutation_report(outdir, f: Frieze, t: Triangulation, a: Chord,
                          mutated: Frieze, flipped: Triangulation) -> list[str]:
    """Figures plus a per-entry CSV for one mutation step."""
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    written = []

    regions = region_map(t, a)
    deltas = delta_map(f, t, a)

    fig = polygon_figure(t, highlight=a, flipped=next(iter(flipped.diagonals - t.diagonals)))
    fig.savefig(out / "flip.png", dpi=150)
    plt.close(fig)
    written.append("flip.png")

    fig = frieze_figure(f, regions=regions, deltas=deltas)
    fig.savefig(out / "frieze_before.png", dpi=150)
    plt.close(fig)
    written.append("frieze_before.png")

    fig = frieze_figure(mutated)
    fig.savefig(out / "frieze_after.png", dpi=150)
    plt.close(fig)
    written.append("frieze_after.png")

    with open(out / "mutation.csv", "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["i", "j", "region", "delta", "before", "after"])
        for c in sorted(all_diagonals(t.n)):
            w.writerow([c.a, c.b, regions[c].value, deltas[c],
                        f.value(c), mutated.value(c)])
    written.append("mutation.csv")
    return written
