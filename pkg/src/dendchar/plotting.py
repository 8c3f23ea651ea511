"""Figures written next to the CLI reports.

Everything renders through the Agg backend into files; nothing is shown.
"""

from __future__ import annotations

import math
import os
from collections.abc import Mapping, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

__all__ = [
    "setup_style",
    "plot_sequences",
    "plot_eigenvalues",
    "plot_hasse",
    "plot_schur_signs",
]

_PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#17becf", "#7f7f7f"]


def setup_style() -> None:
    matplotlib.rcParams.update(
        {
            "font.family": "DejaVu Sans",
            "font.size": 10,
            "axes.labelsize": 11,
            "axes.titlesize": 11,
            "axes.linewidth": 0.8,
            "legend.fontsize": 9,
            "lines.linewidth": 1.2,
            "lines.markersize": 4,
            "savefig.dpi": 120,
            "savefig.bbox": "tight",
        }
    )


def _save(fig, outdir: str, name: str) -> str:
    os.makedirs(outdir, exist_ok=True)
    path = os.path.join(outdir, name)
    fig.savefig(path)
    plt.close(fig)
    return path


def plot_sequences(series: Mapping[str, Sequence[int]], outdir: str, name: str = "sequences.png") -> str:
    """Signed integer sequences on a symlog axis, one line per sequence."""
    setup_style()
    fig, ax = plt.subplots(figsize=(6, 3.5))
    for i, (label, values) in enumerate(series.items()):
        start = 0 if label == "catalan" else 1
        xs = list(range(start, start + len(values)))
        ax.plot(xs, values, marker="o", color=_PALETTE[i % len(_PALETTE)], label=label)
    ax.set_yscale("symlog", linthresh=1)
    ax.axhline(0, color="0.6", linewidth=0.6)
    ax.set_xlabel("n")
    ax.set_ylabel("value")
    ax.legend(frameon=False)
    return _save(fig, outdir, name)


def plot_eigenvalues(panels: Sequence[tuple[str, Mapping[int, int]]], outdir: str, name: str) -> str:
    """Roots of unity on the unit circle, marker area proportional to multiplicity.

    ``panels`` holds (title, {d: multiplicity of Phi_d}) pairs.
    """
    setup_style()
    k = max(len(panels), 1)
    cols = min(k, 4)
    rows = math.ceil(k / cols)
    fig, axes = plt.subplots(rows, cols, figsize=(2.6 * cols, 2.6 * rows), squeeze=False)
    for ax in axes.flat:
        ax.set_axis_off()
    for ax, (title, mult) in zip(axes.flat, panels):
        ax.set_axis_on()
        circle = plt.Circle((0, 0), 1, fill=False, color="0.7", linewidth=0.6)
        ax.add_patch(circle)
        top = max(mult.values(), default=1)
        for i, (d, m) in enumerate(sorted(mult.items())):
            pts = [j / d for j in range(d) if math.gcd(j, d) == 1]
            xs = [math.cos(2 * math.pi * a) for a in pts]
            ys = [math.sin(2 * math.pi * a) for a in pts]
            ax.scatter(xs, ys, s=12 + 120 * m / top, color=_PALETTE[i % len(_PALETTE)],
                       label=f"$\\Phi_{{{d}}}^{{{m}}}$", zorder=3)
        ax.set_xlim(-1.35, 1.35)
        ax.set_ylim(-1.35, 1.35)
        ax.set_aspect("equal")
        ax.set_xticks([])
        ax.set_yticks([])
        ax.set_title(title)
        ax.legend(fontsize=6, frameon=False, loc="center", ncol=2)
    fig.tight_layout()
    return _save(fig, outdir, name)


def plot_hasse(words: Sequence[str], covers: Sequence[tuple[int, int]], rank_of: Sequence[int],
               outdir: str, name: str) -> str:
    """Hasse diagram with elements stacked by rank (longest chain from the minimum)."""
    setup_style()
    levels: dict[int, list[int]] = {}
    for i, r in enumerate(rank_of):
        levels.setdefault(r, []).append(i)
    pos = {}
    for r, members in levels.items():
        for j, i in enumerate(members):
            pos[i] = (j - (len(members) - 1) / 2, r)
    width = max(len(m) for m in levels.values())
    fig, ax = plt.subplots(figsize=(max(3, 0.9 * width), 0.8 * (len(levels) + 1)))
    for i, j in covers:
        (x0, y0), (x1, y1) = pos[i], pos[j]
        ax.plot([x0, x1], [y0, y1], color="0.5", linewidth=0.7, zorder=1)
    for i, (x, y) in pos.items():
        ax.scatter([x], [y], s=20, color=_PALETTE[0], zorder=2)
        if len(words) <= 42:
            ax.annotate(words[i], (x, y), textcoords="offset points", xytext=(0, 5),
                        ha="center", fontsize=6, family="monospace")
    ax.set_axis_off()
    return _save(fig, outdir, name)


def plot_schur_signs(rows: Sequence[tuple[str, Sequence[int], Sequence[int]]], outdir: str,
                     name: str = "schur_signs.png") -> str:
    """Per-degree count of positive and negative Schur coefficients.

    ``rows`` holds (label, positive counts, negative counts) indexed by degree - 1.
    """
    setup_style()
    fig, axes = plt.subplots(1, len(rows), figsize=(4 * len(rows), 3), squeeze=False)
    for ax, (label, pos, neg) in zip(axes.flat, rows):
        xs = list(range(1, len(pos) + 1))
        ax.bar(xs, pos, color=_PALETTE[0], label="positive")
        ax.bar(xs, [-v for v in neg], color=_PALETTE[1], label="negative")
        ax.axhline(0, color="0.4", linewidth=0.6)
        ax.set_xlabel("degree")
        ax.set_ylabel("# Schur coefficients")
        ax.set_title(label)
        ax.legend(frameon=False)
    fig.tight_layout()
    return _save(fig, outdir, name)
