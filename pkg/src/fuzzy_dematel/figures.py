"""Matplotlib renderings of the causal diagram and the influence map."""
from __future__ import annotations

import math
from pathlib import Path
from typing import Union

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.patches import Circle, FancyArrowPatch

from .engine import DematelResult, NET_CAUSE
from .report import RELATION_SCALE_CANONICAL, relation_display

_CAUSE_COLOR = "#b2182b"
_EFFECT_COLOR = "#2166ac"


def _prepare(path: Union[str, Path]) -> Path:
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    return p


def save_causal_diagram(
    result: DematelResult,
    path: Union[str, Path],
    relation_scale: str = RELATION_SCALE_CANONICAL,
    dpi: int = 150,
) -> Path:
    """Scatter of (prominence, net relation) with one labeled point per criterion."""
    p = _prepare(path)
    xs = [item.prominence for item in result.criteria]
    ys = [relation_display(item.relation, relation_scale) for item in result.criteria]
    colors = [_CAUSE_COLOR if item.category == NET_CAUSE else _EFFECT_COLOR for item in result.criteria]
    fig, ax = plt.subplots(figsize=(7.0, 5.0))
    ax.axhline(0.0, color="0.55", linewidth=1.0, zorder=1)
    ax.scatter(xs, ys, c=colors, s=55, zorder=3)
    for item, x, y in zip(result.criteria, xs, ys):
        ax.annotate(
            item.code,
            (x, y),
            textcoords="offset points",
            xytext=(6, 6),
            fontsize=9,
        )
    ax.set_xlabel("Prominence (dispatch + receive)")
    ax.set_ylabel("Relation (dispatch - receive)")
    ax.set_title("Causal diagram")
    ax.grid(True, linewidth=0.4, alpha=0.5)
    fig.tight_layout()
    fig.savefig(p, dpi=dpi)
    plt.close(fig)
    return p


def save_influence_map(result: DematelResult, path: Union[str, Path], dpi: int = 150) -> Path:
    """Circular layout of the thresholded influence map.

    Net causes are drawn with a double ring, mirroring the DOT export's
    peripheries=2 styling.
    """
    p = _prepare(path)
    n = result.order
    angles = [math.pi / 2.0 - 2.0 * math.pi * i / n for i in range(n)]
    pos = {
        code: (math.cos(a), math.sin(a))
        for code, a in zip(result.codes, angles)
    }
    fig, ax = plt.subplots(figsize=(6.5, 6.5))
    for src, dst in result.edges:
        arrow = FancyArrowPatch(
            pos[src],
            pos[dst],
            connectionstyle="arc3,rad=0.08",
            arrowstyle="-|>",
            mutation_scale=14,
            shrinkA=16,
            shrinkB=16,
            color="0.35",
            linewidth=1.0,
            zorder=2,
        )
        ax.add_patch(arrow)
    for item in result.criteria:
        x, y = pos[item.code]
        color = _CAUSE_COLOR if item.category == NET_CAUSE else _EFFECT_COLOR
        ax.add_patch(Circle((x, y), 0.09, facecolor="white", edgecolor=color, linewidth=1.6, zorder=3))
        if item.category == NET_CAUSE:
            ax.add_patch(
                Circle((x, y), 0.115, facecolor="none", edgecolor=color, linewidth=1.2, zorder=3)
            )
        ax.text(x, y, item.code, ha="center", va="center", fontsize=8, zorder=4)
    ax.set_xlim(-1.45, 1.45)
    ax.set_ylim(-1.45, 1.45)
    ax.set_aspect("equal")
    ax.axis("off")
    ax.set_title(f"Influence map (threshold {result.threshold:.3f})")
    fig.tight_layout()
    fig.savefig(p, dpi=dpi)
    plt.close(fig)
    return p
