"""Figure rendering for graphs, colorings, and the neighborhood DAG."""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.axes import Axes

from .graph import Graph
from .ndag import NeighborhoodDag

_GOLDEN = (1 + math.sqrt(5)) / 2


def _circle_layout(n: int) -> list[tuple[float, float]]:
    return [
        (math.cos(math.pi / 2 - 2 * math.pi * i / max(n, 1)),
         math.sin(math.pi / 2 - 2 * math.pi * i / max(n, 1)))
        for i in range(n)
    ]


def draw_graph(ax: Axes, g: Graph, colors=None, title: str | None = None) -> None:
    """Draw on a circular layout; optional per-vertex color classes."""
    pos = _circle_layout(g.n)
    for u, v in g.edges():
        ax.plot(
            [pos[u][0], pos[v][0]],
            [pos[u][1], pos[v][1]],
            color="0.6",
            linewidth=1.2,
            zorder=1,
        )
    cmap = plt.get_cmap("tab20")
    for v in range(g.n):
        face = cmap((colors[v] - 1) % 20) if colors else "#9ecae1"
        ax.scatter([pos[v][0]], [pos[v][1]], s=450, color=face, zorder=2, edgecolors="black")
        ax.text(pos[v][0], pos[v][1], str(v), ha="center", va="center", zorder=3)
    if title:
        ax.set_title(title)
    ax.set_aspect("equal")
    ax.set_axis_off()
    ax.margins(0.15)


def draw_dag(ax: Axes, dag: NeighborhoodDag, title: str | None = None) -> None:
    """Draw with one row per level, sources at the top."""
    by_level: dict[int, list[int]] = {}
    for v in range(dag.n):
        by_level.setdefault(dag.level[v], []).append(v)
    pos: dict[int, tuple[float, float]] = {}
    for lvl, members in sorted(by_level.items()):
        for i, v in enumerate(sorted(members)):
            pos[v] = (i - (len(members) - 1) / 2, -lvl)
    for u, v in dag.edges():
        ax.annotate(
            "",
            xy=pos[v],
            xytext=pos[u],
            arrowprops=dict(arrowstyle="-|>", color="0.4", shrinkA=14, shrinkB=14),
            zorder=1,
        )
    for v in range(dag.n):
        ax.scatter([pos[v][0]], [pos[v][1]], s=450, color="#fdd0a2", zorder=2, edgecolors="black")
        ax.text(pos[v][0], pos[v][1], str(v), ha="center", va="center", zorder=3)
    if title:
        ax.set_title(title)
    ax.set_aspect("equal")
    ax.set_axis_off()
    ax.margins(0.2)


def save_analysis_figure(path: str, g: Graph, colors, dag: NeighborhoodDag) -> None:
    """Graph with its coloring next to the neighborhood DAG, to one file."""
    width = 5 * _GOLDEN
    fig, (left, right) = plt.subplots(1, 2, figsize=(width, 5))
    draw_graph(left, g, colors, title="graph and coloring")
    draw_dag(right, dag, title="neighborhood DAG (by level)")
    fig.tight_layout()
    fig.savefig(path, dpi=130)
    plt.close(fig)


def save_graph_figure(path: str, g: Graph, colors=None, title: str | None = None) -> None:
    size = 3.2 * _GOLDEN
    fig, ax = plt.subplots(figsize=(size, size))
    draw_graph(ax, g, colors, title=title)
    fig.tight_layout()
    fig.savefig(path, dpi=130)
    plt.close(fig)
