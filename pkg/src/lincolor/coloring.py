"""Linear colorings: construction via the DAG path cover, and verification.

A coloring is linear when the closed neighborhoods inside every color
class form a chain under inclusion.  Equivalently (and checked by the
second verifier) the sets of maximal cliques through the vertices of a
class form a chain.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph
from .ndag import build_dag
from .oracles import maximal_cliques
from .path_cover import min_path_cover


@dataclass(frozen=True)
class LinearColoring:
    """colors[v] in 1..k; chains holds one inclusion-ordered vertex
    sequence per color, the certificate that each class is a chain."""

    colors: tuple[int, ...]
    k: int
    chains: tuple[tuple[int, ...], ...]


def linear_color(g: Graph) -> LinearColoring:
    """Color each minimum-path-cover path of the neighborhood DAG with
    one color; uses the optimal number of colors."""
    cover = min_path_cover(build_dag(g))
    colors = [0] * g.n
    for i, path in enumerate(cover.paths):
        for v in path:
            colors[v] = i + 1
    return LinearColoring(tuple(colors), cover.rho, cover.paths)


def linear_chromatic_number(g: Graph) -> int:
    return linear_color(g).k


def _check_coloring_input(g: Graph, colors: Sequence[int]) -> None:
    if len(colors) != g.n:
        raise ValueError(f"coloring has {len(colors)} entries for {g.n} vertices")
    for v, c in enumerate(colors):
        if not isinstance(c, int) or c < 1:
            raise ValueError(f"color of vertex {v} must be a positive integer, got {c!r}")


def verify_linear_coloring(g: Graph, colors: Sequence[int]) -> tuple[int, int] | None:
    """None if linear, else the first same-colored pair (u, v) whose
    closed neighborhoods are incomparable."""
    _check_coloring_input(g, colors)
    closed = [g.closed(v) for v in range(g.n)]
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if colors[u] != colors[v]:
                continue
            cu, cv = closed[u], closed[v]
            union = cu | cv
            if union != cu and union != cv:
                return u, v
    return None


def verify_linear_coloring_cliquesets(g: Graph, colors: Sequence[int]) -> tuple[int, int] | None:
    """Same contract as verify_linear_coloring, via maximal-clique sets."""
    _check_coloring_input(g, colors)
    cliques = maximal_cliques(g)
    through = [0] * g.n
    for i, clique in enumerate(cliques):
        for v in clique:
            through[v] |= 1 << i
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if colors[u] != colors[v]:
                continue
            cu, cv = through[u], through[v]
            union = cu | cv
            if union != cu and union != cv:
                return u, v
    return None
