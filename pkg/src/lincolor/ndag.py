"""Directed acyclic order on vertices by closed-neighborhood inclusion."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graph import Graph, bits


@dataclass(frozen=True)
class NeighborhoodDag:
    """Transitive DAG: x -> y when N[x] is properly contained in N[y],
    with equal neighborhoods ordered by vertex label."""

    n: int
    succ: tuple[int, ...]   # succ[v]: bitmask of successors of v
    level: tuple[int, ...]  # longest-path depth from the sources, 1-based

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in bits(self.succ[u]):
                yield u, v

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.succ)

    def to_dot(self) -> str:
        lines = ["digraph neighborhood_dag {"]
        for v in range(self.n):
            lines.append(f'  {v} [label="{v} (level {self.level[v]})"];')
        for u, v in self.edges():
            lines.append(f"  {u} -> {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_dag(g: Graph) -> NeighborhoodDag:
    """Orient every comparable pair of closed neighborhoods.

    x -> y when N[x] is a proper subset of N[y]; equal closed
    neighborhoods are oriented from the smaller label to the larger.
    """
    n = g.n
    closed = [g.closed(v) for v in range(n)]
    succ = [0] * n
    for x in range(n):
        cx = closed[x]
        for y in range(n):
            if x == y:
                continue
            cy = closed[y]
            if cx | cy == cy and (cx != cy or x < y):
                succ[x] |= 1 << y

    # longest-path depth: sources sit at level 1
    pred = [0] * n
    for u in range(n):
        for v in bits(succ[u]):
            pred[v] |= 1 << u
    level = [0] * n
    indeg = [pred[v].bit_count() for v in range(n)]
    queue = [v for v in range(n) if indeg[v] == 0]
    for v in queue:
        level[v] = 1
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        for v in bits(succ[u]):
            level[v] = max(level[v], level[u] + 1)
            indeg[v] -= 1
            if indeg[v] == 0:
                queue.append(v)
    assert head == n, "cycle in neighborhood order"
    return NeighborhoodDag(n, tuple(succ), tuple(level))
