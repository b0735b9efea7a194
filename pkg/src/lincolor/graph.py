"""Immutable undirected graphs on vertex set {0, ..., n-1}.

Adjacency is stored as one int bitmask per vertex, so subset and
intersection tests on neighborhoods are single integer operations.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Iterator


def mask_of(vertices: Iterable[int]) -> int:
    """Pack an iterable of vertex labels into a bitmask."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Iterate the set bits of a mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """An immutable simple graph.

    `adj[v]` is the bitmask of open neighbors of v; `closed(v)` adds v
    itself.  Vertices are always the dense range 0..n-1.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Iterable[int]):
        adj = tuple(adj)
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        if len(adj) != n:
            raise ValueError(f"expected {n} adjacency masks, got {len(adj)}")
        full = (1 << n) - 1
        for v, m in enumerate(adj):
            if m & ~full:
                raise ValueError(f"adjacency mask of vertex {v} mentions vertices >= {n}")
            if m >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v, m in enumerate(adj):
            for u in bits(m):
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from (u, v) pairs; duplicates collapse."""
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop ({u}, {v}) not allowed")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return tuple(bits(self.adj[v]))

    def closed(self, v: int) -> int:
        """Bitmask of the closed neighborhood N[v]."""
        self._check_vertex(v)
        return self.adj[v] | 1 << v

    def closed_neighborhood(self, v: int) -> set[int]:
        return set(bits(self.closed(v)))

    def edges(self) -> tuple[tuple[int, int], ...]:
        out = []
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1) << (u + 1)
            for v in bits(rest):
                out.append((u, v))
        return tuple(out)

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def complement(self) -> "Graph":
        full = self.vertex_mask
        return Graph(self.n, (full & ~m & ~(1 << v) for v, m in enumerate(self.adj)))

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Subgraph induced by `vertices`.

        Returns (subgraph, order) where order[new_label] = old_label and
        new labels preserve the order of the old ones.
        """
        order = sorted(set(vertices))
        for v in order:
            self._check_vertex(v)
        pos = {old: new for new, old in enumerate(order)}
        adj = []
        for old in order:
            m = 0
            for u in bits(self.adj[old]):
                if u in pos:
                    m |= 1 << pos[u]
            adj.append(m)
        return Graph(len(order), adj), tuple(order)

    def distance(self, u: int, v: int) -> int | float:
        """Length of a shortest u-v path; math.inf if none exists."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            return 0
        seen = 1 << u
        frontier = deque([(u, 0)])
        while frontier:
            x, d = frontier.popleft()
            for y in bits(self.adj[x]):
                if y == v:
                    return d + 1
                if not seen >> y & 1:
                    seen |= 1 << y
                    frontier.append((y, d + 1))
        return math.inf

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} out of range for n={self.n}")

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"
