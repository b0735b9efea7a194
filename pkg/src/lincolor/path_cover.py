"""Minimum path cover of a DAG via maximum bipartite matching."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import bits
from .ndag import NeighborhoodDag


@dataclass(frozen=True)
class Matching:
    """A matching in a bipartite graph, as sorted (left, right) pairs."""

    pairs: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class PathCover:
    """Vertex-disjoint paths covering all DAG vertices."""

    paths: tuple[tuple[int, ...], ...]

    @property
    def rho(self) -> int:
        return len(self.paths)


def max_bipartite_matching(
    n_left: int, n_right: int, edges: list[tuple[int, int]]
) -> Matching:
    """Maximum-cardinality matching by repeated augmenting-path search.

    Deterministic: left vertices are processed in label order and their
    neighbor lists kept sorted, so ties always resolve the same way.
    """
    adj: list[list[int]] = [[] for _ in range(n_left)]
    for u, v in edges:
        if not (0 <= u < n_left and 0 <= v < n_right):
            raise ValueError(f"edge ({u}, {v}) out of range for {n_left}+{n_right} sides")
        adj[u].append(v)
    for lst in adj:
        lst.sort()

    match_right = [-1] * n_right

    def augment(u: int, seen: list[bool]) -> bool:
        for v in adj[u]:
            if seen[v]:
                continue
            seen[v] = True
            if match_right[v] == -1 or augment(match_right[v], seen):
                match_right[v] = u
                return True
        return False

    for u in range(n_left):
        augment(u, [False] * n_right)

    pairs = sorted((u, v) for v, u in enumerate(match_right) if u != -1)
    return Matching(tuple(pairs))


def min_path_cover(dag: NeighborhoodDag) -> PathCover:
    """Cover the DAG with the fewest vertex-disjoint paths.

    Each DAG edge becomes one bipartite edge between an out-copy and an
    in-copy of the vertex set; a maximum matching selects the edges kept
    as path links, so the cover needs n - |matching| paths.
    """
    n = dag.n
    edges = [(u, v) for u in range(n) for v in bits(dag.succ[u])]
    matching = max_bipartite_matching(n, n, edges)

    next_of = [-1] * n
    has_pred = [False] * n
    for u, v in matching.pairs:
        next_of[u] = v
        has_pred[v] = True

    paths = []
    covered = 0
    for start in range(n):
        if has_pred[start]:
            continue
        path = []
        v = start
        while v != -1:
            path.append(v)
            covered += 1
            v = next_of[v]
        paths.append(tuple(path))
    assert covered == n, "path cover missed a vertex"
    return PathCover(tuple(paths))
