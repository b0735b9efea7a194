"""Independent exact oracles: small-scale exhaustive ground truth.

Nothing here touches the DAG/path-cover pipeline; these routines exist
so the fast algorithms can be checked against definitions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .graph import Graph, bits


def maximal_cliques(g: Graph) -> tuple[tuple[int, ...], ...]:
    """All maximal cliques, pivoted Bron-Kerbosch, lexicographic order."""
    adj = g.adj
    found: list[int] = []

    def bk(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            if r:
                found.append(r)
            return
        pool = p | x
        pivot, best = -1, -1
        for u in bits(pool):
            c = (p & adj[u]).bit_count()
            if c > best:
                best, pivot = c, u
        for v in bits(p & ~adj[pivot]):
            bk(r | 1 << v, p & adj[v], x & adj[v])
            p ^= 1 << v
            x |= 1 << v

    bk(0, g.vertex_mask, 0)
    return tuple(sorted(tuple(bits(m)) for m in found))


def brute_chromatic_number(g: Graph) -> int:
    """Exact chromatic number by backtracking over vertex colorings."""
    n = g.n
    if n == 0:
        return 0
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    earlier = [[u for u in order[:i] if g.adj[order[i]] >> u & 1] for i in range(n)]
    color = [0] * n

    def place(i: int, used: int, k: int) -> bool:
        if i == n:
            return True
        v = order[i]
        taken = 0
        for u in earlier[i]:
            taken |= 1 << color[u]
        limit = min(used + 1, k)
        for c in range(1, limit + 1):
            if taken >> c & 1:
                continue
            color[v] = c
            if place(i + 1, max(used, c), k):
                return True
        color[v] = 0
        return False

    for k in range(1, n + 1):
        if place(0, 0, k):
            return k
    raise AssertionError("unreachable: n colors always suffice")


def _comparability_masks(g: Graph) -> list[int]:
    closed = [g.closed(v) for v in range(g.n)]
    comp = [0] * g.n
    for u in range(g.n):
        cu = closed[u]
        for v in range(u + 1, g.n):
            cv = closed[v]
            union = cu | cv
            if union == cu or union == cv:
                comp[u] |= 1 << v
                comp[v] |= 1 << u
    return comp


def brute_linear_chromatic_number(g: Graph) -> int:
    """Minimum number of classes with pairwise-comparable closed
    neighborhoods, by exhaustive set-partition search.

    A class feasibility mask (vertices comparable with every current
    member) makes the membership test O(1); branches that cannot beat
    the best known partition are cut.
    """
    n = g.n
    if n == 0:
        return 0
    comp = _comparability_masks(g)
    order = sorted(range(n), key=lambda v: (comp[v].bit_count(), v))

    feas: list[int] = []
    for v in order:
        for i, f in enumerate(feas):
            if f >> v & 1:
                feas[i] = f & comp[v]
                break
        else:
            feas.append(comp[v])
    best = len(feas)

    classes: list[int] = []

    def dfs(i: int) -> None:
        nonlocal best
        if len(classes) >= best:
            return
        if i == n:
            best = len(classes)
            return
        v = order[i]
        for idx in range(len(classes)):
            f = classes[idx]
            if f >> v & 1:
                classes[idx] = f & comp[v]
                dfs(i + 1)
                classes[idx] = f
        if len(classes) + 1 < best:
            classes.append(comp[v])
            dfs(i + 1)
            classes.pop()

    dfs(0)
    return best


def independence_number(g: Graph) -> int:
    """Branch-and-bound maximum independent set size."""
    adj = g.adj
    best = 0

    def expand(cand: int, size: int) -> None:
        nonlocal best
        if size + cand.bit_count() <= best:
            return
        if cand == 0:
            best = size
            return
        branch, bdeg = -1, -1
        for v in bits(cand):
            d = (adj[v] & cand).bit_count()
            if d > bdeg:
                bdeg, branch = d, v
        if bdeg == 0:
            best = size + cand.bit_count()
            return
        expand(cand & ~(adj[branch] | 1 << branch), size + 1)
        expand(cand ^ (1 << branch), size)

    expand(g.vertex_mask, 0)
    return best


def clique_number(g: Graph) -> int:
    return independence_number(g.complement())


def subsets_by_size(n: int) -> Iterator[int]:
    """All subset masks of {0..n-1}: increasing popcount, then numeric."""
    yield 0
    for k in range(1, n + 1):
        m = (1 << k) - 1
        while m < 1 << n:
            yield m
            c = m & -m
            r = m + c
            m = (((r ^ m) >> 2) // c) | r


@dataclass(frozen=True)
class SubsetWitness:
    """An induced subgraph on `vertices` where `left_name` = left and
    `right_name` = right disagree."""

    vertices: tuple[int, ...]
    left_name: str
    left: int
    right_name: str
    right: int

    def describe(self) -> str:
        return (
            f"on vertices {list(self.vertices)}: "
            f"{self.left_name}={self.left} != {self.right_name}={self.right}"
        )


@dataclass(frozen=True)
class SubsetCheck:
    holds: bool
    witness: SubsetWitness | None


def check_colinear(g: Graph) -> SubsetCheck:
    """Definitional test: chromatic number of every induced subgraph
    equals the linear chromatic number of its complement."""
    for mask in subsets_by_size(g.n):
        sub, order = g.induced(bits(mask))
        chi = brute_chromatic_number(sub)
        lam = brute_linear_chromatic_number(sub.complement())
        if chi != lam:
            witness = SubsetWitness(order, "chromatic", chi, "complement linear chromatic", lam)
            return SubsetCheck(False, witness)
    return SubsetCheck(True, None)


def check_linear(g: Graph) -> SubsetCheck:
    """Definitional test: independence number of every induced subgraph
    equals its linear chromatic number."""
    for mask in subsets_by_size(g.n):
        sub, order = g.induced(bits(mask))
        alpha = independence_number(sub)
        lam = brute_linear_chromatic_number(sub)
        if alpha != lam:
            witness = SubsetWitness(order, "independence", alpha, "linear chromatic", lam)
            return SubsetCheck(False, witness)
    return SubsetCheck(True, None)


def check_colinear_via_actual_edges(g: Graph) -> SubsetCheck:
    """Second route: chromatic number of every induced subgraph equals
    the clique number of that subgraph augmented with the actual edges
    of its complement."""
    from .classes import actual_edges

    for mask in subsets_by_size(g.n):
        sub, order = g.induced(bits(mask))
        chi = brute_chromatic_number(sub)
        augmented = Graph.from_edge_list(
            sub.n, list(sub.edges()) + list(actual_edges(sub.complement()))
        )
        omega = clique_number(augmented)
        if chi != omega:
            witness = SubsetWitness(order, "chromatic", chi, "augmented clique", omega)
            return SubsetCheck(False, witness)
    return SubsetCheck(True, None)


def is_colinear(g: Graph) -> bool:
    return check_colinear(g).holds


def is_linear(g: Graph) -> bool:
    return check_linear(g).holds


def is_colinear_via_actual_edges(g: Graph) -> bool:
    return check_colinear_via_actual_edges(g).holds


def brute_min_path_cover_size(n: int, dag_edges: list[tuple[int, int]]) -> int:
    """Exhaustive minimum path cover of a DAG, for cross-checking.

    Tries every way of choosing at most one outgoing and one incoming
    link per vertex, by scanning vertices and optionally linking each to
    an unused successor.
    """
    succ = [sorted(v for u2, v in dag_edges if u2 == u) for u in range(n)]
    best = n

    def scan(u: int, used_in: int, links: int) -> None:
        nonlocal best
        if u == n:
            best = min(best, n - links)
            return
        if n - links - (n - u) >= best:
            return
        for v in succ[u]:
            if not used_in >> v & 1:
                scan(u + 1, used_in | 1 << v, links + 1)
        scan(u + 1, used_in, links)

    scan(0, 0, 0)
    return best


def brute_max_bipartite_matching_size(
    n_left: int, n_right: int, edges: list[tuple[int, int]]
) -> int:
    """Exhaustive maximum matching size, memoized on (left index, used rights)."""
    adj = [sorted(v for u2, v in edges if u2 == u) for u in range(n_left)]
    memo: dict[tuple[int, int], int] = {}

    def go(u: int, used: int) -> int:
        if u == n_left:
            return 0
        key = (u, used)
        if key in memo:
            return memo[key]
        best = go(u + 1, used)
        for v in adj[u]:
            if not used >> v & 1:
                best = max(best, 1 + go(u + 1, used | 1 << v))
        memo[key] = best
        return best

    return go(0, 0)


def chain_partition_classes(g: Graph, colors: list[int]) -> bool:
    """True when every color class is pairwise comparable (used in tests)."""
    comp = _comparability_masks(g)
    for u, v in itertools.combinations(range(g.n), 2):
        if colors[u] == colors[v] and not comp[u] >> v & 1:
            return False
    return True
