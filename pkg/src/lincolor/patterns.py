"""Pattern graphs, induced-subgraph search, and small-graph enumeration."""

from __future__ import annotations

import itertools
import random
from functools import lru_cache
from typing import Iterator

import numpy as np

from .graph import Graph, bits

MAX_ENUM_N = 8

# ---------------------------------------------------------------------------
# constructors


def gen_path(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"path needs at least 1 vertex, got {n}")
    return Graph.from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return Graph.from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def gen_complete(n: int) -> Graph:
    return Graph.from_edge_list(n, list(itertools.combinations(range(n), 2)))


def gen_star(n: int) -> Graph:
    """Star on n vertices: center 0, leaves 1..n-1."""
    if n < 1:
        raise ValueError(f"star needs at least 1 vertex, got {n}")
    return Graph.from_edge_list(n, [(0, i) for i in range(1, n)])


def incomplete_k_sun(k: int) -> Graph:
    """2k vertices: hub vertices 0..k-1, an independent rim k..2k-1.

    Rim vertex k+i-1 (i = 1..k) is adjacent to hub i-1 and hub (i-2) mod k,
    and to nothing else.
    """
    if k < 3:
        raise ValueError(f"sun needs k >= 3, got {k}")
    edges = []
    for i in range(1, k + 1):
        w = k + i - 1
        edges.append((w, i - 1))
        edges.append((w, (i - 2) % k))
    return Graph.from_edge_list(2 * k, edges)


def k_sun(k: int) -> Graph:
    """incomplete_k_sun(k) with the hub turned into a clique."""
    base = incomplete_k_sun(k)
    edges = list(base.edges()) + list(itertools.combinations(range(k), 2))
    return Graph.from_edge_list(2 * k, edges)


def gen_threshold(n: int, seed: int) -> Graph:
    """Random threshold graph: repeatedly add an isolated or dominating vertex."""
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    rng = random.Random(seed)
    edges = []
    for v in range(1, n):
        if rng.random() < 0.5:
            edges.extend((u, v) for u in range(v))
    return Graph.from_edge_list(n, edges)


def gen_quasi_threshold(n: int, seed: int) -> Graph:
    """Random quasi-threshold graph, built by unions and universal vertices."""
    if n < 1:
        raise ValueError(f"vertex count must be at least 1, got {n}")
    rng = random.Random(seed)

    def build(size: int) -> list[tuple[int, int]]:
        if size == 1:
            return []
        if rng.random() < 0.5:
            inner = build(size - 1)
            return inner + [(u, size - 1) for u in range(size - 1)]
        a = rng.randint(1, size - 1)
        left = build(a)
        right = build(size - a)
        return left + [(u + a, v + a) for u, v in right]

    return Graph.from_edge_list(n, build(n))


def gen_strongly_chordal(n: int, seed: int) -> Graph:
    """Random interval graph (interval graphs are strongly chordal)."""
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    rng = random.Random(seed)
    iv = []
    for _ in range(n):
        a = rng.random()
        iv.append((a, a + 0.15 + 0.5 * rng.random()))
    edges = [
        (u, v)
        for u, v in itertools.combinations(range(n), 2)
        if iv[u][0] <= iv[v][1] and iv[v][0] <= iv[u][1]
    ]
    return Graph.from_edge_list(n, edges)


def gen_split(n: int, seed: int) -> Graph:
    """Random split graph: a clique, an independent set, random cross edges."""
    rng = random.Random(seed)
    k = rng.randint(0, n)
    edges = list(itertools.combinations(range(k), 2))
    for v in range(k, n):
        for u in range(k):
            if rng.random() < 0.5:
                edges.append((u, v))
    return Graph.from_edge_list(n, edges)


def gen_random(n: int, seed: int, p: float = 0.5) -> Graph:
    rng = random.Random(seed)
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edge_list(n, edges)


# ---------------------------------------------------------------------------
# induced subgraph search


def find_induced(host: Graph, pattern: Graph) -> dict[int, int] | None:
    """First induced embedding of `pattern` in `host`, or None.

    The mapping preserves both edges and non-edges.  Pattern vertices are
    placed in label order and host candidates tried in label order, so the
    first embedding found is deterministic.
    """
    p, h = pattern.n, host.n
    if p > h:
        return None
    if p == 0:
        return {}
    pdeg = [pattern.degree(v) for v in range(p)]
    hdeg = [host.degree(v) for v in range(h)]
    mapping = [-1] * p

    def extend(i: int, used: int) -> bool:
        for cand in range(h):
            if used >> cand & 1 or hdeg[cand] < pdeg[i]:
                continue
            ok = True
            for j in range(i):
                if (pattern.adj[i] >> j & 1) != (host.adj[cand] >> mapping[j] & 1):
                    ok = False
                    break
            if not ok:
                continue
            mapping[i] = cand
            if i + 1 == p or extend(i + 1, used | 1 << cand):
                return True
            mapping[i] = -1
        return False

    if extend(0, 0):
        return {i: mapping[i] for i in range(p)}
    return None


def find_chordless_cycle(host: Graph, min_len: int = 4) -> dict[int, int] | None:
    """Smallest induced cycle of length >= min_len, as a cycle-order mapping."""
    for length in range(min_len, host.n + 1):
        occ = find_induced(host, gen_cycle(length))
        if occ is not None:
            return occ
    return None


def find_hole(host: Graph) -> dict[int, int] | None:
    """Smallest induced chordless cycle of length at least 5."""
    return find_chordless_cycle(host, min_len=5)


def find_antihole(host: Graph) -> dict[int, int] | None:
    """Hole of the complement; the mapping is into complement adjacency."""
    return find_hole(host.complement())


def find_k_sun(host: Graph, k_max: int | None = None) -> tuple[int, dict[int, int]] | None:
    """First (k, embedding) with an induced k-sun in host, smallest k first."""
    if k_max is None:
        k_max = host.n // 2
    for k in range(3, k_max + 1):
        if 2 * k > host.n:
            break
        occ = find_induced(host, k_sun(k))
        if occ is not None:
            return k, occ
    return None


# ---------------------------------------------------------------------------
# canonical forms and enumeration


def _edge_pos(i: int, j: int, n: int) -> int:
    # position of pair (i, j), i < j, in row-major upper-triangle order
    return i * n - i * (i + 1) // 2 + (j - i - 1)


@lru_cache(maxsize=None)
def _perm_edge_index(n: int) -> np.ndarray:
    """For every permutation, where each relabeled edge slot reads from."""
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    n_edges = n * (n - 1) // 2
    idx = np.empty((len(perms), n_edges), dtype=np.int64)
    e = 0
    for i in range(n - 1):
        for j in range(i + 1, n):
            lo = np.minimum(perms[:, i], perms[:, j])
            hi = np.maximum(perms[:, i], perms[:, j])
            idx[:, e] = lo * n - lo * (lo + 1) // 2 + (hi - lo - 1)
            e += 1
    return idx


def _edge_bits(g: Graph) -> np.ndarray:
    vec = np.zeros(g.n * (g.n - 1) // 2, dtype=np.int64)
    for u, v in g.edges():
        vec[_edge_pos(u, v, g.n)] = 1
    return vec


@lru_cache(maxsize=None)
def _weights(n_edges: int) -> np.ndarray:
    return 1 << np.arange(n_edges - 1, -1, -1, dtype=np.int64)


def canonical_code(g: Graph) -> tuple[int, int]:
    """(n, code) identical for isomorphic graphs: the minimum relabeled encoding."""
    n = g.n
    if n <= 1:
        return n, 0
    vec = _edge_bits(g)
    codes = vec[_perm_edge_index(n)] @ _weights(len(vec))
    return n, int(codes.min())


def graph_from_code(n: int, code: int) -> Graph:
    edges = []
    n_edges = n * (n - 1) // 2
    e = 0
    for i in range(n - 1):
        for j in range(i + 1, n):
            if code >> (n_edges - 1 - e) & 1:
                edges.append((i, j))
            e += 1
    return Graph.from_edge_list(n, edges)


def automorphism_count(g: Graph) -> int:
    """Number of vertex permutations mapping the graph onto itself."""
    if g.n <= 1:
        return 1
    vec = _edge_bits(g)
    codes = vec[_perm_edge_index(g.n)] @ _weights(len(vec))
    own = int(vec @ _weights(len(vec)))
    return int((codes == own).sum())


def is_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n:
        return False
    if a.n > MAX_ENUM_N:
        raise ValueError(f"isomorphism test supported up to n={MAX_ENUM_N}")
    return canonical_code(a) == canonical_code(b)


@lru_cache(maxsize=None)
def _canonical_codes(n: int) -> tuple[int, ...]:
    if n <= 1:
        return (0,)
    seen = set()
    for pcode in _canonical_codes(n - 1):
        parent = graph_from_code(n - 1, pcode)
        for nb in range(1 << (n - 1)):
            adj = [parent.adj[v] | ((nb >> v & 1) << (n - 1)) for v in range(n - 1)]
            adj.append(nb)
            seen.add(canonical_code(Graph(n, adj))[1])
    return tuple(sorted(seen))


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class on n vertices, n <= 8."""
    if n > MAX_ENUM_N:
        raise ValueError(f"enumeration supported up to n={MAX_ENUM_N}, got {n}")
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    for code in _canonical_codes(n):
        yield graph_from_code(n, code)
