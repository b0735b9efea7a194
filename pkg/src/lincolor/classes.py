"""Recognition of the graph classes the pipeline cares about."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bits, mask_of
from .patterns import find_chordless_cycle, find_induced, gen_cycle, gen_path

_P4 = gen_path(4)
_C4 = gen_cycle(4)
_C5 = gen_cycle(5)
_2K2 = Graph.from_edge_list(4, [(0, 1), (2, 3)])


def actual_edges(g: Graph) -> tuple[tuple[int, int], ...]:
    """Edges whose endpoints have incomparable closed neighborhoods."""
    out = []
    for u, v in g.edges():
        cu, cv = g.closed(u), g.closed(v)
        union = cu | cv
        if union != cu and union != cv:
            out.append((u, v))
    return tuple(out)


def is_quasi_threshold(g: Graph) -> bool:
    """No induced path or cycle on four vertices."""
    return find_induced(g, _P4) is None and find_induced(g, _C4) is None


def is_quasi_threshold_via_actual_edges(g: Graph) -> bool:
    """Equivalent route: every edge has comparable closed neighborhoods."""
    return not actual_edges(g)


def is_threshold(g: Graph) -> bool:
    return (
        find_induced(g, _2K2) is None
        and find_induced(g, _P4) is None
        and find_induced(g, _C4) is None
    )


def is_split(g: Graph) -> bool:
    return (
        find_induced(g, _2K2) is None
        and find_induced(g, _C4) is None
        and find_induced(g, _C5) is None
    )


# ---------------------------------------------------------------------------
# chordality


@dataclass(frozen=True)
class ChordalityCheck:
    holds: bool
    elimination_order: tuple[int, ...] | None
    hole: tuple[int, ...] | None  # an induced chordless cycle >= 4 when not chordal


def _lex_bfs_order(g: Graph) -> list[int]:
    """Lexicographic BFS; ties broken towards the smallest label."""
    classes: list[list[int]] = [list(range(g.n))] if g.n else []
    order: list[int] = []
    while classes:
        head = classes[0]
        v = head.pop(0)
        if not head:
            classes.pop(0)
        order.append(v)
        refined: list[list[int]] = []
        for cls in classes:
            inside = [x for x in cls if g.adj[v] >> x & 1]
            outside = [x for x in cls if not g.adj[v] >> x & 1]
            if inside:
                refined.append(inside)
            if outside:
                refined.append(outside)
        classes = refined
    return order


def _is_peo(g: Graph, sigma: list[int]) -> bool:
    pos = [0] * g.n
    for i, v in enumerate(sigma):
        pos[v] = i
    for v in sigma:
        later = [u for u in bits(g.adj[v]) if pos[u] > pos[v]]
        if not later:
            continue
        parent = min(later, key=lambda u: pos[u])
        rest = mask_of(later) & ~(1 << parent)
        if rest & ~g.adj[parent]:
            return False
    return True


def check_chordal(g: Graph) -> ChordalityCheck:
    """Lex-BFS plus elimination-order verification; a chordless cycle
    of length at least four certifies failure."""
    sigma = _lex_bfs_order(g)[::-1]
    if _is_peo(g, sigma):
        return ChordalityCheck(True, tuple(sigma), None)
    occ = find_chordless_cycle(g, min_len=4)
    assert occ is not None, "non-chordal graph must contain a chordless cycle"
    hole = tuple(occ[i] for i in range(len(occ)))
    return ChordalityCheck(False, None, hole)


def is_chordal(g: Graph) -> bool:
    return check_chordal(g).holds


def is_co_chordal(g: Graph) -> bool:
    return is_chordal(g.complement())


# ---------------------------------------------------------------------------
# simple and simplicial vertices; strongly chordal graphs


def is_simplicial(g: Graph, v: int) -> bool:
    """The open neighborhood of v is a clique."""
    nbrs = g.adj[v]
    for u in bits(nbrs):
        if (nbrs & ~(1 << u)) & ~g.adj[u]:
            return False
    return True


def _is_simple_in(g: Graph, v: int, alive: int) -> bool:
    members = list(bits(g.closed(v) & alive))
    for i, x in enumerate(members):
        cx = g.closed(x) & alive
        for y in members[i + 1 :]:
            cy = g.closed(y) & alive
            union = cx | cy
            if union != cx and union != cy:
                return False
    return True


def is_simple(g: Graph, v: int) -> bool:
    """Closed neighborhoods of the members of N[v] form a chain."""
    g._check_vertex(v)
    return _is_simple_in(g, v, g.vertex_mask)


@dataclass(frozen=True)
class StrongChordalityCheck:
    holds: bool
    elimination_order: tuple[int, ...] | None
    stuck: tuple[int, ...] | None  # an induced subgraph with no simple vertex


def check_strongly_chordal(g: Graph) -> StrongChordalityCheck:
    """Greedily delete the lowest-labeled simple vertex until the graph
    empties or no simple vertex remains."""
    alive = g.vertex_mask
    order: list[int] = []
    while alive:
        chosen = -1
        for v in bits(alive):
            if _is_simple_in(g, v, alive):
                chosen = v
                break
        if chosen < 0:
            return StrongChordalityCheck(False, None, tuple(bits(alive)))
        order.append(chosen)
        alive ^= 1 << chosen
    return StrongChordalityCheck(True, tuple(order), None)


def is_strongly_chordal(g: Graph) -> bool:
    return check_strongly_chordal(g).holds


def verify_strong_peo(g: Graph, order) -> bool:
    """Check the strong elimination conditions position by position:
    each vertex is simple in the remaining graph, and among its closed
    neighbors there, earlier ones have neighborhoods contained in later
    ones."""
    order = tuple(order)
    if sorted(order) != list(range(g.n)):
        raise ValueError("order must be a permutation of the vertex set")
    closed = [g.closed(v) for v in range(g.n)]
    alive = g.vertex_mask
    for i, v in enumerate(order):
        if not _is_simple_in(g, v, alive):
            return False
        members = [u for u in order[i:] if closed[v] >> u & 1]
        for a in range(len(members)):
            ca = closed[members[a]] & alive
            for b in range(a + 1, len(members)):
                cb = closed[members[b]] & alive
                if ca | cb != cb:
                    return False
        alive ^= 1 << v
    return True


# ---------------------------------------------------------------------------
# summary


@dataclass(frozen=True)
class ClassReport:
    chordal: bool
    co_chordal: bool
    split: bool
    threshold: bool
    quasi_threshold: bool
    strongly_chordal: bool
    p6_free: bool


def classify(g: Graph) -> ClassReport:
    return ClassReport(
        chordal=is_chordal(g),
        co_chordal=is_co_chordal(g),
        split=is_split(g),
        threshold=is_threshold(g),
        quasi_threshold=is_quasi_threshold(g),
        strongly_chordal=is_strongly_chordal(g),
        p6_free=find_induced(g, gen_path(6)) is None,
    )
