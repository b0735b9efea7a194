"""Strong elimination orderings and the coloring built from one.

The ordering routine extends simple-vertex elimination: each pass
collects every vertex that is simple in the remaining graph and emits
them in an order consistent with strict closed-neighborhood inclusion
(accumulated across passes).  As a side product it grows an independent
set that is maximum when the input is strongly chordal.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .classes import _is_simple_in
from .coloring import LinearColoring
from .graph import Graph, bits
from .patterns import find_induced, gen_path


@dataclass(frozen=True)
class StrongOrdering:
    order: tuple[int, ...]
    independent_set: frozenset[int]
    pass_of: tuple[int, ...]  # pass_of[v]: which elimination pass emitted v


def strong_elimination_ordering(g: Graph) -> StrongOrdering:
    """Strong elimination ordering plus a maximum independent set.

    Raises ValueError naming the stuck vertex set when some remaining
    subgraph has no simple vertex (the input is then not strongly
    chordal).
    """
    n = g.n
    alive = g.vertex_mask
    closed = [g.closed(v) for v in range(n)]
    pred = [0] * n  # accumulated strict-inclusion predecessors of each vertex
    order: list[int] = []
    pass_of = [0] * n
    independent = 0
    candidates = alive  # vertices with no earlier independent-set neighbor
    pass_no = 0

    while alive:
        pass_no += 1
        simple_now = [v for v in bits(alive) if _is_simple_in(g, v, alive)]
        if not simple_now:
            stuck = tuple(bits(alive))
            raise ValueError(
                f"no simple vertex in the subgraph on {list(stuck)}; "
                "input is not strongly chordal"
            )
        pending = set(simple_now)
        while pending:
            for x in bits(alive):
                cx = closed[x] & alive
                for y in bits(alive & ~(1 << x)):
                    cy = closed[y] & alive
                    if cx | cy == cy and cx != cy:
                        pred[y] |= 1 << x
            chosen = -1
            for v in sorted(pending):
                if pred[v] & alive & ~(1 << v) == 0:
                    chosen = v
                    break
            assert chosen >= 0, "some pending simple vertex must be minimal"
            order.append(chosen)
            pass_of[chosen] = pass_no
            alive ^= 1 << chosen
            pending.remove(chosen)
            if candidates >> chosen & 1:
                independent |= 1 << chosen
                candidates &= ~(1 << chosen)
                candidates &= ~g.adj[chosen]

    return StrongOrdering(tuple(order), frozenset(bits(independent)), tuple(pass_of))


def independent_set_coloring(g: Graph, ordering: StrongOrdering) -> LinearColoring:
    """Walk the ordering; each yet-uncolored independent-set vertex opens
    a fresh color and hands it to its uncolored later neighbors.

    Uses exactly |independent set| colors.  The result is a linear
    coloring whenever the graph is strongly chordal with no induced
    six-vertex path; otherwise a warning is issued and the caller should
    verify.
    """
    order = ordering.order
    if sorted(order) != list(range(g.n)):
        raise ValueError("ordering does not cover this graph's vertex set")
    if find_induced(g, gen_path(6)) is not None:
        warnings.warn(
            "graph contains an induced six-vertex path; the produced coloring "
            "may not be linear",
            stacklevel=2,
        )

    colors = [0] * g.n
    k = 0
    for i, v in enumerate(order):
        if v not in ordering.independent_set:
            continue
        assert colors[v] == 0, "independent-set vertices are never pre-colored"
        k += 1
        colors[v] = k
        for u in order[i + 1 :]:
            if g.adj[v] >> u & 1 and colors[u] == 0:
                colors[u] = k
    if any(c == 0 for c in colors):
        missing = [v for v, c in enumerate(colors) if c == 0]
        raise ValueError(
            f"vertices {missing} stayed uncolored; the ordering was not produced "
            "from this graph"
        )
    assert k == len(ordering.independent_set)

    classes: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        classes.setdefault(c, []).append(v)
    chains = tuple(
        tuple(sorted(vs, key=lambda v: (g.closed(v).bit_count(), v)))
        for _, vs in sorted(classes.items())
    )
    return LinearColoring(tuple(colors), k, chains)
