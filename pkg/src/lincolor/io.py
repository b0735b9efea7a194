"""Reading and writing graphs in the two supported text formats.

edgelist:  header line "n m", then m lines "u v" with 0-based labels.
dimacs:    "p edge n m" header, then m lines "e u v" with 1-based labels.
Lines starting with "c" (or "#" in edgelist files) are comments.
"""

from __future__ import annotations

from .graph import Graph


class GraphFormatError(ValueError):
    """Input text does not form a valid graph description."""


def _int_pair(parts: list[str], lineno: int, what: str) -> tuple[int, int]:
    if len(parts) != 2:
        raise GraphFormatError(f"line {lineno}: expected {what}, got {' '.join(parts)!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphFormatError(
            f"line {lineno}: expected two integers, got {' '.join(parts)!r}"
        ) from None


def parse_edgelist(text: str) -> Graph:
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            header = _int_pair(parts, lineno, "'n m' header")
        else:
            u, v = _int_pair(parts, lineno, "'u v' edge")
            edges.append((u, v, lineno))
    if header is None:
        raise GraphFormatError("missing 'n m' header line")
    n, m = header
    if n < 0 or m < 0:
        raise GraphFormatError(f"header declares negative counts: n={n} m={m}")
    if len(edges) != m:
        raise GraphFormatError(f"header declares {m} edges but {len(edges)} edge lines found")
    for u, v, lineno in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop ({u}, {v}) not allowed")
    return Graph.from_edge_list(n, [(u, v) for u, v, _ in edges])


def parse_dimacs(text: str) -> Graph:
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if header is not None:
                raise GraphFormatError(f"line {lineno}: duplicate problem line")
            if len(parts) != 4 or parts[1] != "edge":
                raise GraphFormatError(f"line {lineno}: expected 'p edge n m'")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise GraphFormatError(f"line {lineno}: expected 'p edge n m'") from None
        elif parts[0] == "e":
            if header is None:
                raise GraphFormatError(f"line {lineno}: edge before problem line")
            u, v = _int_pair(parts[1:], lineno, "'e u v' edge")
            edges.append((u, v, lineno))
        else:
            raise GraphFormatError(f"line {lineno}: unknown directive {parts[0]!r}")
    if header is None:
        raise GraphFormatError("missing 'p edge n m' problem line")
    n, m = header
    if len(edges) != m:
        raise GraphFormatError(f"problem line declares {m} edges but {len(edges)} found")
    for u, v, lineno in edges:
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphFormatError(f"line {lineno}: edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop ({u}, {v}) not allowed")
    return Graph.from_edge_list(n, [(u - 1, v - 1) for u, v, _ in edges])


def parse_graph(text: str, fmt: str = "auto") -> Graph:
    """Parse either format; `auto` sniffs a DIMACS problem/comment line."""
    if fmt == "edgelist":
        return parse_edgelist(text)
    if fmt == "dimacs":
        return parse_dimacs(text)
    if fmt != "auto":
        raise GraphFormatError(f"unknown format {fmt!r}")
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.split()[0] in ("p", "e"):
            return parse_dimacs(text)
        if line.startswith("c"):
            continue
        break
    return parse_edgelist(text)


def emit_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count()}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def emit_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.edge_count()}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
