"""Command-line surface: structural reports, colorings, DOT output,
check suites with CSV/figure artifacts, and example-graph generation.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from importlib import resources
from pathlib import Path

from . import io as gio
from . import patterns as pat
from .classes import check_chordal, check_strongly_chordal, classify
from .coloring import linear_chromatic_number, linear_color
from .graph import Graph
from .ndag import build_dag
from .oracles import SubsetCheck, brute_chromatic_number, check_colinear, check_linear, clique_number, independence_number
from .verify import SUITES, CheckLine, run_suites

# Exact search bounds; exceeding them needs --force.
BRUTE_NUMBERS_MAX_N = 16  # chromatic/clique/independence numbers
DEEP_MAX_N = 10  # per-subset co-linear / linear checks


def report_schema() -> dict:
    """The JSON schema that `analyze` reports conform to."""
    with resources.files("lincolor").joinpath("data/report.schema.json").open("r", encoding="utf-8") as fh:
        return json.load(fh)


def _read_graph(args) -> tuple[str, Graph]:
    if args.path == "-":
        name, text = "stdin", sys.stdin.read()
    else:
        path = Path(args.path)
        name, text = path.name, path.read_text(encoding="utf-8")
    return name, gio.parse_graph(text, fmt=args.format)


def _encode_subset_check(check: SubsetCheck) -> dict:
    w = check.witness
    witness = None
    if w is not None:
        witness = {
            "vertices": sorted(w.vertices),
            "left_name": w.left_name,
            "left": w.left,
            "right_name": w.right_name,
            "right": w.right,
        }
    return {"holds": check.holds, "witness": witness}


def build_report(name: str, g: Graph, deep: bool = False) -> dict:
    coloring = linear_color(g)
    chord = check_chordal(g)
    strong = check_strongly_chordal(g)
    flags = classify(g)
    report = {
        "id": name,
        "n": g.n,
        "m": g.edge_count(),
        "numbers": {
            "chromatic_number": brute_chromatic_number(g),
            "clique_number": clique_number(g),
            "independence_number": independence_number(g),
            "linear_chromatic_number": coloring.k,
            "complement_linear_chromatic_number": linear_chromatic_number(g.complement()),
        },
        "classes": {
            "chordal": flags.chordal,
            "co_chordal": flags.co_chordal,
            "split": flags.split,
            "threshold": flags.threshold,
            "quasi_threshold": flags.quasi_threshold,
            "strongly_chordal": flags.strongly_chordal,
            "p6_free": flags.p6_free,
        },
        "coloring": list(coloring.colors),
        "chains": [list(chain) for chain in coloring.chains],
        "witnesses": {
            "hole": list(chord.hole) if chord.hole is not None else None,
            "no_simple_vertex": list(strong.stuck) if strong.stuck is not None else None,
        },
        "deep": None,
    }
    if deep:
        report["deep"] = {
            "colinear": _encode_subset_check(check_colinear(g)),
            "linear": _encode_subset_check(check_linear(g)),
        }
    return report


def _render_table(report: dict) -> str:
    rows: list[tuple[str, str]] = [
        ("id", report["id"]),
        ("vertices", str(report["n"])),
        ("edges", str(report["m"])),
    ]
    rows += [(key, str(val)) for key, val in report["numbers"].items()]
    member = [name for name, flag in report["classes"].items() if flag]
    rows.append(("classes", " ".join(member) if member else "(none)"))
    coloring = " ".join(f"{v}:{c}" for v, c in enumerate(report["coloring"]))
    rows.append(("coloring", coloring if coloring else "(empty graph)"))
    chains = "; ".join(",".join(map(str, chain)) for chain in report["chains"])
    rows.append(("chains", chains if chains else "(none)"))
    if report["witnesses"]["hole"] is not None:
        rows.append(("hole", " ".join(map(str, report["witnesses"]["hole"]))))
    if report["witnesses"]["no_simple_vertex"] is not None:
        rows.append(("no_simple_vertex", " ".join(map(str, report["witnesses"]["no_simple_vertex"]))))
    if report["deep"] is not None:
        for key in ("colinear", "linear"):
            entry = report["deep"][key]
            if entry["holds"]:
                rows.append((key, "yes"))
            else:
                w = entry["witness"]
                rows.append(
                    (key, f"no: on vertices {w['vertices']} {w['left_name']}={w['left']} != {w['right_name']}={w['right']}")
                )
    width = max(len(key) for key, _ in rows)
    return "\n".join(f"{key:<{width}}  {val}" for key, val in rows)


def cmd_analyze(args) -> int:
    name, g = _read_graph(args)
    if g.n > BRUTE_NUMBERS_MAX_N and not args.force:
        print(
            f"error: {g.n} vertices exceeds the exact-search bound n <= {BRUTE_NUMBERS_MAX_N} "
            "for chromatic/clique/independence numbers; pass --force to run anyway",
            file=sys.stderr,
        )
        return 2
    if args.deep and g.n > DEEP_MAX_N and not args.force:
        print(
            f"error: {g.n} vertices exceeds the exact-search bound n <= {DEEP_MAX_N} "
            "for --deep subset checks; pass --force to run anyway",
            file=sys.stderr,
        )
        return 2
    report = build_report(name, g, deep=args.deep)
    print(_render_table(report) if args.pretty else json.dumps(report, indent=2))
    if args.plot:
        from .plotting import save_analysis_figure

        save_analysis_figure(args.plot, g, linear_color(g).colors, build_dag(g))
    return 0


def cmd_lincolor(args) -> int:
    name, g = _read_graph(args)
    coloring = linear_color(g)
    for v in range(g.n):
        print(f"{v} {coloring.colors[v]}")
    print(f"k {coloring.k}")
    if args.plot:
        from .plotting import save_graph_figure

        save_graph_figure(args.plot, g, coloring.colors, title=f"{name}: {coloring.k} colors")
    return 0


def cmd_dag(args) -> int:
    _, g = _read_graph(args)
    sys.stdout.write(build_dag(g).to_dot())
    return 0


def _write_verify_artifacts(out_dir: str, lines: list[CheckLine]) -> list[Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    csv_path = out / "verify.csv"
    with csv_path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["claim", "description", "cases", "failures", "status", "counterexample", "notes"])
        for line in lines:
            writer.writerow(
                [
                    line.claim,
                    line.description,
                    line.cases,
                    line.failures,
                    "pass" if line.passed else "fail",
                    line.counterexample or "",
                    " | ".join(line.notes),
                ]
            )
    written.append(csv_path)
    from .plotting import save_graph_figure

    for i, line in enumerate(lines):
        for slug, g, colors in line.exhibits:
            fig_path = out / f"{line.claim.replace('.', '_')}_{i:02d}_{slug}.png"
            save_graph_figure(fig_path, g, colors, title=f"{line.claim}: {slug} (n={g.n})")
            written.append(fig_path)
    return written


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    lines = run_suites(names, max_n=args.max_n, seed=args.seed, samples=args.samples)
    for line in lines:
        status = "pass" if line.passed else "FAIL"
        print(f"[{status}] {line.claim}: {line.description}: {line.cases - line.failures}/{line.cases}")
        if line.counterexample:
            print(f"    counterexample: {line.counterexample}")
        for note in line.notes:
            print(f"    {note}")
    if args.out_dir:
        for path in _write_verify_artifacts(args.out_dir, lines):
            print(f"wrote {path}")
    return 0 if all(line.passed for line in lines) else 1


GEN_KINDS = ("cycle", "path", "complete", "star", "ksun", "incomplete-ksun", "threshold", "strongly-chordal", "random")


def _generate(kind: str, n: int, seed: int) -> Graph:
    if kind == "cycle":
        return pat.gen_cycle(n)
    if kind == "path":
        return pat.gen_path(n)
    if kind == "complete":
        return pat.gen_complete(n)
    if kind == "star":
        return pat.gen_star(n)
    if kind == "ksun":
        return pat.k_sun(n)
    if kind == "incomplete-ksun":
        return pat.incomplete_k_sun(n)
    if kind == "threshold":
        return pat.gen_threshold(n, seed)
    if kind == "strongly-chordal":
        return pat.gen_strongly_chordal(n, seed)
    if kind == "random":
        return pat.gen_random(n, seed)
    raise ValueError(f"unknown kind {kind!r}")


def cmd_gen(args) -> int:
    g = _generate(args.kind, args.n, args.seed)
    sys.stdout.write(gio.emit_edgelist(g))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lincolor",
        description="Minimum linear colorings of graphs: analysis, class recognition, and check suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("path", nargs="?", default="-", help="input graph file, or '-' for stdin (default)")
        sp.add_argument("--format", choices=("auto", "edgelist", "dimacs"), default="auto", help="input format (default: sniff)")

    p = sub.add_parser("analyze", help="full structural report (JSON; table with --pretty)")
    add_input(p)
    p.add_argument("--deep", action="store_true", help="also run exhaustive per-subset co-linear/linear checks")
    p.add_argument("--force", action="store_true", help="override the exact-search size bounds")
    p.add_argument("--pretty", action="store_true", help="render a table instead of JSON")
    p.add_argument("--plot", metavar="FILE", help="save a figure of the colored graph and its containment DAG")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("lincolor", help="print a minimum linear coloring, one 'vertex color' line each, then 'k <count>'")
    add_input(p)
    p.add_argument("--plot", metavar="FILE", help="save a figure of the colored graph")
    p.set_defaults(func=cmd_lincolor)

    p = sub.add_parser("dag", help="print the closed-neighborhood containment DAG as DOT")
    add_input(p)
    p.set_defaults(func=cmd_dag)

    p = sub.add_parser("verify", help="run a named check suite over graph sweeps")
    p.add_argument("suite", choices=("all", *SUITES), help="which suite to run")
    p.add_argument("--max-n", type=int, default=None, help="override the suite's vertex-count scope")
    p.add_argument("--seed", type=int, default=0, help="seed for sampled suites (default 0)")
    p.add_argument("--samples", type=int, default=None, help="override the suite's sample count")
    p.add_argument("--out-dir", metavar="DIR", help="also write verify.csv and exhibit figures here")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate an example graph as an edge list")
    p.add_argument("kind", choices=GEN_KINDS)
    p.add_argument("n", type=int, help="size parameter (vertices; hub count for sun kinds)")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized kinds (default 0)")
    p.set_defaults(func=cmd_gen)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except gio.GraphFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
