"""Checkable claims about linear colorings, run over exhaustive sweeps
and seeded random families.

Each suite checks one statement and reports per-scope counts plus the
first counterexample found.  Suites never print; the CLI renders their
results as text, CSV, and figures.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from . import classes as cls
from . import oracles as orc
from . import patterns as pat
from .coloring import linear_chromatic_number, linear_color, verify_linear_coloring, verify_linear_coloring_cliquesets
from .graph import Graph
from .strong_ordering import independent_set_coloring, strong_elimination_ordering


@dataclass(frozen=True)
class CheckLine:
    claim: str
    description: str
    cases: int
    failures: int
    counterexample: str | None = None
    notes: tuple[str, ...] = ()
    exhibits: tuple[tuple[str, Graph, tuple[int, ...] | None], ...] = ()

    @property
    def passed(self) -> bool:
        return self.failures == 0


def _fmt_graph(g: Graph) -> str:
    return f"n={g.n} edges={sorted(g.edges())}"


# ---------------------------------------------------------------------------
# exhaustive class sweeps


def suite_cor2_1(max_n=None, seed=0, samples=None) -> list[CheckLine]:
    """Chromatic number never exceeds the complement's linear chromatic number."""
    max_n = 6 if max_n is None else max_n
    lines = []
    for n in range(max_n + 1):
        cases = failures = 0
        ce = None
        exhibits = ()
        for g in pat.enumerate_graphs(n):
            cases += 1
            chi = orc.brute_chromatic_number(g)
            lam = linear_chromatic_number(g.complement())
            if chi > lam:
                failures += 1
                if ce is None:
                    ce = f"{_fmt_graph(g)}: chromatic={chi} > complement linear chromatic={lam}"
                    exhibits = (("counterexample", g, None),)
        lines.append(
            CheckLine("cor2.1", f"chi(G) <= linear-chi(complement(G)), n={n}", cases, failures, ce, exhibits=exhibits)
        )
    return lines


def suite_prop2_3(max_n=None, seed=0, samples=None) -> list[CheckLine]:
    """DAG path-cover pipeline agrees with the exhaustive partition search."""
    max_n = 6 if max_n is None else max_n
    lines = []
    for n in range(max_n + 1):
        cases = failures = 0
        ce = None
        exhibits = ()
        for g in pat.enumerate_graphs(n):
            cases += 1
            fast = linear_chromatic_number(g)
            brute = orc.brute_linear_chromatic_number(g)
            if fast != brute:
                failures += 1
                if ce is None:
                    ce = f"{_fmt_graph(g)}: pipeline={fast} != exhaustive={brute}"
                    exhibits = (("counterexample", g, None),)
        lines.append(CheckLine("prop2.3", f"pipeline linear chromatic = exhaustive, n={n}", cases, failures, ce, exhibits=exhibits))
    return lines


def suite_cor2_2(max_n=None, seed=0, samples=None) -> list[CheckLine]:
    """The neighborhood-chain verifier and the clique-set verifier agree."""
    max_n = 5 if max_n is None else max_n
    samples = 1000 if samples is None else samples
    lines = []
    for n in range(max_n + 1):
        cases = failures = 0
        ce = None
        exhibits = ()
        for idx, g in enumerate(pat.enumerate_graphs(n)):
            cases += 1
            rng = random.Random(f"{seed}:{n}:{idx}")
            colorings = [list(linear_color(g).colors)]
            colorings += [[rng.randint(1, max(1, n)) for _ in range(n)] for _ in range(samples)]
            for colors in colorings:
                a = verify_linear_coloring(g, colors)
                b = verify_linear_coloring_cliquesets(g, colors)
                if a != b:
                    failures += 1
                    if ce is None:
                        ce = f"{_fmt_graph(g)} colors={colors}: neighborhoods say {a}, clique sets say {b}"
                        exhibits = (("counterexample", g, tuple(colors)),)
                    break
        lines.append(
            CheckLine("cor2.2", f"both linearity verifiers agree ({samples} random colorings/class), n={n}", cases, failures, ce, exhibits=exhibits)
        )
    return lines


def suite_prop3_2(max_n=None, seed=0, samples=None) -> list[CheckLine]:
    """Definitional co-linearity agrees with the augmented-clique route."""
    max_n = 6 if max_n is None else max_n
    lines = []
    for n in range(max_n + 1):
        cases = failures = 0
        ce = None
        exhibits = ()
        for g in pat.enumerate_graphs(n):
            cases += 1
            a = orc.check_colinear(g).holds
            b = orc.check_colinear_via_actual_edges(g).holds
            if a != b:
                failures += 1
                if ce is None:
                    ce = f"{_fmt_graph(g)}: definitional={a}, augmented-clique={b}"
                    exhibits = (("counterexample", g, None),)
        lines.append(CheckLine("prop3.2", f"both co-linearity routes agree, n={n}", cases, failures, ce, exhibits=exhibits))
    return lines


def suite_prop3_3(max_n=None, seed=0, samples=None) -> list[CheckLine]:
    """Threshold graphs, and complements of quasi-threshold graphs, are co-linear."""
    max_n = 9 if max_n is None else max_n
    samples = 200 if samples is None else samples
    lines = []
    for name, generate, expect_class in (
        ("threshold graphs are co-linear", pat.gen_threshold, cls.is_threshold),
        (
            "complements of quasi-threshold graphs are co-linear",
            lambda n, s: pat.gen_quasi_threshold(n, s).complement(),
            lambda g: cls.is_quasi_threshold(g.complement()),
        ),
    ):
        rng = random.Random(f"{seed}:{name}")
        cases = failures = 0
        ce = None
        exhibits = ()
        for _ in range(samples):
            n = rng.randint(1, max_n)
            g = generate(n, rng.randrange(2**30))
            if not expect_class(g):
                raise RuntimeError(f"generator produced out-of-class sample: {_fmt_graph(g)}")
            cases += 1
            chk = orc.check_colinear(g)
            if not chk.holds:
                failures += 1
                if ce is None:
                    ce = f"{_fmt_graph(g)}: {chk.witness.describe()}"
                    exhibits = (("counterexample", g, None),)
        lines.append(CheckLine("prop3.3", f"{name} ({samples} seeded samples, n<={max_n})", cases, failures, ce, exhibits=exhibits))
    return lines


def _split_candidate() -> Graph:
    # hub clique of four plus five outer vertices on distinct hub pairs
    edges = list(itertools.combinations(range(4), 2))
    for j, (a, b) in enumerate([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]):
        edges += [(a, 4 + j), (b, 4 + j)]
    return Graph.from_edge_list(9, edges)


def suite_prop3_4(max_n=None, seed=0, samples=None) -> list[CheckLine]:
    """Co-linear graphs are co-chordal; the converse fails within split graphs."""
    max_n = 6 if max_n is None else max_n
    cases = failures = 0
    ce = None
    exhibits = ()
    for n in range(max_n + 1):
        for g in pat.enumerate_graphs(n):
            if not orc.check_colinear(g).holds:
                continue
            cases += 1
            if not cls.is_co_chordal(g):
                failures += 1
                if ce is None:
                    ce = f"{_fmt_graph(g)}: co-linear but not co-chordal"
                    exhibits = (("counterexample", g, None),)
    lines = [
        CheckLine("prop3.4", f"co-linear classes are co-chordal, n<={max_n}", cases, failures, ce, exhibits=exhibits)
    ]

    found = None
    candidate = _split_candidate()
    tried = 0
    search = itertools.chain(
        [candidate],
        (pat.gen_split(8 + t % 3, (seed << 16) + t) for t in range(20000)),
    )
    for g in search:
        tried += 1
        if not cls.is_split(g):
            continue
        chk = orc.check_colinear(g)
        if not chk.holds:
            found = (g, chk)
            break
    if found:
        g, chk = found
        lines.append(
            CheckLine(
                "prop3.4",
                "a split graph that is not co-linear exists",
                1,
                0,
                notes=(f"found {_fmt_graph(g)}", f"witness {chk.witness.describe()}"),
                exhibits=(("split_not_colinear", g, None),),
            )
        )
    else:
        lines.append(
            CheckLine("prop3.4", "a split graph that is not co-linear exists", 1, 1, f"no instance found in {tried} candidates")
        )
    return lines


def suite_prop3_5(max_n=None, seed=0, samples=None) -> list[CheckLine]:
    """Co-linear graphs contain no induced 2K2, no antihole, no complement of P6."""
    max_n = 6 if max_n is None else max_n
    two_k2 = Graph.from_edge_list(4, [(0, 1), (2, 3)])
    co_p6 = pat.gen_path(6).complement()
    cases = failures = 0
    ce = None
    exhibits = ()
    for n in range(max_n + 1):
        for g in pat.enumerate_graphs(n):
            if not orc.check_colinear(g).holds:
                continue
            cases += 1
            bad = None
            if pat.find_induced(g, two_k2) is not None:
                bad = "an induced 2K2"
            elif pat.find_antihole(g) is not None:
                bad = "an antihole"
            elif pat.find_induced(g, co_p6) is not None:
                bad = "an induced complement of the six-vertex path"
            if bad:
                failures += 1
                if ce is None:
                    ce = f"{_fmt_graph(g)}: co-linear but contains {bad}"
                    exhibits = (("counterexample", g, None),)
    return [
        CheckLine(
            "prop3.5",
            f"co-linear classes are (2K2, antihole, co-P6)-free, n<={max_n}",
            cases,
            failures,
            ce,
            exhibits=exhibits,
        )
    ]


def suite_prop4_3(max_n=None, seed=0, samples=None) -> list[CheckLine]:
    """Linear graphs are chordal."""
    max_n = 6 if max_n is None else max_n
    cases = failures = 0
    ce = None
    exhibits = ()
    for n in range(max_n + 1):
        for g in pat.enumerate_graphs(n):
            if not orc.check_linear(g).holds:
                continue
            cases += 1
            if not cls.is_chordal(g):
                failures += 1
                if ce is None:
                    ce = f"{_fmt_graph(g)}: linear but not chordal"
                    exhibits = (("counterexample", g, None),)
    return [CheckLine("prop4.3", f"linear classes are chordal, n<={max_n}", cases, failures, ce, exhibits=exhibits)]


# ---------------------------------------------------------------------------
# seeded constructive checks


def sample_p6_free_strongly_chordal(max_n: int, seed: int, samples: int) -> list[Graph]:
    """Seeded interval graphs filtered to have no induced six-vertex path."""
    rng = random.Random(seed)
    p6 = pat.gen_path(6)
    out: list[Graph] = []
    while len(out) < samples:
        n = rng.randint(1, max_n)
        g = pat.gen_strongly_chordal(n, rng.randrange(2**30))
        if pat.find_induced(g, p6) is None:
            out.append(g)
    return out


def suite_lemma4_2(max_n=None, seed=0, samples=None) -> list[CheckLine]:
    """On P6-free strongly chordal graphs the elimination machinery is exact:
    valid strong ordering, maximum independent set, and a verified linear
    coloring with independence-number many colors matching the pipeline."""
    max_n = 12 if max_n is None else max_n
    samples = 200 if samples is None else samples
    cases = failures = 0
    ce = None
    exhibits = ()
    for g in sample_p6_free_strongly_chordal(max_n, seed, samples):
        cases += 1
        problem = None
        try:
            ordering = strong_elimination_ordering(g)
            alpha = orc.independence_number(g)
            if not cls.verify_strong_peo(g, ordering.order):
                problem = "ordering fails the strong elimination check"
            elif len(ordering.independent_set) != alpha:
                problem = f"independent set has size {len(ordering.independent_set)}, independence number is {alpha}"
            else:
                kc = independent_set_coloring(g, ordering)
                bad_pair = verify_linear_coloring(g, kc.colors)
                if bad_pair is not None:
                    problem = f"coloring not linear, incomparable pair {bad_pair}"
                elif kc.k != alpha:
                    problem = f"coloring uses {kc.k} colors, expected {alpha}"
                elif linear_chromatic_number(g) != alpha:
                    problem = f"pipeline says {linear_chromatic_number(g)}, expected {alpha}"
        except ValueError as exc:
            problem = f"ordering construction failed: {exc}"
        if problem:
            failures += 1
            if ce is None:
                ce = f"{_fmt_graph(g)}: {problem}"
                exhibits = (("counterexample", g, None),)
    return [
        CheckLine(
            "lemma4.2",
            f"strong ordering + coloring exact on P6-free strongly chordal samples ({samples} seeded, n<={max_n})",
            cases,
            failures,
            ce,
            exhibits=exhibits,
        )
    ]


def suite_lemma4_3(max_n=None, seed=0, samples=None) -> list[CheckLine]:
    """Complete suns are linear with linear chromatic number = independence number."""
    k_max = 5 if max_n is None else max(3, min(max_n, 8))
    cases = failures = 0
    ce = None
    exhibits = ()
    for k in range(3, k_max + 1):
        cases += 1
        g = pat.k_sun(k)
        alpha = orc.independence_number(g)
        lam = linear_chromatic_number(g)
        linear = orc.check_linear(g)
        if not linear.holds or lam != alpha:
            failures += 1
            if ce is None:
                detail = linear.witness.describe() if linear.witness else f"lambda={lam} alpha={alpha}"
                ce = f"sun with {k} hub vertices: {detail}"
                exhibits = ((f"sun_{k}", g, None),)
    return [
        CheckLine("lemma4.3", f"complete suns k=3..{k_max} are linear with lambda=alpha", cases, failures, ce, exhibits=exhibits)
    ]


def minimal_nonlinear_classes(max_n: int) -> list[Graph]:
    """All isomorphism classes up to max_n that are not linear although
    every proper induced subgraph is, via a hereditary sweep."""
    linear_of: dict[tuple[int, int], bool] = {}
    minimal: list[Graph] = []
    for n in range(max_n + 1):
        for g in pat.enumerate_graphs(n):
            children_linear = True
            for v in range(n):
                sub, _ = g.induced([u for u in range(n) if u != v])
                if not linear_of[pat.canonical_code(sub)]:
                    children_linear = False
                    break
            self_ok = linear_chromatic_number(g) == orc.independence_number(g)
            linear_of[pat.canonical_code(g)] = children_linear and self_ok
            if children_linear and not self_ok:
                minimal.append(g)
    return minimal


def suite_thm4_2(max_n=None, seed=0, samples=None) -> list[CheckLine]:
    """Every minimal non-linear graph is a cycle (length >= 4), the
    six-vertex path, or properly contains a complete sun."""
    max_n = 7 if max_n is None else max_n
    minimal = minimal_nonlinear_classes(max_n)
    cases = failures = 0
    ce = None
    notes = []
    exhibits = []
    for g in minimal:
        cases += 1
        label = None
        if g.n >= 4 and g.edge_count() == g.n and pat.is_isomorphic(g, pat.gen_cycle(g.n)):
            label = f"cycle C{g.n}"
        elif g.n == 6 and pat.is_isomorphic(g, pat.gen_path(6)):
            label = "path P6"
        else:
            sun = pat.find_k_sun(g)
            if sun is not None:
                label = f"properly contains a {sun[0]}-sun on vertices {sorted(sun[1].values())}"
        if label is None:
            failures += 1
            if ce is None:
                ce = f"{_fmt_graph(g)}: minimal non-linear but matches no predicted shape"
                exhibits.append(("unexplained", g, None))
        else:
            notes.append(f"minimal non-linear: {_fmt_graph(g)} -> {label}")
            exhibits.append((f"minimal_{g.n}_{g.edge_count()}", g, None))
    return [
        CheckLine(
            "thm4.2",
            f"minimal non-linear classes are cycles, P6, or sun-containing, n<={max_n}",
            cases,
            failures,
            ce,
            notes=tuple(notes),
            exhibits=tuple(exhibits),
        )
    ]


SUITES = {
    "cor2.1": suite_cor2_1,
    "prop2.3": suite_prop2_3,
    "cor2.2": suite_cor2_2,
    "prop3.2": suite_prop3_2,
    "prop3.3": suite_prop3_3,
    "prop3.4": suite_prop3_4,
    "prop3.5": suite_prop3_5,
    "prop4.3": suite_prop4_3,
    "lemma4.2": suite_lemma4_2,
    "lemma4.3": suite_lemma4_3,
    "thm4.2": suite_thm4_2,
}


def run_suites(names, max_n=None, seed=0, samples=None) -> list[CheckLine]:
    lines: list[CheckLine] = []
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
        lines.extend(SUITES[name](max_n=max_n, seed=seed, samples=samples))
    return lines
