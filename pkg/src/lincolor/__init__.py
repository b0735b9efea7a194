"""lincolor: linear colorings of graphs.

A *linear coloring* partitions the vertices so that within each color
class the closed neighborhoods form a chain under inclusion.  The
package computes minimum linear colorings exactly in polynomial time
(containment DAG + minimum path cover), verifies colorings, recognizes
the related graph classes, and ships exhaustive/randomized check suites
for the structural facts the implementation relies on.
"""

from .classes import (
    ChordalityCheck,
    ClassReport,
    StrongChordalityCheck,
    actual_edges,
    check_chordal,
    check_strongly_chordal,
    classify,
    is_chordal,
    is_co_chordal,
    is_quasi_threshold,
    is_simple,
    is_simplicial,
    is_split,
    is_strongly_chordal,
    is_threshold,
    verify_strong_peo,
)
from .coloring import (
    LinearColoring,
    linear_chromatic_number,
    linear_color,
    verify_linear_coloring,
    verify_linear_coloring_cliquesets,
)
from .graph import Graph
from .io import GraphFormatError, emit_dimacs, emit_edgelist, parse_dimacs, parse_edgelist, parse_graph
from .ndag import NeighborhoodDag, build_dag
from .oracles import (
    SubsetCheck,
    SubsetWitness,
    brute_chromatic_number,
    brute_linear_chromatic_number,
    check_colinear,
    check_linear,
    clique_number,
    independence_number,
    is_colinear,
    is_linear,
    maximal_cliques,
)
from .path_cover import Matching, PathCover, max_bipartite_matching, min_path_cover
from .patterns import enumerate_graphs, find_induced, gen_cycle, gen_path, incomplete_k_sun, k_sun
from .strong_ordering import StrongOrdering, independent_set_coloring, strong_elimination_ordering

__version__ = "0.1.0"

__all__ = [
    "ChordalityCheck",
    "ClassReport",
    "Graph",
    "GraphFormatError",
    "LinearColoring",
    "Matching",
    "NeighborhoodDag",
    "PathCover",
    "StrongChordalityCheck",
    "StrongOrdering",
    "SubsetCheck",
    "SubsetWitness",
    "actual_edges",
    "brute_chromatic_number",
    "brute_linear_chromatic_number",
    "build_dag",
    "check_chordal",
    "check_colinear",
    "check_linear",
    "check_strongly_chordal",
    "classify",
    "clique_number",
    "emit_dimacs",
    "emit_edgelist",
    "enumerate_graphs",
    "find_induced",
    "gen_cycle",
    "gen_path",
    "incomplete_k_sun",
    "independence_number",
    "independent_set_coloring",
    "is_chordal",
    "is_co_chordal",
    "is_colinear",
    "is_linear",
    "is_quasi_threshold",
    "is_simple",
    "is_simplicial",
    "is_split",
    "is_strongly_chordal",
    "is_threshold",
    "k_sun",
    "linear_chromatic_number",
    "linear_color",
    "max_bipartite_matching",
    "maximal_cliques",
    "min_path_cover",
    "parse_dimacs",
    "parse_edgelist",
    "parse_graph",
    "strong_elimination_ordering",
    "verify_linear_coloring",
    "verify_linear_coloring_cliquesets",
    "verify_strong_peo",
]
