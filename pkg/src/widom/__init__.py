"""Exact optimization over maximal independent sets, with the
structural transforms and decomposition machinery that make it
polynomial on graphs containing neither P5 nor its complement."""

from .decomposition import (
    DecompNode,
    DecompTree,
    NodeKind,
    NotInClassError,
    build_tree,
    find_good_vertex,
    find_homogeneous_set,
    is_prime,
    tree_to_dot,
    tree_to_json,
    tree_to_json_text,
)
from .graph import Graph, WeightedGraph, set_precedes, unit_weights
from .hardness import (
    EquivalenceReport,
    ReductionClassReport,
    WidReduction,
    build_wid_reduction,
    check_reduction_class,
    check_reduction_equivalence,
)
from .io import GraphFormatError, emit_graph, parse_dimacs, parse_graph, parse_graph_file
from .oracle import (
    OracleBoundError,
    OracleReport,
    enumerate_mis,
    oracle_constrained,
    oracle_id,
    oracle_min_dominating,
    oracle_wid,
)
from .patterns import (
    C3,
    C4,
    C5,
    C6,
    CO_P5,
    DOMINO,
    P5,
    SUN3,
    Occurrence,
    Pattern,
    find_antisimplicial,
    find_induced,
    is_antisimplicial,
    is_c5,
    is_free,
    iter_induced,
)
from .satgraph import (
    GammaResult,
    SatPartition,
    StarResult,
    ab_edges,
    check_gstar_properties,
    check_obs1,
    find_sat_partition,
    gamma_transform,
    sat_partition,
    star_transform,
    verify_sat_partition,
)
from .solver import (
    NaiveReport,
    Solution,
    eq1_literal,
    solve_constrained,
    solve_id,
    solve_naive_eq1,
    solve_wid,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "WeightedGraph",
    "set_precedes",
    "unit_weights",
    "Pattern",
    "Occurrence",
    "P5",
    "CO_P5",
    "C3",
    "C4",
    "C5",
    "C6",
    "DOMINO",
    "SUN3",
    "find_induced",
    "iter_induced",
    "is_free",
    "is_antisimplicial",
    "find_antisimplicial",
    "is_c5",
    "OracleBoundError",
    "OracleReport",
    "enumerate_mis",
    "oracle_wid",
    "oracle_id",
    "oracle_constrained",
    "oracle_min_dominating",
    "SatPartition",
    "GammaResult",
    "StarResult",
    "verify_sat_partition",
    "sat_partition",
    "find_sat_partition",
    "gamma_transform",
    "star_transform",
    "ab_edges",
    "check_obs1",
    "check_gstar_properties",
    "WidReduction",
    "ReductionClassReport",
    "EquivalenceReport",
    "build_wid_reduction",
    "check_reduction_class",
    "check_reduction_equivalence",
    "NotInClassError",
    "NodeKind",
    "DecompNode",
    "DecompTree",
    "build_tree",
    "is_prime",
    "find_homogeneous_set",
    "find_good_vertex",
    "tree_to_json",
    "tree_to_json_text",
    "tree_to_dot",
    "Solution",
    "NaiveReport",
    "solve_wid",
    "solve_id",
    "solve_constrained",
    "solve_naive_eq1",
    "eq1_literal",
    "GraphFormatError",
    "parse_graph",
    "parse_graph_file",
    "parse_dimacs",
    "emit_graph",
]
