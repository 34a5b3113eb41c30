"""Zero-free disk bounds for chromatic polynomials.

The package computes and verifies radii C so that the chromatic
polynomial of a graph with maximum degree D has no root in |q| <= C*D,
both for the classical degree-only constants and for sharper per-graph
variants driven by rooted-tree generating functions.
"""

from .bounds import (
    BoundReport,
    complete_graph_bound,
    constants,
    cstar_delta,
    cstar_delta_a_form,
    cstar_graph,
    cstar_graph_opt,
    cstar_graph_series,
    fp_parameters,
    graph_id,
    sokal_bound,
    verify_zero_free,
)
from .chromatic import chromatic_polynomial, count_proper_colorings
from .corpus import connected_graphs, corpus_graphs, named_corpus
from .errors import (
    ChromaboundError,
    ConvergenceError,
    GraphParseError,
    InconclusiveError,
    ResourceLimitError,
)
from .graphs import (
    Graph,
    NeighborhoodProfile,
    canonical_form,
    enumerate_connected_subsets,
    generate_graph,
    neighborhood_profile,
    parse_graph,
)
from .optimize import OptimizationResult, bisect_increasing, minimize_scalar
from .polymer import (
    CnBoundReport,
    FpConditionReport,
    Monomer,
    PenroseReport,
    RootedSpanningTree,
    activity,
    activity_exact,
    check_fp_condition,
    classify_tree,
    cq_norm,
    cq_norm_scaled,
    enumerate_monomers,
    enumerate_spanning_trees,
    hardcore_partition,
    penrose_report,
    signed_connected_sum,
    spanning_tree_count,
    verify_cn_bound,
)
from .polynomial import ONE, IntPolynomial, X
from .roots import RootSet, polynomial_roots
from .series import (
    TruncatedSeries,
    series_radius,
    solve_tree_series,
    sup_x_threshold,
    t_n_delta,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "ChromaboundError",
    "CnBoundReport",
    "ConvergenceError",
    "FpConditionReport",
    "Graph",
    "GraphParseError",
    "InconclusiveError",
    "IntPolynomial",
    "Monomer",
    "NeighborhoodProfile",
    "ONE",
    "OptimizationResult",
    "PenroseReport",
    "ResourceLimitError",
    "RootSet",
    "RootedSpanningTree",
    "TruncatedSeries",
    "X",
    "activity",
    "activity_exact",
    "bisect_increasing",
    "canonical_form",
    "check_fp_condition",
    "chromatic_polynomial",
    "classify_tree",
    "complete_graph_bound",
    "connected_graphs",
    "constants",
    "corpus_graphs",
    "count_proper_colorings",
    "cq_norm",
    "cq_norm_scaled",
    "cstar_delta",
    "cstar_delta_a_form",
    "cstar_graph",
    "cstar_graph_opt",
    "cstar_graph_series",
    "enumerate_connected_subsets",
    "enumerate_monomers",
    "enumerate_spanning_trees",
    "fp_parameters",
    "generate_graph",
    "graph_id",
    "hardcore_partition",
    "minimize_scalar",
    "named_corpus",
    "neighborhood_profile",
    "parse_graph",
    "penrose_report",
    "polynomial_roots",
    "series_radius",
    "signed_connected_sum",
    "sokal_bound",
    "solve_tree_series",
    "spanning_tree_count",
    "sup_x_threshold",
    "t_n_delta",
    "verify_cn_bound",
    "verify_zero_free",
]
