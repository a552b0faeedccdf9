"""Exact Hausdorff distance between unrooted trees in polynomial time."""

from .engine import (
    CoverDistanceReport,
    HausdorffResult,
    build_child_instance,
    hausdorff_distance,
    optimal_top_down_common_subtree,
    reconstruction_of_mapping,
    verify_mapping,
)
from .generate import gen_random_tree, relabel
from .io import ParseError, ResultDocument, parse_edge_list, serialize_edge_list
from .matching import (
    Matching,
    WeightedBipartiteInstance,
    brute_force_bottleneck,
    hopcroft_karp,
    solve_optimal_perfect_matching,
)
from .oracle import OracleConfig, oracle_hausdorff, oracle_rooted
from .tree import (
    MetricSummary,
    RootedTree,
    Tree,
    TreeError,
    build_tree,
    is_isomorphic,
    metric_summary,
    root_at,
)

__version__ = "0.1.0"
