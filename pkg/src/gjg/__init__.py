"""Generalized Johnson graphs J(v,k,i): closed-form invariants, explicit
witnesses, and an independent brute-force oracle.

J(v,k,i) has the k-subsets of a v-set as vertices, adjacent when they
intersect in exactly i elements; Kneser graphs (i = 0), odd graphs
(v = 2k+1, i = 0), and Johnson graphs (i = k-1) are special cases.
"""

from .errors import (
    BudgetExceeded,
    DegenerateClass,
    Disconnected,
    GJGError,
    InvalidOrder,
    InvalidSet,
    NoCommonNeighbor,
    OutOfRange,
    Unsupported,
)
from .formulas import (
    INFINITE,
    InvariantReport,
    diameter,
    distance_by_intersection,
    girth,
    has_common_neighbor,
    invariant_report,
    max_route_distance,
    odd_girth,
    report_for,
)
from .graphio import export_graph, export_report, rank, unrank
from .oracle import (
    DEFAULT_VERTEX_BUDGET,
    ExplicitGraph,
    OracleReport,
    build_graph,
    oracle_diameter,
    oracle_distance,
    oracle_girth,
    oracle_odd_girth,
    oracle_report,
)
from .params import (
    GraphClass,
    Parameters,
    delta,
    intersection_range,
    make_parameters,
    normalize,
)
from .witness import (
    Walk,
    WalkKind,
    common_neighbor,
    geodesic,
    odd_closed_walk,
    shortest_cycle,
    verify_walk,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded", "DegenerateClass", "Disconnected", "GJGError",
    "InvalidOrder", "InvalidSet", "NoCommonNeighbor", "OutOfRange",
    "Unsupported", "INFINITE", "InvariantReport", "diameter",
    "distance_by_intersection", "girth", "has_common_neighbor",
    "invariant_report", "max_route_distance", "odd_girth", "report_for",
    "export_graph", "export_report", "rank", "unrank",
    "DEFAULT_VERTEX_BUDGET", "ExplicitGraph", "OracleReport", "build_graph",
    "oracle_diameter", "oracle_distance", "oracle_girth", "oracle_odd_girth",
    "oracle_report", "GraphClass", "Parameters", "delta",
    "intersection_range", "make_parameters", "normalize", "Walk", "WalkKind",
    "common_neighbor", "geodesic", "odd_closed_walk", "shortest_cycle",
    "verify_walk",
]
