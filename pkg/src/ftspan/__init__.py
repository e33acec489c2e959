"""Fault-tolerant graph spanners: construction, verification, size experiments."""

from .graph import (
    FaultMode,
    FaultSet,
    Graph,
    GraphFormatError,
    INFINITE,
    cartesian_product,
    girth,
    enumerate_short_cycles,
    load_graph,
    moore_bound,
    parse_graph,
    save_graph,
    dump_graph,
    shortest_path_dist,
    tensor_product,
)
from .generators import (
    biclique,
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
    random_graph,
)
from .spanner import (
    EdgeDecision,
    GreedyTrace,
    SpannerParams,
    SpannerResult,
    canonical_edge_order,
    fault_witness,
    ft_greedy_spanner,
    greedy_spanner,
)
from .verifier import StretchReport, VerifyMethod, verify_ft_spanner, verify_spanner

__version__ = "0.1.0"

__all__ = [
    "FaultMode",
    "FaultSet",
    "Graph",
    "GraphFormatError",
    "INFINITE",
    "cartesian_product",
    "girth",
    "enumerate_short_cycles",
    "load_graph",
    "moore_bound",
    "parse_graph",
    "save_graph",
    "dump_graph",
    "shortest_path_dist",
    "tensor_product",
    "biclique",
    "complete_graph",
    "cycle_graph",
    "path_graph",
    "petersen_graph",
    "random_graph",
    "EdgeDecision",
    "GreedyTrace",
    "SpannerParams",
    "SpannerResult",
    "canonical_edge_order",
    "fault_witness",
    "ft_greedy_spanner",
    "greedy_spanner",
    "StretchReport",
    "VerifyMethod",
    "verify_ft_spanner",
    "verify_spanner",
    "__version__",
]
