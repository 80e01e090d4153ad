"""nclgraph: exact nested complexity length and curve-graph obstructions.

A library and CLI that computes the nested complexity length of finite
graphs exactly, detects the obstruction patterns (half-graphs, complete
multipartite patterns, oversized cliques, complete bipartite subgraphs),
and renders certified verdicts on whether a finite graph can be an induced
subgraph of the curve graph of a surface of genus g with p punctures.
"""

from ._kernels import backend_name
from .errors import SizeCapError
from .experiments import (
    ExperimentConfig,
    ExperimentSummary,
    graph_from_index,
    run_enumeration_experiment,
)
from .generators import (
    ETA_MODES,
    GraphFamilySpec,
    gen_complete,
    gen_cycle,
    gen_edgeless,
    gen_half_graph,
    gen_marking_graph,
    gen_multipartite,
    gen_random,
    random_seed_stream,
)
from .graph import Graph, build_graph, from_edgelist_text, to_edgelist_text
from .graph6 import decode_graph6, encode_graph6
from .invariants import (
    DETECTOR_VERTEX_CAP,
    HalfGraphWitness,
    MultipartiteWitness,
    chromatic_number,
    clique_number,
    density,
    half_graph_height,
    has_kmn_subgraph,
    induced_multipartite,
    is_edge_stable,
    max_clique,
)
from .ncl import (
    NCL_VERTEX_CAP,
    BipartiteBoundResult,
    NestedComplexitySequence,
    check_certificate,
    ncl_exact,
    ncl_naive,
    ncl_upper_bound_bipartite,
    verify_certificate,
)
from .obstructions import (
    NO_OBSTRUCTION_FOUND,
    OBSTRUCTED,
    FiredTest,
    ObstructionBudget,
    ObstructionReport,
    krt_membership,
    obstruct,
    recheck_certificates,
)
from .surface import SurfaceParams, density_ncl_lower_bound, surface_params

__version__ = "0.1.0"

__all__ = [
    "BipartiteBoundResult",
    "DETECTOR_VERTEX_CAP",
    "ETA_MODES",
    "ExperimentConfig",
    "ExperimentSummary",
    "FiredTest",
    "Graph",
    "GraphFamilySpec",
    "HalfGraphWitness",
    "MultipartiteWitness",
    "NCL_VERTEX_CAP",
    "NO_OBSTRUCTION_FOUND",
    "NestedComplexitySequence",
    "OBSTRUCTED",
    "ObstructionBudget",
    "ObstructionReport",
    "SizeCapError",
    "SurfaceParams",
    "backend_name",
    "build_graph",
    "check_certificate",
    "chromatic_number",
    "clique_number",
    "decode_graph6",
    "density",
    "density_ncl_lower_bound",
    "encode_graph6",
    "from_edgelist_text",
    "gen_complete",
    "gen_cycle",
    "gen_edgeless",
    "gen_half_graph",
    "gen_marking_graph",
    "gen_multipartite",
    "gen_random",
    "graph_from_index",
    "half_graph_height",
    "has_kmn_subgraph",
    "induced_multipartite",
    "is_edge_stable",
    "krt_membership",
    "max_clique",
    "ncl_exact",
    "ncl_naive",
    "ncl_upper_bound_bipartite",
    "obstruct",
    "random_seed_stream",
    "recheck_certificates",
    "run_enumeration_experiment",
    "surface_params",
    "to_edgelist_text",
    "verify_certificate",
]
