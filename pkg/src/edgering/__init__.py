"""Exact-arithmetic toolkit for edge rings of finite simple graphs.

Builds graphs (including diameter-4 triangular cacti from a compact spec),
computes the facet structure of the edge cone, decides normality through
exceptional cycle pairs, enumerates the normalization gap two independent
ways, organizes the gap into shifted-facet hole families, and renders a
Serre (S2) verdict with machine-checkable evidence.
"""

from .errors import (
    AmbiguousCenterError,
    BipartiteGraphError,
    DecompositionMismatchError,
    DimensionMismatchError,
    DisconnectedError,
    DuplicateVertexError,
    EdgeRingError,
    EmptySetError,
    EmptySpecError,
    LoopEdgeError,
    MethodMismatchError,
    NotAnEdgeError,
    NotDiameterFourCactusError,
    ParseError,
    PreconditionViolatedError,
    UnknownEndpointError,
)
from .graph_core import (
    CactusSpec,
    Cycle,
    Graph,
    build_from_edges,
    build_triangular_cactus,
    diameter,
    hub_vertex,
    is_triangular_cactus,
    minimal_odd_cycles,
)
from .io import (
    format_cactus_spec_json,
    format_graph_json,
    format_graph_text,
    load_graph,
    parse_cactus_spec_json,
    parse_graph_json,
    parse_graph_text,
)
from .lattices import IntegerLattice
from .facets import (
    FaceData,
    FundamentalSet,
    Hyperplane,
    cone_contains,
    face_of,
    fundamental_sets,
    regular_vertices,
    supporting_hyperplanes,
)
from .semigroup import (
    decompose,
    enumerate_normalization,
    enumerate_semigroup,
    hole_report,
    holes,
    lattice_member,
    member,
    rho_vector,
    unit_vector,
    vector_degree,
)
from .exceptional import (
    ExceptionalPair,
    cycle_vector,
    exceptional_pairs,
    is_exceptional,
    is_normal,
    lemma_double_w_edge,
    lemma_edge_augment,
    lemma_pair_sum,
    odd_cycle_condition,
    pair_vector,
)
from .hole_families import (
    CactusType,
    ExceptionalFamily,
    HoleFamily,
    admissible_fundamental_sets,
    classify,
    default_truncation,
    exceptional_families,
    hole_decomposition,
    q_vector,
    s2_verdict,
    verify_decomposition,
)
from . import fixtures

__version__ = "0.1.0"

__all__ = [
    "AmbiguousCenterError",
    "BipartiteGraphError",
    "CactusSpec",
    "CactusType",
    "Cycle",
    "DecompositionMismatchError",
    "DimensionMismatchError",
    "DisconnectedError",
    "DuplicateVertexError",
    "EdgeRingError",
    "EmptySetError",
    "EmptySpecError",
    "ExceptionalFamily",
    "ExceptionalPair",
    "FaceData",
    "FundamentalSet",
    "Graph",
    "HoleFamily",
    "Hyperplane",
    "IntegerLattice",
    "LoopEdgeError",
    "MethodMismatchError",
    "NotAnEdgeError",
    "NotDiameterFourCactusError",
    "ParseError",
    "PreconditionViolatedError",
    "UnknownEndpointError",
    "admissible_fundamental_sets",
    "build_from_edges",
    "build_triangular_cactus",
    "classify",
    "cone_contains",
    "cycle_vector",
    "decompose",
    "default_truncation",
    "diameter",
    "enumerate_normalization",
    "enumerate_semigroup",
    "exceptional_families",
    "exceptional_pairs",
    "face_of",
    "fixtures",
    "format_cactus_spec_json",
    "format_graph_json",
    "format_graph_text",
    "fundamental_sets",
    "hole_decomposition",
    "hole_report",
    "holes",
    "hub_vertex",
    "is_exceptional",
    "is_normal",
    "is_triangular_cactus",
    "lattice_member",
    "lemma_double_w_edge",
    "lemma_edge_augment",
    "lemma_pair_sum",
    "load_graph",
    "member",
    "minimal_odd_cycles",
    "odd_cycle_condition",
    "pair_vector",
    "parse_cactus_spec_json",
    "parse_graph_json",
    "parse_graph_text",
    "q_vector",
    "regular_vertices",
    "rho_vector",
    "s2_verdict",
    "supporting_hyperplanes",
    "unit_vector",
    "vector_degree",
    "verify_decomposition",
]
