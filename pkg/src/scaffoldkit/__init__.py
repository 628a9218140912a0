"""Polyhedral embeddings of cubic graphs: enumeration, extended graphs
with scaffold edges, and reconstruction of facial cycle systems."""

from .graphs import (
    CubicGraph,
    Graph6Error,
    Path3,
    ValidationReport,
    VertexPermutation,
    automorphisms,
    cycles_of_length,
    emit_graph6,
    is_isomorphic,
    is_three_connected,
    parse_graph6,
    read_corpus,
    three_paths_between,
    validate_cubic,
)
from .embeddings import (
    EmbeddingScheme,
    FacialSystem,
    FacialWalk,
    PolyhedralityReport,
    canonical_system,
    euler_genus,
    is_polyhedral,
    systems_equivalent,
    trace_faces,
)
from .enumeration import (
    EmbeddingCensus,
    SizeGuardError,
    enumerate_polyhedral,
    enumerate_schemes,
    labeled_polyhedral_systems,
    scheme_count,
    scheme_from_index,
)
from .extended import (
    CorruptSystemError,
    ExtendedGraph,
    ScaffoldEdge,
    build_extended,
    extended_equal,
    facial_three_paths,
)
from .reconstruct import (
    Butterfly,
    Fork,
    ReconstructionError,
    ReconstructionOutcome,
    assemble_walks,
    detect_butterflies,
    find_forks,
    init_state,
    propagate,
    recognize_special,
    reconstruct,
)

__version__ = "0.1.0"
