"""unitdim: dimension bounds and certificates for unit-distance graph embeddings."""

from .embedder import (
    CertificateReport,
    EmbedRequest,
    Embedding,
    find_embedding,
    fitted_sphere,
    orthogonal_join_embedding,
    validate,
)
from .engine import (
    CROSSINGS,
    DIM,
    MODES,
    NON_CROSSING,
    SDIM,
    Certificate,
    DimensionBounds,
    EmbedderBudget,
    Engine,
    EngineError,
    JumpResult,
    NEG_INF,
    RegistryMiss,
    dimension_bounds,
    jump_test,
    known_sdim,
    sum_dimension,
    wheel_dimension,
)
from .geometry import (
    GeometryError,
    IntersectionResult,
    SphereSpec,
    classify_polygon_radius,
    cone_radius,
    equidistant_sphere,
    intersect_spheres,
    iterate_cone_radius,
    simplex_radius,
    star_polygon_radius,
)
from .graphs import (
    FamilySpec,
    Graph,
    GraphError,
    MinorOp,
    SizeCapError,
    apply_minor_op,
    build_family,
    canonical_form,
    enumerate_petals,
    family,
    join,
    join_decompose,
    minor_closure,
    parse_family,
    parse_graph_text,
    format_graph_text,
)
from .minimality import (
    InconclusiveRootError,
    MinimalityReport,
    check_4vertex_lemma,
    enumerate_S_candidates,
    verify_minor_minimal,
)
from .profiles import Interval, RadiusProfile

__version__ = "0.1.0"

__all__ = [
    "CROSSINGS",
    "Certificate",
    "CertificateReport",
    "DIM",
    "DimensionBounds",
    "EmbedRequest",
    "EmbedderBudget",
    "Embedding",
    "Engine",
    "EngineError",
    "FamilySpec",
    "GeometryError",
    "Graph",
    "GraphError",
    "InconclusiveRootError",
    "IntersectionResult",
    "Interval",
    "JumpResult",
    "MODES",
    "MinimalityReport",
    "MinorOp",
    "NEG_INF",
    "NON_CROSSING",
    "RadiusProfile",
    "RegistryMiss",
    "SDIM",
    "SizeCapError",
    "SphereSpec",
    "apply_minor_op",
    "build_family",
    "canonical_form",
    "check_4vertex_lemma",
    "classify_polygon_radius",
    "cone_radius",
    "dimension_bounds",
    "enumerate_S_candidates",
    "enumerate_petals",
    "equidistant_sphere",
    "family",
    "find_embedding",
    "fitted_sphere",
    "format_graph_text",
    "intersect_spheres",
    "iterate_cone_radius",
    "join",
    "join_decompose",
    "jump_test",
    "known_sdim",
    "minor_closure",
    "orthogonal_join_embedding",
    "parse_family",
    "parse_graph_text",
    "simplex_radius",
    "star_polygon_radius",
    "sum_dimension",
    "validate",
    "verify_minor_minimal",
    "wheel_dimension",
    "__version__",
]
