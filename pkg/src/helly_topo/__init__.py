"""Exact verification toolkit for homological Helly-type intersection
criteria on simplicial subcomplex families, and for the space of line
transversals to families of open convex polygons in the plane.
"""

__version__ = "0.1.0"

from .errors import (
    HellyTopoError,
    ContractViolation,
    MalformedInput,
    ValidationError,
    DegenerateInput,
    GenerationFailure,
)
from .complex_core import (
    SimplicialComplex,
    Subcomplex,
    SubcomplexFamily,
    build_complex,
    face_closure,
    grid_complex,
    intersect_members,
    union_members,
    parse_family,
    load_family,
)
from .homology import (
    CoefficientField,
    GF2,
    RATIONALS,
    BettiVector,
    boundary_matrix,
    betti_number,
    reduced_betti,
    is_n_acyclic,
    is_acyclic,
    mv_consistency,
)
from .helly_engine import (
    Verdict,
    HypothesisLedger,
    SweepReport,
    random_family,
    sweep,
    verify_prop_a,
    verify_theorem_b,
    verify_helly,
    verify_sigma,
    verify_breen,
)
from .transversal_plane import (
    ConvexPolygon,
    PolygonFamily,
    ComponentSummary,
    TransversalProfile,
    components,
    disjointness_class,
    polygons_disjoint,
    sample_oracle,
    support_interval,
    transversal_profile,
    parse_polygon_family,
    load_polygon_family,
    random_polygon_family,
    sweep_transversal,
    verify_lemma_311_plane,
    verify_lemma_312_plane,
    verify_lemma_313,
    verify_theorem_321,
)

__all__ = [
    "__version__",
    "HellyTopoError",
    "ContractViolation",
    "MalformedInput",
    "ValidationError",
    "DegenerateInput",
    "GenerationFailure",
    "SimplicialComplex",
    "Subcomplex",
    "SubcomplexFamily",
    "build_complex",
    "face_closure",
    "grid_complex",
    "intersect_members",
    "union_members",
    "parse_family",
    "load_family",
    "CoefficientField",
    "GF2",
    "RATIONALS",
    "BettiVector",
    "boundary_matrix",
    "betti_number",
    "reduced_betti",
    "is_n_acyclic",
    "is_acyclic",
    "mv_consistency",
    "Verdict",
    "HypothesisLedger",
    "SweepReport",
    "random_family",
    "sweep",
    "verify_prop_a",
    "verify_theorem_b",
    "verify_helly",
    "verify_sigma",
    "verify_breen",
    "ConvexPolygon",
    "PolygonFamily",
    "ComponentSummary",
    "TransversalProfile",
    "components",
    "disjointness_class",
    "polygons_disjoint",
    "sample_oracle",
    "support_interval",
    "transversal_profile",
    "parse_polygon_family",
    "load_polygon_family",
    "random_polygon_family",
    "sweep_transversal",
    "verify_lemma_311_plane",
    "verify_lemma_312_plane",
    "verify_lemma_313",
    "verify_theorem_321",
]
