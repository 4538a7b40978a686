"""Square-free powers of facet ideals of simplicial forests.

Combinatorics (leaves, grafting, matchings), square-free monomial ideal
arithmetic, and an exact homology engine for Krull dimension, depth and
Cohen-Macaulayness, with fixtures, a seeded random-forest generator, and a
theorem-replay verification battery.
"""

from .complexes import (
    Face,
    SimplicialComplex,
    VertexSet,
    build_complex,
    closed_neighborhood,
    complex_from_json,
    connected_components,
    contraction,
    empty_complex,
    enumerate_faces,
    free_vertices,
    neighbors,
    restriction,
    subcomplex,
    void_complex,
)
from .errors import (
    AmbientMismatchError,
    BudgetExceededError,
    DegenerateIdealError,
    FacetPowersError,
    InvalidCertificateError,
    InvalidComplexError,
    NotAFacetError,
    NotALeafError,
)
from .fixtures import ExpectedFact, Fixture, load_fixture
from .generator import GeneratedForest, GeneratorParams, random_grafted_forest
from .grafting import (
    GraftingCertificate,
    Matching,
    check_certificate,
    is_cm_forest,
    is_grafted,
    matching_number,
    matchings,
)
from .homology import (
    BettiEntry,
    ContractionCheck,
    DepthReport,
    DepthTheoremReport,
    betti_table,
    depth,
    depth_report,
    depth_reports,
    engine_cap,
    height,
    is_cm,
    is_cm_by_links,
    is_unmixed,
    krull_dim,
    minimal_covers,
    normalized_depth,
    proj_dim_by_full_enumeration,
    reduced_homology_ranks,
    verify_colon_quotient_cm,
    verify_contraction_cm,
    verify_depth_theorem,
)
from .ideals import (
    ColonIdentityResult,
    DegreeProfile,
    MonomialIdeal,
    add_principal,
    colon,
    facet_ideal,
    ideal_equal,
    ideal_from_json,
    min_degree_profile,
    squarefree_power,
    squarefree_power_by_products,
    support_complex,
    support_matching_number,
    verify_colon_identity,
)
from .leaves import (
    GoodLeafChain,
    GoodLeafOrder,
    LeafWitness,
    find_special_leaf_grafted,
    is_forest,
    is_forest_brute,
    is_good_leaf,
    is_good_leaf_brute,
    is_leaf,
    is_leaf_brute,
    is_special_leaf,
    special_leaves,
)
from .verify import (
    CheckResult,
    VerificationReport,
    battery_checks,
    standard_corpus,
    verify_all,
)

__version__ = "0.1.0"
