"""Exact combinatorial analyzer for dual graphs of reduced nodal curves."""

from ._core import (
    AnalysisReport,
    BettiShape,
    BoundCertificate,
    CanonicalGeometry,
    CliffordBounds,
    ComponentRecord,
    ConnectivityReport,
    ContradictionError,
    CurveGraph,
    CurveInputError,
    CurveParseError,
    Decomposition,
    EdgeRecord,
    GuardExceededError,
    Green2Result,
    ProfileValidation,
    ProfileViolation,
    ProofTrace,
    SheafProfile,
    ValidationReport,
    __version__,
    analyze,
    arithmetic_genus,
    best_split_bound,
    canonical_degree_on,
    canonical_geometry,
    clifford_bounds,
    connectivity_number,
    gen_chain,
    gen_random,
    gen_threecon,
    gen_two_component,
    green2_certificate,
    honestly_hyperelliptic_status,
    intersection_product,
    is_m_connected,
    lower_bound,
    min_cut_bruteforce,
    parse_curve,
    parse_profile,
    run_cli,
    serialize_curve,
    split_cluster_profile,
    theorem_upper_bound,
    two_component_green_family,
    validate_curve,
    validate_sheaf_profile,
    witness_invertible_profile,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
