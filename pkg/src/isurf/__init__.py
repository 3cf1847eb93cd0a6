"""Exact-arithmetic verification engine for Gorenstein I-surface
degenerations with simple elliptic and cusp singularities."""

from .lattice import (
    IntersectionLattice,
    Signature,
    is_negative_definite,
    make_named_lattice,
    signature,
)
from .germs import (
    SingularityGerm,
    cusp,
    enumerate_types,
    multiplicity,
    normalize_cusp,
    parse_germ,
    rdp,
    resolution_lattice,
    simple_elliptic,
    smooth,
)
from .adjacency import (
    StrataGraph,
    StratumLabel,
    build_strata_graph,
    direct_adjacencies,
    is_adjacent,
)
from .divisors import (
    Curve,
    DivisorClass,
    SurfaceModel,
    adjunction_genus,
    blowup,
    class_expressions_agree,
    nef_check,
    pair,
    riemann_roch_chi,
)
from .builders import (
    DoubleCoverModel,
    FibrationData,
    all_builder_variants,
    build_double_cover,
    build_stratum,
    c2_length_counts,
    canonical_bundle_coeffs,
    cover_pairing,
    vanishing_bound_checks,
    verify_I_surface,
)
from .report import CheckEntry, Report

__all__ = [
    "IntersectionLattice",
    "Signature",
    "signature",
    "is_negative_definite",
    "make_named_lattice",
    "SingularityGerm",
    "normalize_cusp",
    "cusp",
    "simple_elliptic",
    "rdp",
    "smooth",
    "multiplicity",
    "resolution_lattice",
    "enumerate_types",
    "parse_germ",
    "direct_adjacencies",
    "is_adjacent",
    "StratumLabel",
    "StrataGraph",
    "build_strata_graph",
    "DivisorClass",
    "Curve",
    "SurfaceModel",
    "pair",
    "adjunction_genus",
    "riemann_roch_chi",
    "blowup",
    "nef_check",
    "class_expressions_agree",
    "FibrationData",
    "canonical_bundle_coeffs",
    "c2_length_counts",
    "DoubleCoverModel",
    "build_double_cover",
    "cover_pairing",
    "vanishing_bound_checks",
    "build_stratum",
    "all_builder_variants",
    "verify_I_surface",
    "CheckEntry",
    "Report",
]

__version__ = "0.1.0"
