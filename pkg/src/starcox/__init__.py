"""Modular reductions of the rank-4 star Coxeter groups [5,3;k] over Z[tau]."""

from .builder import (
    K_INF,
    DetReport,
    GoldenMat,
    SmoothnessReport,
    StarParams,
    cartan,
    det_identities,
    generator_matrices,
    gram,
    reduced_generators,
    rho,
    root_norms,
)
from .cgroup import (
    IntersectionReport,
    distinguished,
    lemma41_check,
    replacement_generator,
    verify_cgroup,
    verify_rank3_cgroups,
)
from .classify import (
    Classification,
    SingularFormError,
    TorusCheck,
    classify_rank3,
    classify_rank4,
    delta,
    epsilon,
    orthogonal_order,
    table3_lookup,
    torus_power_check,
)
from .field import FieldCtx, FieldElem, build_field
from .matgroup import (
    DEFAULT_CAP,
    GroupHandle,
    OverCapError,
    SingularMatrixError,
    bsgs_group,
    element_order,
    enumerate_group,
    identity,
    mat_det,
    mat_from_rows,
    mat_inv,
    mat_mul,
    mat_vec,
)
from .polytope import (
    IncidenceReport,
    PolytopeStats,
    edge_alternation_check,
    face_counts,
    incidence_report,
    orbit_class,
)
from .ring import (
    CompositeError,
    EvenPrimeError,
    GoldenInt,
    GoldenPrime,
    ParseError,
    PrimeClass,
    UnitError,
    canonical_associate,
    classify_prime,
    exact_div,
    golden_legendre,
    parse_golden,
    primes_up_to_norm,
    rational_legendre,
)

__version__ = "0.1.0"

__all__ = [
    "CompositeError",
    "Classification",
    "DEFAULT_CAP",
    "DetReport",
    "EvenPrimeError",
    "FieldCtx",
    "FieldElem",
    "GoldenInt",
    "GoldenMat",
    "GoldenPrime",
    "GroupHandle",
    "IncidenceReport",
    "IntersectionReport",
    "K_INF",
    "OverCapError",
    "ParseError",
    "PolytopeStats",
    "PrimeClass",
    "SingularFormError",
    "SingularMatrixError",
    "SmoothnessReport",
    "StarParams",
    "TorusCheck",
    "UnitError",
    "bsgs_group",
    "build_field",
    "canonical_associate",
    "cartan",
    "classify_prime",
    "classify_rank3",
    "classify_rank4",
    "delta",
    "det_identities",
    "distinguished",
    "edge_alternation_check",
    "element_order",
    "enumerate_group",
    "epsilon",
    "exact_div",
    "face_counts",
    "generator_matrices",
    "golden_legendre",
    "gram",
    "identity",
    "incidence_report",
    "lemma41_check",
    "mat_det",
    "mat_from_rows",
    "mat_inv",
    "mat_mul",
    "mat_vec",
    "orbit_class",
    "orthogonal_order",
    "parse_golden",
    "primes_up_to_norm",
    "rational_legendre",
    "reduced_generators",
    "replacement_generator",
    "rho",
    "root_norms",
    "table3_lookup",
    "torus_power_check",
    "verify_cgroup",
    "verify_rank3_cgroups",
    "__version__",
]
