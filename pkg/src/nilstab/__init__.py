"""Asymptotic unitary representations of nilpotent groups.

The package builds finitely generated torsion-free nilpotent groups from
polynomial Mal'cev coordinate laws, manipulates integer 2-cocycles on
them, realizes skinny cocycles as families of phase-shift unitaries with
vanishing multiplicativity defect, and certifies via an integer winding
number that those families stay a fixed distance from every genuine
unitary representation.
"""

from .cohomology import (
    Chain1,
    Chain2,
    KernelCocycle,
    PolyCocycle,
    boundary2,
    coboundary,
    cocycle_check,
    cocycle_from_document,
    is_cycle,
    pair_cocycle_cycle,
    scale_cocycle,
    skinny_check,
)
from .errors import (
    BoundViolated,
    DegreeBoundTooSmall,
    DimensionMismatch,
    InvalidCocycle,
    NilstabError,
    NoConvergence,
    NonIntegralValue,
    NotACycle,
    NotASection,
    NotCentral,
    NotCoprime,
    NotScalar,
    NotSkinny,
    NotSurjective,
    PairingMismatch,
    ParseError,
    TermOutOfRange,
    TooFarFromIdentity,
    TorsionPairing,
    ValidationError,
)
from .extensions import (
    CentralExtension,
    central_commutator_cycle,
    central_extension,
    extension_skinny_cocycle,
    interpolate_polynomial_cocycle,
    scaling_map,
    section_cocycle,
)
from .groups import Element, MalcevGroup, from_document, lattice, load_group
from .obstruction import (
    PERTURBATION_RADIUS,
    CertificateReport,
    NullTestReport,
    PairingResult,
    certify_nonperturbability,
    matrix_exp,
    matrix_log_near_identity,
    perturbation_null_test,
    rho_family,
    winding_pairing,
)
from .poly import MultiPoly, xy_variables
from .representation import (
    Chi,
    DefectResult,
    PhaseShiftMatrix,
    build_rho,
    chi_scalar_check,
    defect,
    frobenius_norm,
    norm,
    operator_norm,
    voiculescu_pair,
)
from .validation import DEFAULT_SEED, CheckResult, ValidationReport

__version__ = "0.1.0"

__all__ = [
    "BoundViolated",
    "CentralExtension",
    "CertificateReport",
    "Chain1",
    "Chain2",
    "CheckResult",
    "Chi",
    "DEFAULT_SEED",
    "DefectResult",
    "DegreeBoundTooSmall",
    "DimensionMismatch",
    "Element",
    "InvalidCocycle",
    "KernelCocycle",
    "MalcevGroup",
    "MultiPoly",
    "NilstabError",
    "NoConvergence",
    "NonIntegralValue",
    "NotACycle",
    "NotASection",
    "NotCentral",
    "NotCoprime",
    "NotScalar",
    "NotSkinny",
    "NotSurjective",
    "NullTestReport",
    "PERTURBATION_RADIUS",
    "PairingMismatch",
    "PairingResult",
    "ParseError",
    "PhaseShiftMatrix",
    "PolyCocycle",
    "TermOutOfRange",
    "TooFarFromIdentity",
    "TorsionPairing",
    "ValidationError",
    "ValidationReport",
    "boundary2",
    "build_rho",
    "central_commutator_cycle",
    "central_extension",
    "certify_nonperturbability",
    "chi_scalar_check",
    "coboundary",
    "cocycle_check",
    "cocycle_from_document",
    "defect",
    "extension_skinny_cocycle",
    "from_document",
    "frobenius_norm",
    "interpolate_polynomial_cocycle",
    "is_cycle",
    "lattice",
    "load_group",
    "matrix_exp",
    "matrix_log_near_identity",
    "norm",
    "operator_norm",
    "pair_cocycle_cycle",
    "perturbation_null_test",
    "rho_family",
    "scale_cocycle",
    "scaling_map",
    "section_cocycle",
    "skinny_check",
    "voiculescu_pair",
    "winding_pairing",
    "xy_variables",
]
