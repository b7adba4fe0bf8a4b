"""Winding-number pairing and non-perturbability certificates.

For a family rho of unitaries and a 2-chain c = sum(coef_j [a_j|b_j]) the
pairing is

    <rho, c> = (1 / 2 pi i) sum_j coef_j * Tr log(rho(a_j b_j) rho(b_j)^-1 rho(a_j)^-1),

with log the power series at the identity.  When c is a cycle the value
is an exact integer for any family whose log arguments stay inside the
convergence ball, and it vanishes for every family within 1/24 (operator
norm) of a genuine representation on the support of c.  The phase-shift
families of skinny cocycles pair to minus the cocycle/cycle pairing, so a
nonzero cocycle pairing certifies that the family cannot be perturbed
into a representation.

Sign convention: the log argument uses rho(ab) rho(b)^-1 rho(a)^-1; the
reversed ordering rho(ab) rho(a)^-1 rho(b)^-1 flips the sign of the
pairing.  Both orderings are required to stay inside the convergence
ball, and certificates record the convention.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence, Union

import numpy as np

from .cohomology import (
    Chain2,
    PolyCocycle,
    boundary2,
    pair_cocycle_cycle,
)
from .errors import (
    DimensionMismatch,
    NoConvergence,
    NotACycle,
    PairingMismatch,
    TermOutOfRange,
    TooFarFromIdentity,
    TorsionPairing,
)
from .groups import Element, MalcevGroup
from .representation import build_rho, frobenius_norm, operator_norm
from .validation import DEFAULT_SEED

# Families closer than this to a representation always pair to zero.
PERTURBATION_RADIUS = 1.0 / 24.0

LOG_TOL = 1e-14
LOG_MAX_TERMS = 200
PRECONDITION_MARGIN = 1e-8
RESIDUAL_TOL = 1e-6

UnitaryFamily = Union[Mapping[Element, np.ndarray], Callable[[Element], np.ndarray]]


def _square(matrix) -> np.ndarray:
    matrix = np.asarray(matrix, dtype=complex)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got {matrix.shape}")
    return matrix


def matrix_exp(matrix: np.ndarray, max_terms: int = 120) -> np.ndarray:
    """Taylor-series exponential; ample for the small norms used here."""
    matrix = _square(matrix)
    n = matrix.shape[0]
    total = np.eye(n, dtype=complex)
    term = np.eye(n, dtype=complex)
    for k in range(1, max_terms + 1):
        term = term @ matrix / k
        total += term
        if frobenius_norm(term) <= 1e-17 * (1.0 + frobenius_norm(total)):
            return total
    raise NoConvergence(f"matrix exponential needed more than {max_terms} terms")


def matrix_log_near_identity(
    matrix: np.ndarray,
    tol: float = LOG_TOL,
    max_terms: int = LOG_MAX_TERMS,
) -> np.ndarray:
    """Power-series logarithm of a matrix with ||M - I|| < 1.

    The precondition uses the power-iteration operator norm plus a 1e-8
    safety margin.  Terms are added until the k-th term drops below tol;
    the Frobenius norm dominates the operator norm, so testing it keeps
    the operator-norm truncation contract.  The result is verified by
    exponentiating back:  ||exp(log M) - M|| must be within 10*tol.
    """
    matrix = _square(matrix)
    n = matrix.shape[0]
    deviation = matrix - np.eye(n, dtype=complex)
    distance = operator_norm(deviation)
    if distance + PRECONDITION_MARGIN >= 1.0:
        raise TooFarFromIdentity(
            f"||M - I|| = {distance:.6f} is not safely below 1"
        )
    log = deviation.copy()
    term = deviation
    for k in range(2, max_terms + 1):
        term = term @ deviation
        log += ((-1) ** (k + 1) / k) * term
        if frobenius_norm(term) / k < tol:
            break
    roundtrip = operator_norm(matrix_exp(log) - matrix)
    if roundtrip > 10 * tol:
        raise NoConvergence(
            f"log series left an exp round-trip error of {roundtrip:.3e}"
        )
    return log


# ----------------------------------------------------------------------
# the pairing


@dataclass(frozen=True)
class PairingResult:
    """Raw winding value, its integer rounding (when trustworthy), and diagnostics.

    `rounded` is withheld (None) when the chain is not a cycle or when the
    raw value sits further than the residual tolerance from any integer.
    """

    raw: float
    rounded: int | None
    residual: float
    per_term_log_norms: tuple[float, ...]
    cycle: bool


def _family_lookup(rho: UnitaryFamily) -> Callable[[Element], np.ndarray]:
    if callable(rho):
        return rho
    return lambda g: rho[g]


def winding_pairing(
    rho: UnitaryFamily,
    chain: Chain2,
    group: MalcevGroup,
    log_tol: float = LOG_TOL,
    residual_tol: float = RESIDUAL_TOL,
) -> PairingResult:
    """Evaluate the winding pairing of a unitary family against a 2-chain.

    `rho` is a mapping (or callable) defined on every a_j, b_j, and a_j*b_j
    of the chain.  Each log argument, in both multiplication orderings,
    must lie strictly inside the unit ball around the identity, else
    TermOutOfRange names the offending term.
    """
    lookup = _family_lookup(rho)
    total = 0.0
    log_norms: list[float] = []
    for index, (coef, a, b) in enumerate(chain.terms):
        ab = group.multiply(a, b)
        m_ab = _square(lookup(ab))
        m_a = _square(lookup(a))
        m_b = _square(lookup(b))
        word = m_ab @ m_b.conj().T @ m_a.conj().T
        other = m_ab @ m_a.conj().T @ m_b.conj().T
        eye = np.eye(word.shape[0], dtype=complex)
        for ordering, label in ((word, "rho(ab)rho(b)*rho(a)*"), (other, "rho(ab)rho(a)*rho(b)*")):
            distance = operator_norm(ordering - eye)
            if distance + PRECONDITION_MARGIN >= 1.0:
                raise TermOutOfRange(
                    f"term {index}: ||{label} - I|| = {distance:.6f} >= 1",
                    term_index=index,
                )
        log = matrix_log_near_identity(word, tol=log_tol)
        log_norms.append(frobenius_norm(log))
        total += coef * float(np.imag(np.trace(log)))
    raw = total / (2 * math.pi)
    nearest = round(raw)
    residual = abs(raw - nearest)
    closed = boundary2(group, chain).is_zero()
    rounded = nearest if (closed and residual < residual_tol) else None
    return PairingResult(
        raw=raw,
        rounded=rounded,
        residual=residual,
        per_term_log_norms=tuple(log_norms),
        cycle=closed,
    )


def rho_family(
    sigma: PolyCocycle, n: int, elements: Sequence[Element]
) -> dict[Element, np.ndarray]:
    """Dense phase-shift unitaries for the listed elements."""
    return {g: build_rho(sigma, n, g).to_dense() for g in elements}


# ----------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class CertificateRun:
    n: int
    raw: float
    rounded: int | None
    residual: float


@dataclass(frozen=True)
class CertificateReport:
    """A machine-checkable record that a family is far from representations."""

    group_name: str
    cocycle: dict
    cycle: list
    sigma_pairing: int
    expected_winding: int
    runs: tuple[CertificateRun, ...]
    distance_bound: float
    statement: str
    sign_convention: str
    tolerances: dict
    seed: int

    def to_json(self) -> dict:
        return {
            "group": self.group_name,
            "cocycle": self.cocycle,
            "cycle": self.cycle,
            "sigma_pairing": self.sigma_pairing,
            "expected_winding": self.expected_winding,
            "runs": [
                {
                    "n": r.n,
                    "raw": r.raw,
                    "rounded": r.rounded,
                    "residual": r.residual,
                }
                for r in self.runs
            ],
            "distance_bound": self.distance_bound,
            "statement": self.statement,
            "sign_convention": self.sign_convention,
            "tolerances": self.tolerances,
            "seed": self.seed,
        }


SIGN_CONVENTION = (
    "log arguments use rho(ab) rho(b)^-1 rho(a)^-1, under which the winding "
    "equals minus the cocycle/cycle pairing; the reversed ordering flips the sign"
)


def certify_nonperturbability(
    group: MalcevGroup,
    sigma: PolyCocycle,
    chain: Chain2,
    n_list: Sequence[int],
    residual_tol: float = RESIDUAL_TOL,
    seed: int = DEFAULT_SEED,
) -> CertificateReport:
    """Winding certificate: the family rho_n pairs to -<sigma, c> for each n.

    Raises NotACycle if the chain has a boundary, TorsionPairing if the
    cocycle pairs to zero (no obstruction to certify), and PairingMismatch
    if a computed winding disagrees with the prediction.
    """
    if not n_list:
        raise ValueError("need at least one matrix size")
    boundary = boundary2(group, chain)
    if not boundary.is_zero():
        raise NotACycle(f"chain has boundary terms {boundary.terms}")
    s = pair_cocycle_cycle(sigma, chain)
    if s == 0:
        raise TorsionPairing(
            "the cocycle pairs to zero against this cycle; nothing to certify"
        )
    support = chain.support(group)
    runs = []
    for n in n_list:
        family = rho_family(sigma, n, support)
        result = winding_pairing(family, chain, group, residual_tol=residual_tol)
        if result.rounded != -s:
            raise PairingMismatch(
                f"at n={n} the winding is {result.raw} (rounded {result.rounded}), "
                f"expected {-s}"
            )
        runs.append(
            CertificateRun(
                n=n, raw=result.raw, rounded=result.rounded, residual=result.residual
            )
        )
    statement = (
        f"Any family of unitaries within {PERTURBATION_RADIUS:.6f} (= 1/24) of these "
        f"matrices in operator norm on the listed elements has winding pairing 0 "
        f"against the cycle; the measured pairing is {-s}, so for every listed n "
        f"the family sits at operator-norm distance at least 1/24, hence Frobenius "
        f"distance at least 1/24, from every genuine unitary representation."
    )
    return CertificateReport(
        group_name=group.name or f"group(hirsch={group.hirsch})",
        cocycle=sigma.to_document(),
        cycle=chain.to_json(),
        sigma_pairing=s,
        expected_winding=-s,
        runs=tuple(runs),
        distance_bound=PERTURBATION_RADIUS,
        statement=statement,
        sign_convention=SIGN_CONVENTION,
        tolerances={
            "residual": residual_tol,
            "log_series": LOG_TOL,
            "precondition_margin": PRECONDITION_MARGIN,
        },
        seed=seed,
    )


# ----------------------------------------------------------------------
# the null test: genuine representations absorb small perturbations


@dataclass(frozen=True)
class NullTestReport:
    epsilon: float
    trials: int
    seed: int
    pairings: tuple[PairingResult, ...]

    @property
    def all_zero(self) -> bool:
        return all(p.rounded == 0 for p in self.pairings)


def perturbation_null_test(
    group: MalcevGroup,
    rep: UnitaryFamily,
    chain: Chain2,
    epsilon: float = 1.0 / 25.0,
    trials: int = 100,
    seed: int = DEFAULT_SEED,
) -> NullTestReport:
    """Perturb a genuine representation and confirm the pairing stays zero.

    Each trial multiplies every needed unitary by exp(S) for an independent
    random skew-adjoint S with operator norm strictly below epsilon, which
    must not exceed 1/24.  The representation property is first checked on
    the support of the chain.
    """
    if not 0 <= epsilon <= PERTURBATION_RADIUS:
        raise ValueError(f"epsilon must lie in [0, 1/24], got {epsilon}")
    if not boundary2(group, chain).is_zero():
        raise NotACycle("the null test needs a cycle")
    lookup = _family_lookup(rep)
    support = chain.support(group)
    base = {g: _square(lookup(g)) for g in support}
    for coef, a, b in chain.terms:
        ab = group.multiply(a, b)
        gap = frobenius_norm(base[ab] - base[a] @ base[b])
        if gap > 1e-10:
            raise ValueError(
                f"rep is not multiplicative on ({a}, {b}): defect {gap:.3e}"
            )
    dim = next(iter(base.values())).shape[0]
    rng = np.random.default_rng(seed)
    pairings = []
    for _ in range(trials):
        perturbed = {}
        for g, u in base.items():
            raw = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
            skew = (raw - raw.conj().T) / 2
            size = operator_norm(skew)
            target = epsilon * rng.uniform(0.0, 0.999)
            if size > 0 and target > 0:
                skew *= target / size
            else:
                skew = np.zeros_like(skew)
            perturbed[g] = matrix_exp(skew) @ u
        pairings.append(winding_pairing(perturbed, chain, group))
    return NullTestReport(
        epsilon=epsilon, trials=trials, seed=seed, pairings=tuple(pairings)
    )
