"""Asymptotic unitary representations by phase-shift matrices.

For a skinny cocycle with polynomial p(x_1..x_m, y1) and a matrix size n
coprime to every coefficient denominator, the element x acts on the
standard basis of C^n by

    rho_n(x) delta_j = exp(2 pi i p(x, j) / n) * delta_{j + x_1 mod n},

so each rho_n(x) is a cyclic shift with one unit phase per column.  The
exponent is reduced mod n in exact integer arithmetic before a single
exponentiation, which keeps the phases honest for huge exponents.

The multiplicativity defect rho_n(x*y) - rho_n(x) rho_n(y) is a scalar
chi_n(x, y)^{-1} = exp(-2 pi i p(x, y_1) / n) away from zero, giving the
proven bounds 2*pi*|sigma(x,y)|/sqrt(n) (Frobenius) and 2*pi*|sigma(x,y)|/n
(operator).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .cohomology import PolyCocycle
from .errors import (
    BoundViolated,
    DimensionMismatch,
    NoConvergence,
    NonIntegralValue,
    NotCoprime,
    NotScalar,
)
from .groups import Element

MAX_DENSE = 1024  # double precision keeps phases well below 1e-12 up to here

POWER_TOL = 1e-12
POWER_MAX_ITER = 10_000


@dataclass(frozen=True, eq=False)
class PhaseShiftMatrix:
    """A unitary acting by delta_j -> phases[j] * delta_{(j + shift) mod n}."""

    n: int
    shift: int
    phases: np.ndarray

    def __post_init__(self):
        if not 1 <= self.n <= MAX_DENSE:
            raise ValueError(f"matrix size must be in [1, {MAX_DENSE}], got {self.n}")
        if self.phases.shape != (self.n,):
            raise DimensionMismatch(
                f"expected {self.n} phases, got shape {self.phases.shape}"
            )
        object.__setattr__(self, "shift", self.shift % self.n)
        moduli = np.abs(self.phases)
        worst = float(np.max(np.abs(moduli - 1.0))) if self.n else 0.0
        if worst > 1e-9:
            raise ValueError(f"phases are not unit modulus (off by {worst:.3e})")

    @classmethod
    def identity(cls, n: int) -> "PhaseShiftMatrix":
        return cls(n, 0, np.ones(n, dtype=complex))

    def compose(self, other: "PhaseShiftMatrix") -> "PhaseShiftMatrix":
        """Matrix product self @ other (apply `other` first)."""
        if self.n != other.n:
            raise DimensionMismatch(f"sizes {self.n} and {other.n} differ")
        # Column j of the product picks up self's phase at j + other.shift.
        phases = other.phases * np.roll(self.phases, -other.shift)
        return PhaseShiftMatrix(self.n, self.shift + other.shift, phases)

    def adjoint(self) -> "PhaseShiftMatrix":
        phases = np.conj(np.roll(self.phases, self.shift))
        return PhaseShiftMatrix(self.n, -self.shift, phases)

    def scale(self, scalar: complex) -> "PhaseShiftMatrix":
        return PhaseShiftMatrix(self.n, self.shift, self.phases * scalar)

    def to_dense(self) -> np.ndarray:
        dense = np.zeros((self.n, self.n), dtype=complex)
        cols = np.arange(self.n)
        dense[(cols + self.shift) % self.n, cols] = self.phases
        return dense

    def is_scalar(self, tol: float = 1e-12) -> bool:
        if self.shift != 0:
            return False
        return bool(np.max(np.abs(self.phases - self.phases[0])) <= tol)


def build_rho(sigma: PolyCocycle, n: int, x: Sequence[int]) -> PhaseShiftMatrix:
    """The phase-shift unitary representing x at matrix size n."""
    if not 1 <= n <= MAX_DENSE:
        raise ValueError(f"matrix size must be in [1, {MAX_DENSE}], got {n}")
    den = sigma.poly.denominator_lcm()
    if math.gcd(n, den) != 1:
        raise NotCoprime(
            f"n = {n} shares a factor with the coefficient denominator {den}"
        )
    x = sigma.group.element(x)
    scale, coeffs = sigma.specialize_first(x)

    def exponent(j: int) -> int:
        total = 0
        power = 1
        for c in coeffs:
            total += c * power
            power *= j
        if total % scale:
            raise NonIntegralValue(
                f"cocycle value {total}/{scale} at ({x}, {j}) is not an integer"
            )
        return total // scale

    # Well-definedness spot check: the exponent must only matter mod n.
    if (exponent(n) - exponent(0)) % n != 0:
        raise NotCoprime(
            f"exponent is not periodic mod {n}; denominators are incompatible"
        )
    residues = np.array([exponent(j) % n for j in range(n)], dtype=float)
    phases = np.exp(2j * np.pi * residues / n)
    return PhaseShiftMatrix(n, x[0], phases)


# ----------------------------------------------------------------------
# norms


def frobenius_norm(matrix: np.ndarray) -> float:
    return float(np.linalg.norm(matrix))


def operator_norm(
    matrix: np.ndarray,
    tol: float = POWER_TOL,
    max_iter: int = POWER_MAX_ITER,
) -> float:
    """Largest singular value by power iteration on M* M.

    Starts from the normalized all-ones vector so runs are deterministic.
    Iteration stops once the eigenvector residual ||Gv - rayleigh*v|| is
    within tolerance, which localizes the Rayleigh quotient to that far
    from an eigenvalue of G; a successive-estimates test would accept
    slowly mixing iterates long before they settle.  The Rayleigh
    quotient never exceeds the top eigenvalue, so on NoConvergence the
    exception carries a certified lower bound.
    """
    matrix = np.asarray(matrix, dtype=complex)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got {matrix.shape}")
    n = matrix.shape[0]
    gram = matrix.conj().T @ matrix
    v = np.ones(n, dtype=complex) / math.sqrt(n)
    rayleigh = 0.0
    for _ in range(max_iter):
        w = gram @ v
        rayleigh = float(np.real(np.vdot(v, w)))
        norm_w = float(np.linalg.norm(w))
        if norm_w == 0.0:
            return 0.0
        residual = float(np.linalg.norm(w - rayleigh * v))
        if residual <= tol * max(1.0, rayleigh):
            return math.sqrt(max(rayleigh, 0.0))
        v = w / norm_w
    raise NoConvergence(
        f"power iteration did not stabilize within {max_iter} steps; "
        f"largest singular value is at least {math.sqrt(max(rayleigh, 0.0))}",
        lower_bound=math.sqrt(max(rayleigh, 0.0)),
    )


def norm(matrix: np.ndarray, kind: str = "frobenius") -> float:
    if kind == "frobenius":
        return frobenius_norm(matrix)
    if kind == "operator":
        return operator_norm(matrix)
    raise ValueError(f"unknown norm kind {kind!r}")


# ----------------------------------------------------------------------
# defects and the scalar identity


@dataclass(frozen=True)
class DefectResult:
    n: int
    x: Element
    y: Element
    sigma_xy: int
    frobenius: float
    frobenius_bound: float
    operator: float
    operator_bound: float


BOUND_SLACK = 1e-9


def defect(sigma: PolyCocycle, n: int, x: Sequence[int], y: Sequence[int]) -> DefectResult:
    """Measured multiplicativity defect of rho_n at (x, y), with its bounds.

    Raises BoundViolated if a measured norm exceeds the proven bound plus
    a 1e-9 slack; that would falsify the construction, not the sample.
    """
    group = sigma.group
    x = group.element(x)
    y = group.element(y)
    rho_xy = build_rho(sigma, n, group.multiply(x, y))
    product = build_rho(sigma, n, x).compose(build_rho(sigma, n, y))
    difference = rho_xy.to_dense() - product.to_dense()
    fro = frobenius_norm(difference)
    op = operator_norm(difference)
    s = abs(sigma(x, y))
    fro_bound = 2 * math.pi * s / math.sqrt(n)
    op_bound = 2 * math.pi * s / n
    if fro > fro_bound + BOUND_SLACK:
        raise BoundViolated(
            f"Frobenius defect {fro} exceeds bound {fro_bound} at ({x}, {y}), n={n}"
        )
    if op > op_bound + BOUND_SLACK:
        raise BoundViolated(
            f"operator defect {op} exceeds bound {op_bound} at ({x}, {y}), n={n}"
        )
    return DefectResult(
        n=n,
        x=x,
        y=y,
        sigma_xy=sigma(x, y),
        frobenius=fro,
        frobenius_bound=fro_bound,
        operator=op,
        operator_bound=op_bound,
    )


@dataclass(frozen=True)
class Chi:
    """The unit scalar chi_n(x, y) with rho(x) rho(y) = chi * rho(x*y)."""

    value: complex


def chi_scalar_check(
    sigma: PolyCocycle,
    n: int,
    x: Sequence[int],
    y: Sequence[int],
    tol: float = 1e-12,
) -> Chi:
    """Verify rho(x*y) rho(y)^-1 rho(x)^-1 = chi_n(x, y)^{-1} I and return chi."""
    group = sigma.group
    x = group.element(x)
    y = group.element(y)
    rho_xy = build_rho(sigma, n, group.multiply(x, y))
    rho_x = build_rho(sigma, n, x)
    rho_y = build_rho(sigma, n, y)
    word = rho_xy.compose(rho_y.adjoint()).compose(rho_x.adjoint())
    if word.shift != 0:
        raise NotScalar(f"triple product shifts by {word.shift}")
    residue = sigma(x, y) % n
    chi = cmath.exp(2j * math.pi * residue / n)
    deviation = np.abs(word.phases - np.conj(chi))
    worst = int(np.argmax(deviation))
    if deviation[worst] > tol:
        raise NotScalar(
            f"diagonal entry {worst} is off by {deviation[worst]:.3e}",
            index=worst,
        )
    return Chi(chi)


# ----------------------------------------------------------------------
# the shift/clock pair


def voiculescu_pair(n: int) -> tuple[PhaseShiftMatrix, PhaseShiftMatrix]:
    """The cyclic shift u_n and the clock v_n = diag(exp(2 pi i (j+1)/n)).

    Their commutator u v u^-1 v^-1 is exactly exp(-2 pi i / n) times the
    identity; this is asserted on every call.  Up to conjugating by the
    shift (a relabeling of the basis), u^a v^b equals the phase-shift
    unitary of the cocycle x2*y1 on the rank-2 lattice at (a, b).
    """
    u = PhaseShiftMatrix(n, 1, np.ones(n, dtype=complex))
    v = PhaseShiftMatrix(
        n, 0, np.exp(2j * np.pi * (np.arange(n) + 1) / n)
    )
    word = u.compose(v).compose(u.adjoint()).compose(v.adjoint())
    expected = cmath.exp(-2j * math.pi / n)
    if word.shift != 0 or float(np.max(np.abs(word.phases - expected))) > 1e-13:
        raise AssertionError("shift/clock commutator identity failed")
    return u, v
