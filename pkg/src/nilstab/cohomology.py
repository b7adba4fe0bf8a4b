"""Integer 2-cocycles, chains, boundaries, and the cocycle/cycle pairing.

Conventions.  A normalized 2-cocycle sigma on a group G satisfies

    sigma(y, z) - sigma(x*y, z) + sigma(x, y*z) - sigma(x, y) = 0,
    sigma(e, y) = sigma(x, e) = 0.

The boundary of a 2-chain term [a|b] is [b] - [a*b] + [a], and the pairing
of a cocycle with a 2-chain sum(coef_j * [a_j|b_j]) is
sum(coef_j * sigma(a_j, b_j)).

A cocycle is "skinny" with respect to a homomorphism alpha: G -> Z when
its value at (x, y) depends on y only through alpha(y) and it vanishes on
ker(alpha) x ker(alpha).  Skinny cocycles with a polynomial kernel are
represented by a polynomial in x_1..x_m and the single variable y1, read
as alpha(y).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence, Union

from .errors import NonIntegralValue, ParseError
from .groups import Element, MalcevGroup
from .poly import (
    MultiPoly,
    poly_from_monomials,
    poly_to_monomials,
    xy_variables,
)
from .validation import (
    CheckResult,
    DEFAULT_SEED,
    ValidationReport,
    make_rng,
    sample_coords,
)

GRID_RADIUS = 2  # deterministic grid [-2, 2]; conclusive for degree <= 4


class PolyCocycle:
    """A skinny cocycle given by a polynomial p(x_1..x_m, y1), y1 = alpha(y).

    The polynomial may have rational coefficients but must take integer
    values on integer points; evaluation raises NonIntegralValue otherwise.
    """

    def __init__(self, group: MalcevGroup, poly: MultiPoly, name: str = ""):
        expected = xy_variables(group.hirsch, 1)
        if poly.variables != expected:
            raise ValueError(f"cocycle polynomial must use variables {expected}")
        self.group = group
        self.poly = poly
        self.name = name or str(poly)

    def __call__(self, x: Sequence[int], y: Sequence[int]) -> int:
        x = self.group.element(x)
        y = self.group.element(y)
        return self.poly.evaluate_int(x + (y[0],))

    def scale(self, k: int) -> "PolyCocycle":
        return PolyCocycle(self.group, k * self.poly, name=f"{k}*({self.name})")

    def as_kernel(self) -> "KernelCocycle":
        return KernelCocycle(self.group, self.__call__, name=self.name)

    def specialize_first(self, x: Sequence[int]) -> tuple[int, tuple[int, ...]]:
        """Integer coefficients (den, c_0..c_d) of p(x, t) = sum(c_e t^e)/den."""
        x = self.group.element(x)
        m = self.group.hirsch
        by_degree: dict[int, Fraction] = {}
        for exps, coef in self.poly.terms.items():
            c = coef
            for v, e in zip(x, exps[:m]):
                if e:
                    c *= v**e
            d = exps[m]
            by_degree[d] = by_degree.get(d, Fraction(0)) + c
        degree = max(by_degree, default=0)
        den = 1
        from math import lcm

        for c in by_degree.values():
            den = lcm(den, c.denominator)
        coeffs = tuple(
            int(by_degree.get(e, Fraction(0)) * den) for e in range(degree + 1)
        )
        return den, coeffs

    def to_document(self) -> dict:
        return {
            "name": self.name,
            "hirsch": self.group.hirsch,
            "poly": poly_to_monomials(self.poly, self.group.hirsch, 1),
        }

    def __repr__(self) -> str:
        return f"PolyCocycle({self.name!r} on {self.group.name or 'group'})"


class KernelCocycle:
    """A cocycle given by an arbitrary integer-valued kernel function."""

    def __init__(
        self,
        group: MalcevGroup,
        fn: Callable[[Element, Element], int],
        name: str = "",
    ):
        self.group = group
        self.fn = fn
        self.name = name or "kernel cocycle"

    def __call__(self, x: Sequence[int], y: Sequence[int]) -> int:
        value = self.fn(self.group.element(x), self.group.element(y))
        if not isinstance(value, int):
            raise NonIntegralValue(f"kernel returned non-integer {value!r}")
        return value

    def scale(self, k: int) -> "KernelCocycle":
        return KernelCocycle(
            self.group, lambda x, y: k * self.fn(x, y), name=f"{k}*({self.name})"
        )

    def __repr__(self) -> str:
        return f"KernelCocycle({self.name!r} on {self.group.name or 'group'})"


Cocycle = Union[PolyCocycle, KernelCocycle]


def scale_cocycle(sigma: Cocycle, k: int) -> Cocycle:
    """The cocycle k*sigma, of the same representation kind as sigma."""
    return sigma.scale(k)


def cocycle_from_document(group: MalcevGroup, doc: Mapping) -> PolyCocycle:
    if not isinstance(doc, Mapping):
        raise ParseError("cocycle document must be an object")
    try:
        poly_doc = doc["poly"]
    except KeyError as exc:
        raise ParseError(f"cocycle document missing key {exc}") from exc
    hirsch = doc.get("hirsch", group.hirsch)
    if hirsch != group.hirsch:
        raise ParseError(
            f"cocycle is for Hirsch length {hirsch}, group has {group.hirsch}"
        )
    poly = poly_from_monomials(poly_doc, group.hirsch, 1)
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise ParseError("cocycle name must be a string")
    return PolyCocycle(group, poly, name=name)


def coboundary(group: MalcevGroup, f: Callable[[Element], int]) -> KernelCocycle:
    """The 2-coboundary (x, y) -> f(y) - f(x*y) + f(x) of a 1-cochain."""

    def eval_cb(x: Element, y: Element) -> int:
        return f(y) - f(group.multiply(x, y)) + f(x)

    return KernelCocycle(group, eval_cb, name="coboundary")


# ----------------------------------------------------------------------
# chains


@dataclass(frozen=True)
class Chain2:
    """A finite integer combination of bar 2-simplices [a|b]."""

    terms: tuple[tuple[int, Element, Element], ...]

    @classmethod
    def build(cls, terms: Iterable[tuple[int, Sequence[int], Sequence[int]]]) -> "Chain2":
        clean = []
        for coef, a, b in terms:
            coef = int(coef)
            if coef == 0:
                continue
            clean.append((coef, tuple(a), tuple(b)))
        return cls(tuple(clean))

    def support(self, group: MalcevGroup) -> list[Element]:
        """Every element whose unitary the pairing needs: a, b, and a*b."""
        seen: dict[Element, None] = {}
        for _, a, b in self.terms:
            for g in (a, b, group.multiply(a, b)):
                seen.setdefault(g, None)
        return list(seen)

    def to_json(self) -> list[dict]:
        return [
            {"coef": coef, "a": list(a), "b": list(b)} for coef, a, b in self.terms
        ]

    @classmethod
    def from_json(cls, doc) -> "Chain2":
        if not isinstance(doc, list):
            raise ParseError("chain document must be a list of terms")
        terms = []
        for entry in doc:
            if not isinstance(entry, Mapping):
                raise ParseError(f"chain term must be an object, got {entry!r}")
            try:
                coef, a, b = entry["coef"], entry["a"], entry["b"]
            except KeyError as exc:
                raise ParseError(f"chain term missing key {exc}") from exc
            if not isinstance(coef, int) or isinstance(coef, bool):
                raise ParseError(f"chain coefficient must be an integer, got {coef!r}")
            terms.append((coef, tuple(int(v) for v in a), tuple(int(v) for v in b)))
        return cls.build(terms)


@dataclass(frozen=True)
class Chain1:
    """A finite integer combination of group elements, like terms combined."""

    terms: tuple[tuple[int, Element], ...]

    def is_zero(self) -> bool:
        return not self.terms


def boundary2(group: MalcevGroup, chain: Chain2) -> Chain1:
    """Bar boundary: each [a|b] contributes [b] - [a*b] + [a]."""
    acc: dict[Element, int] = {}
    for coef, a, b in chain.terms:
        ab = group.multiply(a, b)
        for g, c in ((b, coef), (ab, -coef), (a, coef)):
            acc[g] = acc.get(g, 0) + c
    terms = tuple(sorted((c, g) for g, c in acc.items() if c != 0))
    return Chain1(tuple((c, g) for c, g in terms))


def is_cycle(group: MalcevGroup, chain: Chain2) -> bool:
    return boundary2(group, chain).is_zero()


def pair_cocycle_cycle(sigma: Cocycle, chain: Chain2) -> int:
    """Exact integer pairing sum(coef_j * sigma(a_j, b_j))."""
    return sum(coef * sigma(a, b) for coef, a, b in chain.terms)


# ----------------------------------------------------------------------
# checks


def cocycle_check(
    sigma: Cocycle,
    samples: int = 500,
    bound: int = 3,
    seed: int | None = DEFAULT_SEED,
    grid: bool = False,
) -> ValidationReport:
    """Normalization and the cocycle identity, on samples or on the grid.

    Grid mode evaluates the identity for every x, y with coordinates in
    [-2, 2] and every value of alpha(z) in [-2, 2]; for a polynomial
    cocycle the defect depends on z only through alpha(z) = z_1, so this
    covers the full triple grid.  It is conclusive when the defect
    polynomial has degree at most 4 in each variable, which holds for
    every cocycle shipped here (total degree <= 4 and a quadratic law).
    """
    if grid:
        if not isinstance(sigma, PolyCocycle):
            raise ValueError("grid mode needs a polynomial cocycle")
        return _cocycle_check_grid(sigma)

    group = sigma.group
    m = group.hirsch
    rng = make_rng(seed)
    e = group.identity
    norm_bad = None
    ident_bad = None
    for _ in range(samples):
        x = sample_coords(rng, m, bound)
        y = sample_coords(rng, m, bound)
        z = sample_coords(rng, m, bound)
        if norm_bad is None:
            if sigma(e, y) != 0:
                norm_bad = f"sigma(e, {y}) = {sigma(e, y)}"
            elif sigma(x, e) != 0:
                norm_bad = f"sigma({x}, e) = {sigma(x, e)}"
        if ident_bad is None:
            xy = group.multiply(x, y)
            yz = group.multiply(y, z)
            defect = sigma(y, z) - sigma(xy, z) + sigma(x, yz) - sigma(x, y)
            if defect != 0:
                ident_bad = f"defect {defect} at x={x}, y={y}, z={z}"
    return ValidationReport(
        f"cocycle {sigma.name}",
        (
            CheckResult(f"normalization on {samples} samples", norm_bad is None, norm_bad),
            CheckResult(f"cocycle identity on {samples} sampled triples", ident_bad is None, ident_bad),
        ),
    )


def _cocycle_check_grid(sigma: PolyCocycle) -> ValidationReport:
    group = sigma.group
    m = group.hirsch
    r = GRID_RADIUS
    points = list(itertools.product(range(-r, r + 1), repeat=m))
    e = group.identity

    value_cache: dict[tuple[Element, int], int] = {}

    def val(u: Element, t: int) -> int:
        key = (u, t)
        got = value_cache.get(key)
        if got is None:
            got = sigma.poly.evaluate_int(u + (t,))
            value_cache[key] = got
        return got

    norm_bad = None
    for u in points:
        if val(e, u[0]) != 0:
            norm_bad = f"sigma(e, {u}) = {val(e, u[0])}"
            break
        if val(u, 0) != 0:
            norm_bad = f"sigma({u}, e) = {val(u, 0)}"
            break

    ident_bad = None
    t_range = range(-r, r + 1)
    for x in points:
        if ident_bad:
            break
        for y in points:
            xy = group.multiply(x, y)
            base = val(x, y[0])
            y1 = y[0]
            for t in t_range:
                # t plays the role of z_1 = alpha(z); (y*z)_1 = y_1 + t.
                defect = val(y, t) - val(xy, t) + val(x, y1 + t) - base
                if defect != 0:
                    ident_bad = f"defect {defect} at x={x}, y={y}, alpha(z)={t}"
                    break
            if ident_bad:
                break
    size = len(points) ** 2 * len(t_range)
    return ValidationReport(
        f"cocycle {sigma.name}",
        (
            CheckResult(f"normalization on the [-{r}, {r}] grid", norm_bad is None, norm_bad),
            CheckResult(f"cocycle identity on the full grid ({size} triples)", ident_bad is None, ident_bad),
        ),
    )


def skinny_check(
    sigma: Cocycle,
    alpha: Callable[[Element], int] | None = None,
    samples: int = 500,
    bound: int = 3,
    seed: int | None = DEFAULT_SEED,
) -> ValidationReport:
    """Sampled check that sigma factors through (x, alpha(y)) and kills ker x ker."""
    group = sigma.group
    m = group.hirsch
    if alpha is None:
        alpha = group.canonical_hom
    rng = make_rng(seed)

    dep_bad = None
    ker_bad = None
    for _ in range(samples):
        x = sample_coords(rng, m, bound)
        y = sample_coords(rng, m, bound)
        y_alt = (y[0],) + sample_coords(rng, m - 1, bound) if m > 1 else y
        if alpha(y) == alpha(y_alt):
            if dep_bad is None and sigma(x, y) != sigma(x, y_alt):
                dep_bad = (
                    f"sigma({x}, {y}) = {sigma(x, y)} but "
                    f"sigma({x}, {y_alt}) = {sigma(x, y_alt)} with equal alpha"
                )
        kx = (0,) + x[1:]
        ky = (0,) + y[1:]
        if alpha(kx) == 0 and alpha(ky) == 0:
            if ker_bad is None and sigma(kx, ky) != 0:
                ker_bad = f"sigma({kx}, {ky}) = {sigma(kx, ky)} on kernel pair"
    return ValidationReport(
        f"skinny {sigma.name}",
        (
            CheckResult(
                f"value depends only on (x, alpha(y)) ({samples} samples)",
                dep_bad is None,
                dep_bad,
            ),
            CheckResult(
                f"vanishes on ker(alpha) x ker(alpha) ({samples} samples)",
                ker_bad is None,
                ker_bad,
            ),
        ),
    )
