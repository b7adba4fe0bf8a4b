"""Torsion-free nilpotent groups in polynomial Mal'cev coordinates.

A group of Hirsch length m is described by m multiplication polynomials
p_i over the rationals in variables x1..xm, y1..ym: the product of the
integer tuples x and y is (p_1(x, y), ..., p_m(x, y)).  The laws must be
triangular,

    p_i = x_i + y_i + q_i(x_1..x_{i-1}, y_1..y_{i-1}),

which makes the zero tuple the identity and lets inverses be solved by
back substitution.  Triangularity and the identity laws are checked
symbolically; associativity and integrality are checked on samples.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from typing import Mapping, Sequence

from .errors import NonIntegralValue, NotCentral, ParseError, ValidationError
from .poly import MultiPoly, poly_from_monomials, poly_to_monomials, xy_variables
from .validation import (
    CheckResult,
    DEFAULT_SEED,
    ValidationReport,
    make_rng,
    sample_coords,
)

Element = tuple[int, ...]


@dataclass(frozen=True)
class MalcevGroup:
    """A finitely generated torsion-free nilpotent group with fixed coordinates."""

    hirsch: int
    law: tuple[MultiPoly, ...]
    name: str = ""

    def __post_init__(self):
        if self.hirsch < 1:
            raise ValueError("Hirsch length must be at least 1")
        if len(self.law) != self.hirsch:
            raise ValueError(
                f"need {self.hirsch} law polynomials, got {len(self.law)}"
            )
        expected = xy_variables(self.hirsch, self.hirsch)
        for i, p in enumerate(self.law):
            if p.variables != expected:
                raise ValueError(
                    f"law polynomial {i + 1} must use variables {expected}"
                )

    # ------------------------------------------------------------------
    # elements

    @property
    def identity(self) -> Element:
        return (0,) * self.hirsch

    def element(self, coords: Sequence[int]) -> Element:
        coords = tuple(coords)
        if len(coords) != self.hirsch:
            raise ValueError(
                f"element has {len(coords)} coordinates, expected {self.hirsch}"
            )
        if not all(isinstance(c, int) for c in coords):
            raise ValueError(f"coordinates must be integers, got {coords!r}")
        return coords

    def basis(self, index: int) -> Element:
        """The index-th (1-based) standard generator a_index."""
        if not 1 <= index <= self.hirsch:
            raise ValueError(f"basis index {index} out of range")
        coords = [0] * self.hirsch
        coords[index - 1] = 1
        return tuple(coords)

    # ------------------------------------------------------------------
    # group operations

    def multiply(self, x: Sequence[int], y: Sequence[int]) -> Element:
        point = self.element(x) + self.element(y)
        return tuple(p.evaluate_int(point) for p in self.law)

    def inverse(self, x: Sequence[int]) -> Element:
        """Solve multiply(x, z) = identity by back substitution.

        Triangularity makes law_i read z only through z_1..z_i, linearly in
        z_i, so one forward pass determines z.  The result is verified with
        a multiplication, which catches non-triangular input laws.
        """
        x = self.element(x)
        z = [0] * self.hirsch
        for i in range(self.hirsch):
            # With z_i still 0 the i-th law evaluates to x_i + z_i + q_i.
            z[i] = -self.law[i].evaluate_int(x + tuple(z))
        inv = tuple(z)
        if self.multiply(x, inv) != self.identity:
            raise ValueError(
                f"inverse failed for {x}; the law is not triangular"
            )
        return inv

    def power(self, x: Sequence[int], k: int) -> Element:
        if k < 0:
            return self.power(self.inverse(x), -k)
        acc = self.identity
        base = self.element(x)
        while k:
            if k & 1:
                acc = self.multiply(acc, base)
            base = self.multiply(base, base)
            k >>= 1
        return acc

    def commutator(self, x: Sequence[int], y: Sequence[int]) -> Element:
        xy = self.multiply(x, y)
        return self.multiply(self.multiply(xy, self.inverse(x)), self.inverse(y))

    def canonical_hom(self, x: Sequence[int]) -> int:
        """The homomorphism to the integers reading the first coordinate."""
        return self.element(x)[0]

    # ------------------------------------------------------------------
    # validation

    def validate(
        self,
        samples: int = 200,
        bound: int = 3,
        seed: int | None = DEFAULT_SEED,
    ) -> ValidationReport:
        """Symbolic identity/triangularity checks plus sampled associativity."""
        m = self.hirsch
        variables = xy_variables(m, m)
        checks: list[CheckResult] = []

        zero_y = {m + j: 0 for j in range(m)}
        zero_x = {j: 0 for j in range(m)}
        for i, p in enumerate(self.law):
            right = p.substitute(zero_y)
            expected = MultiPoly.variable(variables, i)
            if right == expected:
                checks.append(CheckResult(f"identity-law right (law {i + 1})", True))
            else:
                checks.append(
                    CheckResult(
                        f"identity-law right (law {i + 1})",
                        False,
                        f"law_{i + 1}(x, e) - x_{i + 1} = {right - expected}",
                    )
                )
            left = p.substitute(zero_x)
            expected = MultiPoly.variable(variables, m + i)
            if left == expected:
                checks.append(CheckResult(f"identity-law left (law {i + 1})", True))
            else:
                checks.append(
                    CheckResult(
                        f"identity-law left (law {i + 1})",
                        False,
                        f"law_{i + 1}(e, y) - y_{i + 1} = {left - expected}",
                    )
                )

        for i, p in enumerate(self.law):
            rest = (
                p
                - MultiPoly.variable(variables, i)
                - MultiPoly.variable(variables, m + i)
            )
            bad = None
            for exps in rest.terms:
                # q_i may only read x_j, y_j with j < i (0-based coordinate index).
                high = [
                    variables[j]
                    for j in range(2 * m)
                    if exps[j] and (j if j < m else j - m) >= i
                ]
                if high:
                    bad = f"law_{i + 1} has a term with exponents {exps} touching {high}"
                    break
            checks.append(CheckResult(f"triangularity (law {i + 1})", bad is None, bad))

        rng = make_rng(seed)
        assoc_bad = None
        integral_bad = None
        for _ in range(samples):
            x = sample_coords(rng, m, bound)
            y = sample_coords(rng, m, bound)
            z = sample_coords(rng, m, bound)
            try:
                left = self.multiply(self.multiply(x, y), z)
                right = self.multiply(x, self.multiply(y, z))
            except NonIntegralValue as exc:
                if integral_bad is None:
                    integral_bad = f"{exc} (triple {x}, {y}, {z})"
                continue
            if left != right and assoc_bad is None:
                assoc_bad = f"({x}*{y})*{z} = {left} but {x}*({y}*{z}) = {right}"
        checks.append(
            CheckResult(
                f"integrality on {samples} sampled triples",
                integral_bad is None,
                integral_bad,
            )
        )
        checks.append(
            CheckResult(
                f"associativity on {samples} sampled triples",
                assoc_bad is None,
                assoc_bad,
            )
        )
        return ValidationReport(self.name or f"group(hirsch={self.hirsch})", tuple(checks))

    # ------------------------------------------------------------------
    # quotient

    def quotient_by_last(self) -> "MalcevGroup":
        """Quotient by the central subgroup generated by the last basis vector."""
        m = self.hirsch
        if m < 2:
            raise ValueError("quotient needs Hirsch length at least 2")
        last = self.basis(m)
        for i in range(1, m):
            c = self.commutator(last, self.basis(i))
            if c != self.identity:
                raise NotCentral(
                    f"[a_{m}, a_{i}] = {c}; the last basis vector is not central"
                )
        new_vars = xy_variables(m - 1, m - 1)
        keep = list(range(m - 1)) + list(range(m, 2 * m - 1))
        squash = {m - 1: 0, 2 * m - 1: 0}
        new_law = tuple(
            p.substitute(squash).project(keep, new_vars) for p in self.law[: m - 1]
        )
        return MalcevGroup(m - 1, new_law, name=f"{self.name}/center" if self.name else "")

    # ------------------------------------------------------------------
    # documents

    def to_document(self) -> dict:
        m = self.hirsch
        return {
            "name": self.name,
            "hirsch": m,
            "law": [poly_to_monomials(p, m, m) for p in self.law],
        }


def lattice(m: int) -> MalcevGroup:
    """The free abelian group Z^m with componentwise addition."""
    variables = xy_variables(m, m)
    law = tuple(
        MultiPoly.variable(variables, i) + MultiPoly.variable(variables, m + i)
        for i in range(m)
    )
    return MalcevGroup(m, law, name=f"lattice:{m}")


def from_document(doc: Mapping, validate: bool = True) -> MalcevGroup:
    """Build a group from its JSON document, then run the validation suite."""
    if not isinstance(doc, Mapping):
        raise ParseError(f"group document must be an object, got {type(doc).__name__}")
    try:
        hirsch = doc["hirsch"]
        law_docs = doc["law"]
    except KeyError as exc:
        raise ParseError(f"group document missing key {exc}") from exc
    if not isinstance(hirsch, int) or hirsch < 1:
        raise ParseError(f"hirsch must be a positive integer, got {hirsch!r}")
    if not isinstance(law_docs, list) or len(law_docs) != hirsch:
        raise ParseError(f"law must be a list of {hirsch} polynomials")
    law = tuple(poly_from_monomials(p, hirsch, hirsch) for p in law_docs)
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise ParseError("group name must be a string")
    group = MalcevGroup(hirsch, law, name=name)
    if validate:
        report = group.validate()
        if not report.ok:
            raise ValidationError(
                "group document failed validation:\n" + report.summary(), report
            )
    return group


def load_group(path) -> MalcevGroup:
    """Read and validate a JSON group document from disk."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc
    return from_document(doc)


def rename(group: MalcevGroup, name: str) -> MalcevGroup:
    return replace(group, name=name)
