"""Exact multivariate polynomial arithmetic over the rationals.

Coefficients are `fractions.Fraction` and exponent vectors are tuples
indexed by a fixed, ordered variable list.  Every polynomial this package
evaluates on group elements is integer valued even when its coefficients
are not, so evaluation keeps a scaled-integer fast path: coefficients are
cleared to a common denominator once and integer inputs never touch
Fraction arithmetic in the inner loop.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .errors import NonIntegralValue, ParseError

Scalar = Union[int, Fraction]
Exponents = tuple[int, ...]

# JSON transports integers beyond this magnitude as decimal strings.
_INT64_MAX = 2**63 - 1


def xy_variables(x_count: int, y_count: int) -> tuple[str, ...]:
    """Variable names x1..x_a followed by y1..y_b, in evaluation order."""
    xs = tuple(f"x{i + 1}" for i in range(x_count))
    ys = tuple(f"y{i + 1}" for i in range(y_count))
    return xs + ys


class MultiPoly:
    """A polynomial in a fixed tuple of named variables.

    Instances are treated as immutable; arithmetic returns new objects.
    The zero polynomial has an empty term map.
    """

    __slots__ = ("variables", "terms", "_scaled")

    def __init__(self, variables: Iterable[str], terms: Mapping[Exponents, Scalar]):
        self.variables = tuple(variables)
        width = len(self.variables)
        clean: dict[Exponents, Fraction] = {}
        for exps, coef in terms.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != width:
                raise ValueError(f"exponent vector {exps} does not match {width} variables")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            c = Fraction(coef)
            if c == 0:
                continue
            clean[exps] = clean.get(exps, Fraction(0)) + c
            if clean[exps] == 0:
                del clean[exps]
        self.terms = clean
        self._scaled: tuple[int, tuple[tuple[int, Exponents], ...]] | None = None

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, variables: Iterable[str]) -> "MultiPoly":
        return cls(variables, {})

    @classmethod
    def constant(cls, variables: Iterable[str], value: Scalar) -> "MultiPoly":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def variable(cls, variables: Iterable[str], index: int) -> "MultiPoly":
        variables = tuple(variables)
        exps = [0] * len(variables)
        exps[index] = 1
        return cls(variables, {tuple(exps): 1})

    # ------------------------------------------------------------------
    # ring operations

    def _coerce(self, other) -> "MultiPoly | None":
        if isinstance(other, MultiPoly):
            if other.variables != self.variables:
                raise ValueError("polynomials over different variable tuples")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(self.variables, other)
        return None

    def __add__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for exps, c in other.terms.items():
            out[exps] = out.get(exps, Fraction(0)) + c
        return MultiPoly(self.variables, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return -(self - other)

    def __mul__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return MultiPoly(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = MultiPoly.constant(self.variables, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    # ------------------------------------------------------------------
    # evaluation

    def _scaled_form(self) -> tuple[int, tuple[tuple[int, Exponents], ...]]:
        if self._scaled is None:
            den = 1
            for c in self.terms.values():
                den = math.lcm(den, c.denominator)
            rows = tuple(
                (int(c * den), exps) for exps, c in sorted(self.terms.items())
            )
            self._scaled = (den, rows)
        return self._scaled

    def evaluate(self, values: Sequence[Scalar]) -> Fraction:
        """Exact value at the given point (ints or Fractions)."""
        if len(values) != len(self.variables):
            raise ValueError(
                f"expected {len(self.variables)} values, got {len(values)}"
            )
        if all(isinstance(v, int) for v in values):
            den, rows = self._scaled_form()
            total = 0
            for num, exps in rows:
                t = num
                for v, e in zip(values, exps):
                    if e:
                        t *= v**e
                total += t
            return Fraction(total, den)
        total = Fraction(0)
        for exps, c in self.terms.items():
            t = c
            for v, e in zip(values, exps):
                if e:
                    t *= Fraction(v) ** e
            total += t
        return total

    def evaluate_int(self, values: Sequence[int]) -> int:
        """Exact value, required to be an integer."""
        v = self.evaluate(values)
        if v.denominator != 1:
            raise NonIntegralValue(
                f"{self} evaluated at {tuple(values)} gives non-integer {v}"
            )
        return v.numerator

    # ------------------------------------------------------------------
    # structural operations

    def substitute(self, assignment: Mapping[int, Scalar]) -> "MultiPoly":
        """Fix the listed variable indices to constants (variables kept)."""
        out: dict[Exponents, Fraction] = {}
        for exps, c in self.terms.items():
            factor = c
            new = list(exps)
            for i, value in assignment.items():
                e = exps[i]
                if e:
                    factor *= Fraction(value) ** e
                new[i] = 0
            if factor == 0:
                continue
            key = tuple(new)
            out[key] = out.get(key, Fraction(0)) + factor
        return MultiPoly(self.variables, out)

    def project(self, keep: Sequence[int], new_variables: Iterable[str]) -> "MultiPoly":
        """Re-express over `new_variables` = old variables at `keep` indices.

        Every dropped variable must be absent from all terms.
        """
        new_variables = tuple(new_variables)
        if len(keep) != len(new_variables):
            raise ValueError("keep list and new variable list differ in length")
        keep_set = set(keep)
        out: dict[Exponents, Fraction] = {}
        for exps, c in self.terms.items():
            for i, e in enumerate(exps):
                if e and i not in keep_set:
                    raise ValueError(
                        f"variable {self.variables[i]} appears in a term being projected away"
                    )
            out[tuple(exps[i] for i in keep)] = c
        return MultiPoly(new_variables, out)

    def embed(self, new_variables: Iterable[str], index_map: Sequence[int]) -> "MultiPoly":
        """Re-express over a wider variable tuple; old index i becomes index_map[i]."""
        new_variables = tuple(new_variables)
        if len(index_map) != len(self.variables):
            raise ValueError("index map must cover every old variable")
        out: dict[Exponents, Fraction] = {}
        for exps, c in self.terms.items():
            new = [0] * len(new_variables)
            for i, e in enumerate(exps):
                new[index_map[i]] = e
            out[tuple(new)] = c
        return MultiPoly(new_variables, out)

    # ------------------------------------------------------------------
    # inspection

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def variable_degree(self, index: int) -> int:
        if not self.terms:
            return 0
        return max(e[index] for e in self.terms)

    def denominator_lcm(self) -> int:
        den = 1
        for c in self.terms.values():
            den = math.lcm(den, c.denominator)
        return den

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, c in sorted(self.terms.items(), reverse=True):
            factors = []
            for name, e in zip(self.variables, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        joined = " + ".join(parts)
        return joined.replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"MultiPoly({self})"


# ----------------------------------------------------------------------
# JSON monomial encoding shared by group laws and cocycles.
#
# A polynomial in variables x1..xa, y1..yb is a list of monomials:
#   {"coef": [num, den], "x_exps": [...], "y_exps": [...]}
# Integers beyond 64 bits travel as decimal strings.


def _encode_json_int(v: int):
    return str(v) if abs(v) > _INT64_MAX else v


def _decode_json_int(v) -> int:
    if isinstance(v, bool):
        raise ParseError(f"expected an integer, got {v!r}")
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        try:
            return int(v, 10)
        except ValueError as exc:
            raise ParseError(f"bad integer literal {v!r}") from exc
    raise ParseError(f"expected an integer or decimal string, got {v!r}")


def poly_to_monomials(p: MultiPoly, x_count: int, y_count: int) -> list[dict]:
    if len(p.variables) != x_count + y_count:
        raise ValueError("variable split does not match the polynomial")
    out = []
    for exps, c in sorted(p.terms.items(), reverse=True):
        out.append(
            {
                "coef": [_encode_json_int(c.numerator), _encode_json_int(c.denominator)],
                "x_exps": list(exps[:x_count]),
                "y_exps": list(exps[x_count:]),
            }
        )
    return out


def poly_from_monomials(monomials, x_count: int, y_count: int) -> MultiPoly:
    variables = xy_variables(x_count, y_count)
    if not isinstance(monomials, list):
        raise ParseError("polynomial must be a list of monomials")
    terms: dict[Exponents, Fraction] = {}
    for mono in monomials:
        if not isinstance(mono, dict):
            raise ParseError(f"monomial must be an object, got {mono!r}")
        try:
            raw_coef = mono["coef"]
            x_exps = mono["x_exps"]
            y_exps = mono["y_exps"]
        except KeyError as exc:
            raise ParseError(f"monomial missing key {exc}") from exc
        if not (isinstance(raw_coef, list) and len(raw_coef) == 2):
            raise ParseError(f"coef must be a [num, den] pair, got {raw_coef!r}")
        num = _decode_json_int(raw_coef[0])
        den = _decode_json_int(raw_coef[1])
        if den == 0:
            raise ParseError("zero denominator in coefficient")
        if len(x_exps) != x_count or len(y_exps) != y_count:
            raise ParseError(
                f"exponent lists must have lengths {x_count} and {y_count}"
            )
        exps = tuple(_decode_json_int(e) for e in list(x_exps) + list(y_exps))
        if any(e < 0 for e in exps):
            raise ParseError(f"negative exponent in {exps}")
        terms[exps] = terms.get(exps, Fraction(0)) + Fraction(num, den)
    return MultiPoly(variables, terms)
