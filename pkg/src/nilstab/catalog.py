"""Built-in groups, cocycles, cycles, and demo representations.

Everything here is constructed from the library's own operations (the
discrete Heisenberg group is the central extension of the rank-2 lattice
by the cocycle x2*y1, and its skinny cocycle is fitted from the promoted
kernel), so these objects double as end-to-end exercises of the package.
"""

from __future__ import annotations

from functools import cache
from typing import Callable, Sequence

import numpy as np

from .cohomology import Chain2, PolyCocycle, cocycle_from_document
from .errors import ParseError
from .extensions import (
    CentralExtension,
    central_commutator_cycle,
    central_extension,
    extension_skinny_cocycle,
    interpolate_polynomial_cocycle,
)
from .groups import MalcevGroup, lattice, load_group, rename
from .poly import MultiPoly, xy_variables


@cache
def z2_skinny() -> PolyCocycle:
    """The cocycle x2*y1 on the rank-2 lattice (the shift/clock cocycle)."""
    group = lattice(2)
    poly = MultiPoly(xy_variables(2, 1), {(0, 1, 1): 1})
    return PolyCocycle(group, poly, name="z2_skinny")


@cache
def heisenberg_extension() -> CentralExtension:
    """The rank-2 lattice extended by x2*y1: the discrete Heisenberg group."""
    ext = central_extension(lattice(2), z2_skinny())
    return CentralExtension(
        base=ext.base,
        total=rename(ext.total, "heisenberg3"),
        cocycle=ext.cocycle,
    )


def heisenberg3() -> MalcevGroup:
    return heisenberg_extension().total


@cache
def heisenberg_skinny() -> PolyCocycle:
    """Polynomial skinny cocycle on the Heisenberg group pairing 1 with c_1.

    Built live: the lattice cocycle is promoted to a pointwise kernel on
    the extension group and then fitted exactly.  The result is
    -x3*y1 - x2*(y1^2 + y1)/2, so its coefficient denominator is 2 and
    phase-shift representations exist exactly at odd matrix sizes.
    """
    ext = heisenberg_extension()
    omega = extension_skinny_cocycle(ext)
    fitted = interpolate_polynomial_cocycle(omega, degree_bound=4)
    return PolyCocycle(ext.total, fitted.poly, name="heisenberg_skinny")


def zero_cocycle(group: MalcevGroup) -> PolyCocycle:
    return PolyCocycle(
        group, MultiPoly.zero(xy_variables(group.hirsch, 1)), name="zero"
    )


def voiculescu_cycle() -> Chain2:
    """[(0,1)|(1,0)] - [(1,0)|(0,1)] on the rank-2 lattice."""
    return Chain2.build([(1, (0, 1), (1, 0)), (-1, (1, 0), (0, 1))])


def heisenberg_c1() -> Chain2:
    return central_commutator_cycle(heisenberg_extension(), 1)


def character_representation(
    exponents: Sequence[Sequence[float]],
) -> Callable[[Sequence[int]], np.ndarray]:
    """Direct sum of lattice characters g -> exp(2 pi i <theta_k, g>).

    A genuine (exactly multiplicative) diagonal representation of Z^m,
    one dimension per row of `exponents`.
    """
    table = np.asarray(exponents, dtype=float)

    def rep(g: Sequence[int]) -> np.ndarray:
        phases = np.exp(2j * np.pi * (table @ np.asarray(g, dtype=float)))
        return np.diag(phases)

    return rep


# ----------------------------------------------------------------------
# name resolution for the command line


def resolve_group(source: str) -> MalcevGroup:
    """A builtin name (lattice:m, heisenberg3) or a path to a JSON document."""
    if source == "heisenberg3":
        return heisenberg3()
    if source.startswith("lattice:"):
        tail = source.split(":", 1)[1]
        try:
            m = int(tail)
        except ValueError:
            raise ParseError(f"bad lattice rank {tail!r}") from None
        if m < 1:
            raise ParseError("lattice rank must be positive")
        return lattice(m)
    return load_group(source)


def _strip_builtin(source: str) -> str:
    return source.split(":", 1)[1] if source.startswith("builtin:") else source


def resolve_cocycle(source: str, group: MalcevGroup) -> PolyCocycle:
    """A builtin name (z2_skinny, heisenberg_skinny, zero) or a JSON path."""
    name = _strip_builtin(source)
    if name == "zero":
        return zero_cocycle(group)
    if name == "z2_skinny":
        if group != lattice(2):
            raise ParseError("z2_skinny lives on the group lattice:2")
        return z2_skinny()
    if name == "heisenberg_skinny":
        if group != heisenberg3():
            raise ParseError("heisenberg_skinny lives on the group heisenberg3")
        return heisenberg_skinny()
    import json

    try:
        with open(source, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"{source}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc
    return cocycle_from_document(group, doc)


def resolve_cycle(source: str, group: MalcevGroup) -> Chain2:
    """A builtin name (voiculescu, heisenberg_c1) or a JSON path."""
    name = _strip_builtin(source)
    if name == "voiculescu":
        chain = voiculescu_cycle()
    elif name == "heisenberg_c1":
        chain = heisenberg_c1()
    else:
        import json

        try:
            with open(source, "r", encoding="utf-8") as fh:
                doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(
                f"{source}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
            ) from exc
        chain = Chain2.from_json(doc)
    for _, a, b in chain.terms:
        if len(a) != group.hirsch or len(b) != group.hirsch:
            raise ParseError(
                f"cycle terms have {len(a)} coordinates but the group needs "
                f"{group.hirsch}"
            )
    return chain
