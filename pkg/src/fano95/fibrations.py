"""Elliptic and K3 fibration structure of the 95 families."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from . import tables
from .weights import WeightSystem

__all__ = [
    "EllipticKind",
    "EllipticStatus",
    "K3Route",
    "RoutingError",
    "elliptic_fiber_criterion",
    "elliptic_status",
    "k3_route",
    "N19_COEFFICIENTS",
    "N19Witness",
    "density_witness_n19",
    "n19_cubic",
]


class EllipticKind(str, enum.Enum):
    NATURAL_PROJECTION = "natural_projection"
    SPECIAL_CONSTRUCTION = "special_construction"
    NONE = "none"


@dataclass(frozen=True)
class EllipticStatus:
    kind: EllipticKind
    multiple_structures: bool = False
    unique_structure: bool = False

    def __post_init__(self):
        if self.kind is EllipticKind.NONE and (self.multiple_structures or self.unique_structure):
            raise ValueError("a family without elliptic fibrations cannot carry structure flags")
        if self.multiple_structures and self.unique_structure:
            raise ValueError("unique and multiple elliptic structures are exclusive")


class K3Route(str, enum.Enum):
    INDEX_A3_PENCIL = "index_a3_pencil"
    QUARTIC = "quartic"
    DOUBLE_SEXTIC = "double_sextic"
    DOUBLE_QUINTIC = "double_quintic"
    ANTICANONICAL_FIBER = "anticanonical_fiber"
    SPECIAL_CASE = "special_case"
    FLIP_CONSTRUCTION = "flip_construction"


class RoutingError(RuntimeError):
    """No K3 route applies; this would contradict the existence of a K3 fibration."""


def elliptic_fiber_criterion(ws: WeightSystem) -> bool:
    """Is the general fiber of X -> P(1, a2, a3) a curve of genus one by degree count?

    True when floor(d/a4) <= 3 (affine plane cubic) or when floor(d/a4) <= 4
    and 2 a5 <= d < 2 a5 + a4 (double cover of the line branched in <= 4 points).
    """
    d, a4, a5 = ws.degree, ws.weights[3], ws.weights[4]
    q = d // a4
    return q <= 3 or (q <= 4 and 2 * a5 <= d < 2 * a5 + a4)


def elliptic_status(n: int) -> EllipticStatus:
    if n not in tables.FAMILIES:
        raise ValueError(f"family number must lie in 1..95, got {n}")
    if n in tables.NO_ELLIPTIC_FAMILIES:
        return EllipticStatus(EllipticKind.NONE)
    kind = EllipticKind.SPECIAL_CONSTRUCTION if n in tables.SPECIAL_ELLIPTIC_FAMILIES else EllipticKind.NATURAL_PROJECTION
    return EllipticStatus(kind, n in tables.OMEGA_FAMILIES, n in tables.UNIQUE_ELLIPTIC_FAMILIES)


def k3_route(ws: WeightSystem, n: int) -> K3Route:
    """First applicable route, tried in a fixed order.

    Weight predicates come before the a2 = 1 case (the fiber of X -> P(1, 1)
    is then an anticanonical surface in P(1, a3, a4, a5)), which comes before
    the family lists.
    """
    if n not in tables.FAMILIES:
        raise ValueError(f"family number must lie in 1..95, got {n}")
    d = ws.degree
    _, a2, a3, _, a5 = ws.weights
    if n in tables.K3_INDEX_PENCIL_FAMILIES:
        return K3Route.INDEX_A3_PENCIL
    if d // a3 <= 4:
        return K3Route.QUARTIC
    if 2 * a5 + a3 > d and d // a3 <= 6:
        return K3Route.DOUBLE_SEXTIC
    if 2 * a5 + 2 * a3 > d and 3 * a5 > d and d <= 5 * a3:
        return K3Route.DOUBLE_QUINTIC
    if a2 == 1:
        return K3Route.ANTICANONICAL_FIBER
    if n in tables.K3_SPECIAL_FAMILIES:
        return K3Route.SPECIAL_CASE
    if n in tables.K3_RESIDUAL_FAMILIES:
        return K3Route.FLIP_CONSTRUCTION
    raise RoutingError(f"no K3 route for N={n} {ws}")


# Coefficients of the degree-12 equation of X in P(1,2,3,3,4) that enter the
# restriction to x2 = lam x1^2, x3 = mu x1^3 near P = (0:0:0:1:0), named by
# exponent vector (i, j, k, l, m).
N19_COEFFICIENTS = ("a10012", "a20021", "a01021", "a10030", "a30030", "a00130")


@dataclass(frozen=True)
class N19Witness:
    lam: Fraction
    mu: Fraction
    cubic: tuple[Fraction, Fraction, Fraction, Fraction]  # x5^3, x5^2, x5, 1 coefficients

    @property
    def double_root(self) -> Fraction:
        return -self.cubic[1] / 2

    def as_tuple(self) -> tuple[Fraction, Fraction]:
        return (self.lam, self.mu)


def _coefficients(c: Mapping[str, object] | Sequence[object]) -> dict[str, Fraction]:
    if isinstance(c, Mapping):
        missing = [k for k in N19_COEFFICIENTS if k not in c]
        if missing:
            raise ValueError(f"missing coefficients: {', '.join(missing)}")
        return {k: Fraction(c[k]) for k in N19_COEFFICIENTS}
    values = list(c)
    if len(values) != len(N19_COEFFICIENTS):
        raise ValueError(f"expected {len(N19_COEFFICIENTS)} coefficients, got {len(values)}")
    return {k: Fraction(v) for k, v in zip(N19_COEFFICIENTS, values)}


def n19_cubic(c, lam: Fraction, mu: Fraction) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Coefficients of f(x5) = x5^3 + a10012 x5^2 + (a20021 + lam a01021) x5
    + (mu a00130 + lam a10030 + a30030), highest degree first (x1 = 1)."""
    k = _coefficients(c)
    return (
        Fraction(1),
        k["a10012"],
        k["a20021"] + lam * k["a01021"],
        mu * k["a00130"] + lam * k["a10030"] + k["a30030"],
    )


def density_witness_n19(c) -> N19Witness:
    """Choose (lam, mu) so that the cubic above is x5 (x5 + a10012/2)^2.

    ``c`` is a mapping keyed by :data:`N19_COEFFICIENTS` or a sequence in that
    order.  The normalization a00040 = 0, a00003 = 1 is assumed.  Requires
    a01021, a00130 and a10012 to be nonzero; the last one keeps the double root
    away from the simple root 0.
    """
    k = _coefficients(c)
    for name in ("a01021", "a00130", "a10012"):
        if k[name] == 0:
            raise ValueError(f"{name} must be nonzero")
    lam = (k["a10012"] ** 2 - 4 * k["a20021"]) / (4 * k["a01021"])
    mu = -(lam * k["a10030"] + k["a30030"]) / k["a00130"]
    cubic = n19_cubic(k, lam, mu)
    half = k["a10012"] / 2
    expected = (Fraction(1), 2 * half, half * half, Fraction(0))
    if cubic != expected:
        raise ArithmeticError(f"cubic {cubic} does not factor as x5 (x5 + {half})^2")
    return N19Witness(lam, mu, cubic)
