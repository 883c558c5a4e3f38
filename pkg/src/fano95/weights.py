"""Weight systems on P(1, a2, a3, a4, a5) and exact anticanonical arithmetic.

Everything here is integer or :class:`fractions.Fraction` arithmetic; Python
integers never wrap around, so no overflow guard is needed beyond that.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, prod
from typing import Iterable, Sequence

Rational = Fraction

__all__ = [
    "Rational",
    "WeightSystem",
    "Monomial",
    "anticanonical_degree",
    "is_anticanonical",
    "is_well_formed",
    "minus_k_cubed",
    "monomials_of_degree",
]


@dataclass(frozen=True, order=True)
class WeightSystem:
    """Weights ``(1, a2, a3, a4, a5)`` in ascending order and a degree ``d``.

    Instances are sorted on construction (stable, so ties keep input order).
    The degree defaults to the anticanonical one, ``sum(weights) - 1``.
    """

    weights: tuple[int, ...]
    degree: int

    def __init__(self, weights: Iterable[int], degree: int | None = None):
        ws = tuple(sorted(int(a) for a in weights))
        if len(ws) != 5:
            raise ValueError(f"expected five weights, got {len(ws)}")
        if ws[0] < 1:
            raise ValueError(f"weights must be positive: {ws}")
        if ws[0] != 1:
            raise ValueError(f"smallest weight must be 1: {ws}")
        if degree is None:
            degree = sum(ws) - 1
        if degree < 1:
            raise ValueError(f"degree must be positive: {degree}")
        object.__setattr__(self, "weights", ws)
        object.__setattr__(self, "degree", int(degree))

    @classmethod
    def parse(cls, text: str, degree: int | None = None) -> "WeightSystem":
        """``"1,4,5,6,9"`` or ``"1,4,5,6,9;24"`` -> WeightSystem."""
        if ";" in text:
            text, deg = text.split(";", 1)
            degree = int(deg)
        return cls([int(t) for t in text.replace(" ", "").split(",") if t], degree)

    def __getitem__(self, i: int) -> int:
        return self.weights[i]

    def __iter__(self):
        return iter(self.weights)

    def __str__(self) -> str:
        return f"X_{self.degree} in P({','.join(map(str, self.weights))})"

    def key(self) -> tuple[int, ...]:
        """Sort key: degree first, then the weights."""
        return (self.degree, *self.weights)


@dataclass(frozen=True)
class Monomial:
    exponents: tuple[int, ...]

    def degree(self, ws: WeightSystem) -> int:
        return sum(e * a for e, a in zip(self.exponents, ws.weights))

    @property
    def support(self) -> frozenset[int]:
        """1-based indices of the variables that actually occur."""
        return frozenset(i + 1 for i, e in enumerate(self.exponents) if e)

    def __str__(self) -> str:
        parts = [f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(self.exponents) if e]
        return "*".join(parts) or "1"


def anticanonical_degree(ws: WeightSystem | Sequence[int]) -> int:
    weights = ws.weights if isinstance(ws, WeightSystem) else tuple(ws)
    if any(a < 1 for a in weights):
        raise ValueError(f"weights must be positive: {weights}")
    return sum(weights) - 1


def is_anticanonical(ws: WeightSystem) -> bool:
    return ws.degree == anticanonical_degree(ws)


def is_well_formed(ws: WeightSystem) -> bool:
    """Every four of the five weights are coprime."""
    return all(gcd(*four) == 1 for four in combinations(ws.weights, 4))


def minus_k_cubed(ws: WeightSystem) -> Fraction:
    """-K^3 = d / (a1 a2 a3 a4 a5) for an anticanonically embedded X_d."""
    return Fraction(ws.degree, prod(ws.weights))


def monomials_of_degree(ws: WeightSystem, deg: int, support: Iterable[int] = (1, 2, 3, 4, 5)) -> list[Monomial]:
    """All monomials of weighted degree ``deg`` in the variables ``support``.

    ``support`` holds 1-based variable indices.  Results are in lexicographic
    order of their exponent vectors.
    """
    if deg < 0:
        raise ValueError(f"degree must be non-negative: {deg}")
    idx = sorted(set(support))
    if any(not 1 <= i <= 5 for i in idx):
        raise ValueError(f"support indices must lie in 1..5: {idx}")
    out: list[Monomial] = []
    exps = [0] * 5

    def rec(k: int, remaining: int) -> None:
        if k == len(idx):
            if remaining == 0:
                out.append(Monomial(tuple(exps)))
            return
        i = idx[k] - 1
        a = ws.weights[i]
        for e in range(remaining // a + 1):
            exps[i] = e
            rec(k + 1, remaining - e * a)
        exps[i] = 0

    rec(0, deg)
    out.sort(key=lambda m: m.exponents)
    return out


def count_monomials(ws: WeightSystem, deg: int, support: Iterable[int]) -> int:
    idx = sorted(set(support))
    if len(idx) == 2:
        a, b = ws.weights[idx[0] - 1], ws.weights[idx[1] - 1]
        return sum(1 for p in range(deg // a + 1) if (deg - p * a) % b == 0)
    return len(monomials_of_degree(ws, deg, idx))
