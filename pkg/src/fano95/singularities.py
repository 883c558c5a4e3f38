"""Baskets of terminal cyclic quotient points and Kawamata blow-up numerics.

A general member X_d of P(1, a2, ..., a5) meets the singular strata of the
ambient space in isolated points.  Only two kinds of strata matter once the
triple-gcd condition holds:

* a vertex P_i (index a_i > 1) lies on X exactly when no pure power of x_i has
  degree d.  Quasismoothness then supplies a monomial x_i^m x_j, and the local
  weights are the three remaining weights mod a_i;
* an open edge P_iP_j with h = gcd(a_i, a_j) > 1 meets X in M - 1 points of
  index h, where M counts degree-d monomials in x_i, x_j alone.  The local
  weights are the three off-edge weights mod h.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

from .weights import WeightSystem, count_monomials, minus_k_cubed

__all__ = [
    "NonTerminalError",
    "QuotientSingularity",
    "Basket",
    "StratumPoint",
    "normalize_type",
    "scan_strata",
    "singular_strata",
    "compute_basket",
    "kawamata_blowup",
    "blowup_chain",
]


class NonTerminalError(ValueError):
    """A local type that is not 1/r(1, a, r-a) with gcd(a, r) = 1."""


def normalize_type(r: int, local_weights: Sequence[int]) -> int:
    """Return ``a`` with ``1/r(w1,w2,w3) = 1/r(1,a,r-a)`` and ``a <= r - a``.

    The representation is found by scaling with a unit of Z/r so that one
    weight becomes 1 while the other two sum to 0 mod r.
    """
    if r < 2:
        raise NonTerminalError(f"index must be at least 2, got {r}")
    ws = [w % r for w in local_weights]
    if len(ws) != 3:
        raise NonTerminalError(f"expected three local weights, got {local_weights}")
    if any(gcd(w, r) != 1 for w in ws):
        raise NonTerminalError(f"1/{r}{tuple(local_weights)} is not an isolated quotient point")
    for k in range(3):
        u = pow(ws[k], -1, r)
        b, c = (u * ws[t] % r for t in range(3) if t != k)
        if (b + c) % r == 0:
            return min(b, c)
    raise NonTerminalError(f"1/{r}{tuple(local_weights)} is not terminal")


@dataclass(frozen=True, order=True)
class QuotientSingularity:
    """Terminal point 1/r(1, a, r-a), stored with a <= r - a."""

    r: int
    a: int
    count: int = 1

    def __post_init__(self):
        if self.r < 2 or self.count < 1:
            raise NonTerminalError(f"bad singularity r={self.r} count={self.count}")
        a = self.a % self.r
        if a == 0 or gcd(a, self.r) != 1:
            raise NonTerminalError(f"1/{self.r}(1,{self.a},{self.r - self.a}) is not terminal")
        object.__setattr__(self, "a", min(a, self.r - a))

    @classmethod
    def from_weights(cls, r: int, local_weights: Sequence[int], count: int = 1) -> "QuotientSingularity":
        return cls(r, normalize_type(r, local_weights), count)

    @classmethod
    def parse(cls, text: str) -> "QuotientSingularity":
        """``"r:a"`` or ``"r:a:count"``."""
        parts = [int(p) for p in text.strip().split(":")]
        if len(parts) not in (2, 3):
            raise ValueError(f"expected r:a or r:a:count, got {text!r}")
        return cls(*parts)

    @property
    def kind(self) -> tuple[int, int]:
        return (self.r, self.a)

    @property
    def local_weights(self) -> tuple[int, int, int]:
        return (1, self.a, self.r - self.a)

    @property
    def kawamata_drop(self) -> Fraction:
        """The amount 1/(r a (r-a)) by which a Kawamata blow-up lowers -K^3."""
        return Fraction(1, self.r * self.a * (self.r - self.a))

    def with_count(self, count: int) -> "QuotientSingularity":
        return QuotientSingularity(self.r, self.a, count)

    def __str__(self) -> str:
        s = f"1/{self.r}(1,{self.a},{self.r - self.a})"
        return s if self.count == 1 else f"{self.count} x {s}"


@dataclass(frozen=True)
class Basket:
    """Multiset of terminal quotient points, merged by type and sorted."""

    entries: tuple[QuotientSingularity, ...] = ()

    def __init__(self, entries: Iterable[QuotientSingularity] = ()):
        tally: Counter = Counter()
        for s in entries:
            tally[s.kind] += s.count
        merged = tuple(QuotientSingularity(r, a, n) for (r, a), n in sorted(tally.items()))
        object.__setattr__(self, "entries", merged)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def size(self) -> int:
        """Number of points, counted with multiplicity."""
        return sum(s.count for s in self.entries)

    def points(self) -> list[QuotientSingularity]:
        """One entry (count 1) per point."""
        return [s.with_count(1) for s in self.entries for _ in range(s.count)]

    def indices(self) -> set[int]:
        return {s.r for s in self.entries}

    def to_string(self) -> str:
        return ";".join(f"{s.r}:{s.a}:{s.count}" for s in self.entries)

    @classmethod
    def parse(cls, text: str) -> "Basket":
        text = text.strip()
        if text in ("", "-"):
            return cls()
        return cls(QuotientSingularity.parse(t) for t in text.split(";") if t.strip())

    def __str__(self) -> str:
        return "{" + ", ".join(map(str, self.entries)) + "}" if self.entries else "{}"


@dataclass(frozen=True)
class StratumPoint:
    """Raw output of the stratum analysis, before normalization."""

    stratum: tuple[int, ...]  # 1-based coordinate indices spanning the stratum
    r: int
    local_weights: tuple[int, int, int]
    count: int

    @property
    def label(self) -> str:
        kind = "vertex" if len(self.stratum) == 1 else "edge"
        return f"{kind}{self.stratum}"


class StrataError(ValueError):
    """The general member is not quasismooth along some coordinate stratum."""

    def __init__(self, reason: str, stratum: tuple[int, ...]):
        super().__init__(f"{reason} at {stratum}")
        self.reason = reason
        self.stratum = stratum


def _vertex_partner(ws: WeightSystem, i: int) -> int | None:
    """0-based j with x_i^m x_j of degree d (m >= 1, j == i allowed)."""
    d, a = ws.degree, ws.weights[i]
    if d % a == 0:
        return i
    for j, aj in enumerate(ws.weights):
        if j != i and d > aj and (d - aj) % a == 0:
            return j
    return None


def scan_strata(ws: WeightSystem) -> tuple[list[StratumPoint], list[tuple[str, tuple[int, ...]]]]:
    """Vertex and edge points of a general X_d plus any quasismoothness failures.

    Failures are ``(reason, stratum)`` pairs with reason one of
    ``vertex-not-quasismooth`` or ``edge-contained``.
    """
    w, d = ws.weights, ws.degree
    points: list[StratumPoint] = []
    failures: list[tuple[str, tuple[int, ...]]] = []
    for i, a in enumerate(w):
        j = _vertex_partner(ws, i)
        if j is None:
            failures.append(("vertex-not-quasismooth", (i + 1,)))
            continue
        if a == 1 or d % a == 0:
            continue
        local = tuple(w[t] % a for t in range(5) if t not in (i, j))
        points.append(StratumPoint((i + 1,), a, local, 1))
    for i, j in combinations(range(5), 2):
        h = gcd(w[i], w[j])
        if h == 1:
            continue
        m = count_monomials(ws, d, (i + 1, j + 1))
        if m == 0:
            failures.append(("edge-contained", (i + 1, j + 1)))
        elif m > 1:
            local = tuple(w[t] % h for t in range(5) if t not in (i, j))
            points.append(StratumPoint((i + 1, j + 1), h, local, m - 1))
    return points, failures


def singular_strata(ws: WeightSystem) -> list[StratumPoint]:
    """Like :func:`scan_strata` but raises :class:`StrataError` on the first failure."""
    points, failures = scan_strata(ws)
    if failures:
        raise StrataError(*failures[0])
    return points


def compute_basket(ws: WeightSystem) -> Basket:
    """Basket of a general quasismooth X_d; raises on non-admissible input."""
    from .enumeration import check_quasismooth

    verdict = check_quasismooth(ws)
    if not verdict.admissible:
        raise ValueError(f"{ws} is not admissible: {verdict.describe()}")
    out = []
    for p in singular_strata(ws):
        try:
            out.append(QuotientSingularity.from_weights(p.r, p.local_weights, p.count))
        except NonTerminalError as exc:
            raise NonTerminalError(f"{p.label}: {exc}") from None
    return Basket(out)


def kawamata_blowup(kcube: Fraction, s: QuotientSingularity) -> Fraction:
    """-K^3 after the Kawamata blow-up of a point of type ``s``.

    Purely numeric: the caller is responsible for the point actually being
    present on the model whose -K^3 is ``kcube``.
    """
    if not isinstance(s, QuotientSingularity):
        raise TypeError(f"expected QuotientSingularity, got {type(s).__name__}")
    return Fraction(kcube) - s.kawamata_drop


def blowup_chain(ws: WeightSystem, chain: Sequence[QuotientSingularity]) -> list[Fraction]:
    """Running -K^3 along successive Kawamata blow-ups, starting at X itself.

    WARNING: the chain is trusted as given.  Points created on exceptional
    divisors (e.g. the 1/5(1,1,4) point over the 1/9(1,4,5) point of N=60)
    are legitimate entries even though they are not in the basket of X.
    """
    values = [minus_k_cubed(ws)]
    for s in chain:
        values.append(kawamata_blowup(values[-1], s))
    return values


def one_step_values(ws: WeightSystem, basket: Basket | None = None) -> list[tuple[QuotientSingularity, Fraction]]:
    """-K_Y^3 for the Kawamata blow-up at each basket point (with multiplicity)."""
    basket = compute_basket(ws) if basket is None else basket
    k = minus_k_cubed(ws)
    return [(p, kawamata_blowup(k, p)) for p in basket.points()]
