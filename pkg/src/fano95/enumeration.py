"""Admissibility of weight systems and the enumeration of the 95 families."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import gcd

from .singularities import NonTerminalError, normalize_type, scan_strata
from .weights import WeightSystem, is_anticanonical, is_well_formed

__all__ = [
    "DEFAULT_MAX_WEIGHT",
    "DEFAULT_MAX_DEGREE",
    "Failure",
    "AdmissibilityVerdict",
    "check_quasismooth",
    "is_admissible",
    "enumerate_families",
]

# Largest family is X_66 in P(1,5,6,22,33); both bounds leave headroom.
DEFAULT_MAX_WEIGHT = 40
DEFAULT_MAX_DEGREE = 100
MIN_MAX_WEIGHT = 33
MIN_MAX_DEGREE = 66


@dataclass(frozen=True)
class Failure:
    tag: str
    where: tuple = ()

    def __str__(self) -> str:
        if not self.where:
            return self.tag
        return f"{self.tag}({','.join(map(str, self.where))})"


@dataclass(frozen=True)
class AdmissibilityVerdict:
    ws: WeightSystem
    failures: tuple[Failure, ...] = field(default=())

    @property
    def admissible(self) -> bool:
        return not self.failures

    @property
    def tags(self) -> set[str]:
        return {f.tag for f in self.failures}

    def describe(self) -> str:
        return "admissible" if self.admissible else "; ".join(map(str, self.failures))


def check_quasismooth(ws: WeightSystem) -> AdmissibilityVerdict:
    """Decide whether a general X_d is a terminal quasismooth Fano hypersurface.

    All failing conditions are collected; nothing is raised.
    """
    failures: list[Failure] = []
    if not is_anticanonical(ws):
        failures.append(Failure("not-anticanonical"))
    if not is_well_formed(ws):
        failures.append(Failure("not-well-formed"))
    w = ws.weights
    for i, j, k in combinations(range(5), 3):
        if gcd(w[i], w[j], w[k]) > 1:
            failures.append(Failure("face-singular", (i + 1, j + 1, k + 1)))
    points, strata_failures = scan_strata(ws)
    failures.extend(Failure(tag, where) for tag, where in strata_failures)
    for p in points:
        try:
            normalize_type(p.r, p.local_weights)
        except NonTerminalError:
            failures.append(Failure("non-terminal", (p.label, f"1/{p.r}{p.local_weights}")))
    return AdmissibilityVerdict(ws, tuple(failures))


def is_admissible(ws: WeightSystem) -> bool:
    return check_quasismooth(ws).admissible


def _cheap_reject(ws: WeightSystem) -> bool:
    w, d = ws.weights, ws.degree
    if any(gcd(w[i], w[j], w[k]) > 1 for i, j, k in combinations(range(5), 3)):
        return True
    # vertex condition: some x_i^m x_j of degree d
    return any(all((d - aj) % ai for aj in w) for ai in w)


def enumerate_families(max_weight: int = DEFAULT_MAX_WEIGHT, max_degree: int = DEFAULT_MAX_DEGREE) -> list[WeightSystem]:
    """All admissible anticanonical weight systems within the bounds.

    Sorted by ``(d, a2, a3, a4, a5)``.  Bounds below the known extent of the
    classification are rejected rather than silently truncating it.
    """
    if max_weight < MIN_MAX_WEIGHT:
        raise ValueError(f"max_weight={max_weight} is too small; need at least {MIN_MAX_WEIGHT}")
    if max_degree < MIN_MAX_DEGREE:
        raise ValueError(f"max_degree={max_degree} is too small; need at least {MIN_MAX_DEGREE}")
    found = []
    for a2 in range(1, max_weight + 1):
        for a3 in range(a2, max_weight + 1):
            for a4 in range(a3, max_weight + 1):
                if a2 + a3 + 2 * a4 > max_degree:
                    break
                for a5 in range(a4, max_weight + 1):
                    if a2 + a3 + a4 + a5 > max_degree:
                        break
                    ws = WeightSystem((1, a2, a3, a4, a5))
                    if _cheap_reject(ws):
                        continue
                    if is_admissible(ws):
                        found.append(ws)
    found.sort(key=WeightSystem.key)
    return found
