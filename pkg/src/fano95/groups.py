"""Groups generated by birational involutions and their word problems.

Words are sequences of 1-based generator indices, multiplied left to right.
The free products F0, F1, F2, F3, F5 use reduced words as normal forms.  F3HAT
adds the relation (t1 t2 t3)^2 = 1 and is solved in its affine model on Z^2:

    t1: v -> -v,    t2: v -> 2e1 - v,    t3: v -> 2e2 - v.

An element is a pair (s, t) acting as v -> s v + t, with t in 2Z^2.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .tables import F1_FAMILIES, F2_FAMILIES, F3_FAMILIES, F3HAT_FAMILIES, F5_FAMILIES, FAMILIES

__all__ = [
    "Presentation",
    "FreeElement",
    "AffineElement",
    "GroupElement",
    "reduce",
    "equal",
    "order",
    "ball_size",
    "free_ball_size",
    "presentation_of",
    "parse_word",
]


class Presentation(enum.Enum):
    F0 = ("F0", 0)
    F1 = ("F1", 1)
    F2 = ("F2", 2)
    F3 = ("F3", 3)
    F3HAT = ("F3HAT", 3)
    F5 = ("F5", 5)

    def __init__(self, tag: str, generators: int):
        self.tag = tag
        self.generators = generators

    @property
    def is_free_product(self) -> bool:
        return self is not Presentation.F3HAT

    @classmethod
    def from_tag(cls, tag: str) -> "Presentation":
        try:
            return cls[tag.strip().upper()]
        except KeyError:
            raise ValueError(f"unknown presentation {tag!r}; expected one of {[p.tag for p in cls]}") from None

    def __str__(self) -> str:
        return self.tag


@dataclass(frozen=True)
class FreeElement:
    presentation: Presentation
    letters: tuple[int, ...] = ()

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def __mul__(self, other: "FreeElement") -> "FreeElement":
        if other.presentation is not self.presentation:
            raise ValueError("elements of different groups")
        out = list(self.letters)
        for g in other.letters:
            if out and out[-1] == g:
                out.pop()
            else:
                out.append(g)
        return FreeElement(self.presentation, tuple(out))

    def to_json(self) -> dict:
        return {"presentation": self.presentation.tag, "word": list(self.letters)}

    def __str__(self) -> str:
        return " ".join(f"t{g}" for g in self.letters) or "1"


@dataclass(frozen=True)
class AffineElement:
    sign: int
    translation: tuple[int, int] = (0, 0)

    presentation = Presentation.F3HAT

    @property
    def is_identity(self) -> bool:
        return self.sign == 1 and self.translation == (0, 0)

    def __mul__(self, other: "AffineElement") -> "AffineElement":
        s, (x, y) = self.sign, self.translation
        x2, y2 = other.translation
        return AffineElement(s * other.sign, (x + s * x2, y + s * y2))

    def apply(self, v: tuple[int, int]) -> tuple[int, int]:
        return (self.sign * v[0] + self.translation[0], self.sign * v[1] + self.translation[1])

    def to_json(self) -> dict:
        return {"presentation": "F3HAT", "sign": self.sign, "translation": list(self.translation)}

    def __str__(self) -> str:
        return f"v -> {'+' if self.sign > 0 else '-'}v + {self.translation}"


GroupElement = Union[FreeElement, AffineElement]

_AFFINE_GENERATORS = {
    1: AffineElement(-1, (0, 0)),
    2: AffineElement(-1, (2, 0)),
    3: AffineElement(-1, (0, 2)),
}


def parse_word(text: str | Iterable[int]) -> tuple[int, ...]:
    """Accept ``"1 2 3"``, ``"1,2,3"`` or an iterable of ints."""
    if isinstance(text, str):
        return tuple(int(t) for t in text.replace(",", " ").split())
    return tuple(int(g) for g in text)


def _check(p: Presentation, w: Sequence[int]) -> tuple[int, ...]:
    w = parse_word(w)
    for g in w:
        if not 1 <= g <= p.generators:
            raise ValueError(f"generator index {g} out of range for {p.tag} (1..{p.generators})")
    return w


def reduce(p: Presentation, w: Sequence[int]) -> GroupElement:
    w = _check(p, w)
    if p is Presentation.F3HAT:
        e = AffineElement(1)
        for g in w:
            e = e * _AFFINE_GENERATORS[g]
        return e
    return FreeElement(p) * FreeElement(p, w)


def equal(p: Presentation, w1: Sequence[int], w2: Sequence[int]) -> bool:
    return reduce(p, w1) == reduce(p, w2)


def order(p: Presentation, w: Sequence[int]) -> float | int:
    """Order of the element; ``math.inf`` when infinite."""
    e = reduce(p, w)
    if e.is_identity:
        return 1
    if isinstance(e, AffineElement):
        # (-1, t) squares to the identity; (+1, t != 0) is a translation
        return 2 if e.sign == -1 else math.inf
    letters = e.letters
    while len(letters) >= 2 and letters[0] == letters[-1]:
        letters = letters[1:-1]
    return 2 if len(letters) == 1 else math.inf


def ball_size(p: Presentation, radius: int) -> int:
    """Number of distinct elements represented by words of length <= radius.

    Breadth-first search on the Cayley graph.  Since every generator is an
    involution, neighbours of a sphere lie in the previous, same or next
    sphere, so only two spheres are kept in memory.
    """
    if radius < 0:
        raise ValueError(f"radius must be non-negative: {radius}")
    gens = range(1, p.generators + 1)
    if p is Presentation.F3HAT:
        def step(key, g):
            e = AffineElement(key[0], key[1:]) * _AFFINE_GENERATORS[g]
            return (e.sign, *e.translation)
        start = (1, 0, 0)
    else:
        base = p.generators + 1

        def step(key, g):
            return key // base if key % base == g else key * base + g
        start = 0
    previous: set = set()
    current = {start}
    total = 1
    for _ in range(radius):
        nxt = set()
        for key in current:
            for g in gens:
                k2 = step(key, g)
                if k2 not in current and k2 not in previous:
                    nxt.add(k2)
        if not nxt:
            break
        total += len(nxt)
        previous, current = current, nxt
    return total


def free_ball_size(generators: int, radius: int) -> int:
    """Closed form for the ball in a free product of involutions."""
    if generators == 0:
        return 1
    if generators == 1:
        return 1 + min(radius, 1)
    if generators == 2:
        return 2 * radius + 1
    k = generators - 1
    return 1 + generators * (k ** radius - 1) // (k - 1)


def presentation_of(n: int) -> Presentation:
    if n not in FAMILIES:
        raise ValueError(f"family number must lie in 1..95, got {n}")
    if n in F5_FAMILIES:
        return Presentation.F5
    if n in F3HAT_FAMILIES:
        return Presentation.F3HAT
    if n in F3_FAMILIES:
        return Presentation.F3
    if n in F2_FAMILIES:
        return Presentation.F2
    if n in F1_FAMILIES:
        return Presentation.F1
    return Presentation.F0
