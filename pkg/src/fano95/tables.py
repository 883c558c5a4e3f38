"""Family lists attached to the 95 numbered families.

Every list used by the classifiers lives here exactly once.  Family numbers
follow the Iano-Fletcher ordering, which coincides with sorting the weight
systems by (d, a2, a3, a4, a5).
"""
from __future__ import annotations

FAMILY_COUNT = 95
FAMILIES = frozenset(range(1, FAMILY_COUNT + 1))

# Presentations of the group generated by the birational involutions.
F5_FAMILIES = frozenset({7})
F3HAT_FAMILIES = frozenset({4, 9, 17, 27})
F3_FAMILIES = frozenset({20})
F2_FAMILIES = frozenset({5, 6, 12, 13, 15, 23, 25, 30, 31, 33, 36, 38, 40, 41, 42, 44, 58, 61, 68, 76})
F1_FAMILIES = frozenset({2, 8, 16, 18, 24, 26, 32, 43, 45, 46, 47, 48, 54, 56, 60, 65, 69, 74, 79})

# Families that are not birational to any elliptic fibration.
NO_ELLIPTIC_FAMILIES = frozenset({3, 60, 75, 84, 87, 93})
# Elliptic structure from an explicit construction rather than the natural projection.
SPECIAL_ELLIPTIC_FAMILIES = frozenset({1, 2, 7, 11, 19})
# Several inequivalent elliptic structures.
OMEGA_FAMILIES = frozenset({1, 2, 7, 9, 11, 17, 19, 20, 26, 30, 36, 44, 49, 51, 64})
# Unique elliptic structure proved through a single point with -K_Y^3 = 0.
UNIQUE_VIA_ZERO_POINT = frozenset({14, 22, 28, 34, 37, 39, 52, 53, 57, 59, 66, 70, 72, 73,
                                   78, 81, 86, 88, 89, 90, 92, 94, 95})
# Unique elliptic structure established elsewhere (N=5).
UNIQUE_BY_REFERENCE = frozenset({5})
UNIQUE_ELLIPTIC_FAMILIES = UNIQUE_VIA_ZERO_POINT | UNIQUE_BY_REFERENCE
# Every Kawamata blow-up of a basket point gives -K_Y^3 < 0.
ALL_NEGATIVE_FAMILIES = frozenset({75, 84, 87, 93})
# Families where the natural projection need not be an elliptic fibration.
LEMMA_ELLIPTIC_EXCLUDED = SPECIAL_ELLIPTIC_FAMILIES | NO_ELLIPTIC_FAMILIES

# K3 fibration routing.
K3_INDEX_PENCIL_FAMILIES = frozenset({18, 22, 28})
K3_RESIDUAL_FAMILIES = frozenset({27, 33, 48, 55, 56, 58, 63, 65, 68, 72, 74, 79, 80, 83, 85,
                                  89, 90, 91, 92, 94, 95})
K3_SPECIAL_FAMILIES = frozenset({27, 56, 65, 68, 83})

# Rational points potentially dense.
DENSE_FAMILIES = frozenset({1, 2, 4, 5, 6, 7, 9, 11, 12, 13, 15, 17, 19, 20, 23, 25, 27, 30,
                            31, 33, 36, 38, 40, 41, 42, 44, 58, 61, 68, 76})
DENSE_WITHOUT_INVOLUTIONS = frozenset({1, 2, 11, 19})

# Weights stated explicitly for individual families; a table that disagrees
# with any of these cannot be loaded.
PINNED_WEIGHTS: dict[int, tuple[int, ...]] = {
    1: (1, 1, 1, 1, 1),
    7: (1, 1, 2, 2, 3),
    19: (1, 2, 3, 3, 4),
    20: (1, 1, 3, 4, 5),
    36: (1, 1, 4, 6, 7),
    44: (1, 2, 5, 6, 7),
    58: (1, 3, 4, 7, 10),
    60: (1, 4, 5, 6, 9),
    72: (1, 2, 3, 10, 15),
}
