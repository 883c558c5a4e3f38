"""
Finding the 95 families
=======================

Walk every weight vector under the default bounds and keep the
quasismooth, terminal, anticanonically embedded hypersurfaces.
"""
from collections import Counter

from fano95 import WeightSystem, check_quasismooth, enumerate_families, minus_k_cubed

families = enumerate_families()
print(len(families), "weight systems")

# numbering follows the order of (degree, weights)
for n, ws in enumerate(families[:5], start=1):
    print(n, ws, "-K^3 =", minus_k_cubed(ws))

print(Counter(ws.degree for ws in families).most_common(5))

# a near miss: each failure is reported with where it happened
print(check_quasismooth(WeightSystem((1, 1, 1, 1, 4))).describe())
print(check_quasismooth(WeightSystem((1, 2, 2, 5, 7))).describe())
