"""
Elliptic and K3 fibrations
==========================

"""
from collections import Counter
from fractions import Fraction

from fano95 import density_witness_n19, elliptic_fiber_criterion, elliptic_status, k3_route, load_registry

records = load_registry()

print(Counter(elliptic_status(r.n).kind.value for r in records))
print("weight criterion holds for", sum(elliptic_fiber_criterion(r.ws) for r in records), "families")

routes = Counter(k3_route(r.ws, r.n).value for r in records)
for route, count in routes.most_common():
    print(f"{route:22s} {count}")

# potential density for N=19: pick lambda, mu so the cubic has a double root
c = [Fraction(3), Fraction(-2), Fraction(5), Fraction(1), Fraction(7), Fraction(4)]
w = density_witness_n19(c)
print("lambda =", w.lam, "mu =", w.mu, "cubic coefficients:", w.cubic)
