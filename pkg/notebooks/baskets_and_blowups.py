"""
Baskets and Kawamata blow-ups
=============================

"""
from fano95 import QuotientSingularity, blowup_chain, compute_basket, load_registry
from fano95.singularities import one_step_values

records = {r.n: r for r in load_registry()}
x60 = records[60].ws
print(x60, "-K^3 =", records[60].minus_k_cubed)
print("basket:", compute_basket(x60).to_string())

# one blow-up per basket point; only the index 9 point keeps -K^3 >= 0
for point, value in one_step_values(x60):
    print(f"  {point}: {value}")

chain = [QuotientSingularity(9, 4), QuotientSingularity(5, 1)]
print("chain:", [str(v) for v in blowup_chain(x60, chain)])

# families where every blow-up goes negative
for n in (75, 84, 87, 93):
    print(n, all(v < 0 for _, v in one_step_values(records[n].ws)))
