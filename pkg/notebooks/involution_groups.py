"""
Words in groups generated by involutions
========================================

"""
from fano95 import Presentation, ball_size, equal, order, presentation_of, reduce

# the extra relation in F3HAT makes t1 t2 t3 an involution
print(reduce(Presentation.F3HAT, [1, 2, 3, 1, 2, 3]).is_identity)
print(equal(Presentation.F3HAT, [1, 2, 3], [3, 2, 1]), equal(Presentation.F3, [1, 2, 3], [3, 2, 1]))
print(order(Presentation.F2, [1, 2]), order(Presentation.F3HAT, [1, 2, 3]))

# the lattice part of F3HAT grows quadratically, free products exponentially
for r in range(7):
    print(r, ball_size(Presentation.F3, r), ball_size(Presentation.F3HAT, r))

print({n: presentation_of(n).name for n in (4, 7, 20, 36, 60, 72)})
