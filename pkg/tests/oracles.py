"""Independent oracles.  Nothing here imports the code paths it checks."""
from __future__ import annotations

from fractions import Fraction
from itertools import product


def hilbert_coefficient(weights, degree, n):
    """h^0(O_X(n)) for X_d in P(w): coefficient of t^n in (1 - t^d) / prod(1 - t^w)."""
    c = [0] * (n + 1)
    c[0] = 1
    for a in weights:
        for k in range(a, n + 1):
            c[k] += c[k - a]
    return c[n] - (c[n - degree] if n >= degree else 0)


def plurigenus_from_basket(kcube, basket, n):
    """Orbifold Riemann-Roch for h^0(-nK) on a terminal Fano 3-fold.

    ``basket`` is a list of (r, a) for points 1/r(1, a, r-a), one per point.
    In the (1, -1, b) form the point has b = a^-1 mod r.
    """
    correction = Fraction(0)
    for r, a in basket:
        b = pow(a, -1, r)
        for j in range(1, n + 1):
            bj = b * j % r
            correction += Fraction(bj * (r - bj), 2 * r)
    return Fraction(n * (n + 1) * (2 * n + 1), 12) * kcube + 2 * n + 1 - correction


def brute_monomials(weights, degree, support):
    """Exponent vectors by exhaustive product over bounded exponents."""
    ranges = [range(degree // weights[i - 1] + 1) if i in support else range(1) for i in range(1, 6)]
    return sorted(e for e in product(*ranges) if sum(x * w for x, w in zip(e, weights)) == degree)


def free_reduce(word):
    out = []
    for g in word:
        if out and out[-1] == g:
            out.pop()
        else:
            out.append(g)
    return tuple(out)


def rewriting_components(max_len, relators):
    """Union-find over freely reduced words of length <= max_len in t1, t2, t3.

    Two words are joined when one arises from the other by inserting a relator
    at some position and freely reducing.  Deleting a relator is the inverse
    move (insert its inverse, which is also in ``relators``).
    """
    words = [()]
    frontier = [()]
    for _ in range(max_len):
        frontier = [w + (g,) for w in frontier for g in (1, 2, 3) if not w or w[-1] != g]
        words.extend(frontier)
    parent = {w: w for w in words}

    def find(w):
        while parent[w] != w:
            parent[w] = parent[parent[w]]
            w = parent[w]
        return w

    for w in words:
        for i in range(len(w) + 1):
            for rel in relators:
                v = free_reduce(w[:i] + rel + w[i:])
                if len(v) <= max_len:
                    rw, rv = find(w), find(v)
                    if rw != rv:
                        parent[rw] = rv
    return find


def f3hat_relators():
    base = (1, 2, 3, 1, 2, 3)
    rots = {base[i:] + base[:i] for i in range(6)}
    return sorted(rots | {tuple(reversed(r)) for r in rots})
