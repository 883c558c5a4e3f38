"""Exit criteria.  Every check is exact; there are no tolerances to tune.

Run ``pytest tests/test_acceptance.py`` to see one PASS/FAIL line per criterion
in the terminal summary.
"""
import math
import random
from fractions import Fraction
from itertools import permutations, product

import pytest

from fano95 import tables
from fano95.enumeration import enumerate_families
from fano95.fibrations import (
    EllipticKind,
    K3Route,
    density_witness_n19,
    elliptic_fiber_criterion,
    elliptic_status,
    k3_route,
    n19_cubic,
)
from fano95.groups import Presentation as P
from fano95.groups import ball_size, equal, free_ball_size, order, presentation_of, reduce
from fano95.singularities import Basket, QuotientSingularity as Q, blowup_chain, compute_basket, one_step_values
from fano95.weights import WeightSystem, minus_k_cubed
from oracles import f3hat_relators, free_reduce, rewriting_components

pytestmark = pytest.mark.usefixtures("criterion")


def B(*items):
    return Basket(Q(r, a, n) for r, a, n in items)


@pytest.mark.criterion("1", "enumeration yields exactly the 95 registry weight systems")
def test_c1_enumeration(records):
    found = enumerate_families()
    assert len(found) == 95
    assert set(found) == {r.ws for r in records}


@pytest.mark.criterion("2", "-K^3 = 3/28 for X_18 in P(1,1,4,6,7) and 1/21 for X_20 in P(1,2,5,6,7)")
def test_c2_minus_k_cubed():
    assert minus_k_cubed(WeightSystem((1, 1, 4, 6, 7), 18)) == Fraction(3, 28)
    assert minus_k_cubed(WeightSystem((1, 2, 5, 6, 7), 20)) == Fraction(1, 21)


@pytest.mark.criterion("3", "N=60 chain 1/45 -> 1/60 -> -1/30; other points negative")
def test_c3_n60_chain(by_n):
    ws = by_n[60].ws
    assert blowup_chain(ws, [Q(9, 4), Q(5, 1)]) == [Fraction(1, 45), Fraction(1, 60), Fraction(-1, 30)]
    others = [v for s, v in one_step_values(ws) if s.kind != (9, 4)]
    assert len(others) == 4 and all(v < 0 for v in others)


# Full baskets; 7, 36, 44 are known in full, 20, 58, 60, 72 are
# completed from the stated points and checked against orbifold Riemann-Roch.
EXPECTED_BASKETS = {
    7: B((2, 1, 4), (3, 1, 1)),
    20: B((3, 1, 1), (4, 1, 1), (5, 1, 1)),
    36: B((2, 1, 1), (4, 1, 1), (7, 1, 1)),
    44: B((2, 1, 3), (6, 1, 1), (7, 2, 1)),
    58: B((2, 1, 1), (7, 3, 1), (10, 3, 1)),
    60: B((2, 1, 2), (3, 1, 1), (5, 1, 1), (9, 4, 1)),
    72: B((2, 1, 3), (3, 1, 2), (5, 2, 1)),
}


@pytest.mark.criterion("4", "baskets of N = 7, 20, 36, 44, 58, 60, 72")
def test_c4_baskets(by_n):
    for n, expected in EXPECTED_BASKETS.items():
        assert compute_basket(by_n[n].ws) == expected, n


@pytest.mark.criterion("5", "exactly one zero blow-up point for the 23 unique families; all negative for 75/84/87/93")
def test_c5_sign_mechanism(by_n):
    assert len(tables.UNIQUE_VIA_ZERO_POINT) == 23
    for n in tables.UNIQUE_VIA_ZERO_POINT:
        values = [v for _, v in one_step_values(by_n[n].ws)]
        assert sum(v == 0 for v in values) == 1, n
        assert sum(v < 0 for v in values) == len(values) - 1, n
    values = [v for _, v in one_step_values(by_n[60].ws)]
    assert sum(v >= 0 for v in values) == 1
    for n in (75, 84, 87, 93):
        assert all(v < 0 for _, v in one_step_values(by_n[n].ws)), n


@pytest.mark.criterion("6", "elliptic criterion outside the exceptions; no elliptic fibration exactly on {3,60,75,84,87,93}")
def test_c6_elliptic(records):
    exceptions = {1, 2, 3, 7, 11, 19, 60, 75, 84, 87, 93}
    for r in records:
        if r.n not in exceptions:
            assert elliptic_fiber_criterion(r.ws), r.n
    none = {r.n for r in records if elliptic_status(r.n).kind is EllipticKind.NONE}
    assert none == {3, 60, 75, 84, 87, 93}


@pytest.mark.criterion("7", "presentations partition 1..95 and the density identity holds")
def test_c7_presentations():
    lists = {
        P.F5: {7},
        P.F3HAT: {4, 9, 17, 27},
        P.F3: {20},
        P.F2: {5, 6, 12, 13, 15, 23, 25, 30, 31, 33, 36, 38, 40, 41, 42, 44, 58, 61, 68, 76},
        P.F1: {2, 8, 16, 18, 24, 26, 32, 43, 45, 46, 47, 48, 54, 56, 60, 65, 69, 74, 79},
    }
    lists[P.F0] = set(range(1, 96)) - set().union(*lists.values())
    for p, members in lists.items():
        assert {n for n in range(1, 96) if presentation_of(n) is p} == members, p
    dense = {1, 2, 4, 5, 6, 7, 9, 11, 12, 13, 15, 17, 19, 20, 23, 25, 27, 30, 31, 33, 36, 38,
             40, 41, 42, 44, 58, 61, 68, 76}
    assert dense == {n for n in range(1, 96) if presentation_of(n).generators >= 2} | {1, 2, 11, 19}


@pytest.mark.criterion("8", "word problem: relation, commutation, infinite order, rewriting oracle, ball sizes")
def test_c8_words():
    for perm in permutations((1, 2, 3)):
        assert reduce(P.F3HAT, perm * 2).is_identity
    assert equal(P.F3HAT, [1, 2, 3], [3, 2, 1])
    assert not equal(P.F3, [1, 2, 3], [3, 2, 1])
    assert order(P.F2, [1, 2]) == math.inf
    assert len({reduce(P.F2, [1, 2] * k) for k in range(1000)}) == 1000
    find = rewriting_components(12, f3hat_relators())
    affine_to_comp: dict = {}
    comp_to_affine: dict = {}
    n_words = 0
    for k in range(9):
        for w in product((1, 2, 3), repeat=k):
            n_words += 1
            e, c = reduce(P.F3HAT, w), find(free_reduce(w))
            assert affine_to_comp.setdefault(e, c) == c
            assert comp_to_affine.setdefault(c, e) == e
    assert n_words == sum(3 ** k for k in range(9))
    for p in (P.F0, P.F1, P.F2, P.F3, P.F5):
        for r in range(11):
            assert ball_size(p, r) == free_ball_size(p.generators, r), (p, r)


@pytest.mark.criterion("9", "every family gets exactly one K3 route")
def test_c9_k3(records):
    routes = {r.n: k3_route(r.ws, r.n) for r in records}
    assert len(routes) == 95 and all(isinstance(v, K3Route) for v in routes.values())
    assert routes[58] is K3Route.FLIP_CONSTRUCTION
    assert routes[72] is K3Route.FLIP_CONSTRUCTION
    assert {n for n, v in routes.items() if v is K3Route.SPECIAL_CASE} == {27, 56, 65, 68, 83}


@pytest.mark.criterion("10", "N=19 cubic factors as x5 (x5 + a10012/2)^2 for 100 random tuples")
def test_c10_witness():
    rng = random.Random(1019)
    done = 0
    while done < 100:
        c = [Fraction(rng.randint(-99, 99), rng.randint(1, 12)) for _ in range(6)]
        if c[0] == 0 or c[2] == 0 or c[5] == 0:
            continue
        w = density_witness_n19(c)
        half = c[0] / 2
        assert n19_cubic(c, w.lam, w.mu) == (1, 2 * half, half * half, 0)
        assert len({Fraction(0), -half}) == 2
        done += 1
