from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fano95.weights import (
    WeightSystem,
    anticanonical_degree,
    is_anticanonical,
    is_well_formed,
    minus_k_cubed,
    monomials_of_degree,
)
from oracles import brute_monomials


@pytest.mark.parametrize("weights, d", [
    ((1, 1, 1, 1, 1), 4),
    ((1, 4, 5, 6, 9), 24),
    ((1, 2, 3, 10, 15), 30),
])
def test_anticanonical_degree(weights, d):
    assert anticanonical_degree(WeightSystem(weights)) == d
    assert is_anticanonical(WeightSystem(weights, d))
    assert not is_anticanonical(WeightSystem(weights, d + 1))


@pytest.mark.parametrize("weights, d, expected", [
    ((1, 1, 4, 6, 7), 18, Fraction(3, 28)),
    ((1, 2, 5, 6, 7), 20, Fraction(1, 21)),
    ((1, 1, 1, 1, 1), 4, Fraction(4)),
])
def test_minus_k_cubed(weights, d, expected):
    assert minus_k_cubed(WeightSystem(weights, d)) == expected


def test_weight_system_sorts_and_validates():
    ws = WeightSystem((9, 1, 6, 5, 4))
    assert ws.weights == (1, 4, 5, 6, 9) and ws.degree == 24
    assert WeightSystem.parse("1,4,5,6,9;24") == ws
    with pytest.raises(ValueError):
        WeightSystem((2, 3, 4, 5, 6))
    with pytest.raises(ValueError):
        WeightSystem((1, 2, 3))
    with pytest.raises(ValueError):
        WeightSystem((0, 1, 2, 3, 4))


def test_well_formed():
    assert is_well_formed(WeightSystem((1, 1, 2, 2, 3)))
    assert not is_well_formed(WeightSystem((1, 2, 2, 2, 2)))


def test_monomials_examples():
    ws = WeightSystem((1, 2, 3, 3, 4), 12)
    assert [m.exponents for m in monomials_of_degree(ws, 12, {5})] == [(0, 0, 0, 0, 3)]
    ws = WeightSystem((1, 1, 2, 2, 3), 8)
    got = [m.exponents for m in monomials_of_degree(ws, 8, {3, 4})]
    assert got == [(0, 0, 0, 4, 0), (0, 0, 1, 3, 0), (0, 0, 2, 2, 0), (0, 0, 3, 1, 0), (0, 0, 4, 0, 0)]
    assert [m.exponents for m in monomials_of_degree(ws, 0, {1, 2})] == [(0,) * 5]
    assert str(monomials_of_degree(ws, 0, {1})[0]) == "1"


weights5 = st.tuples(*[st.integers(1, 9)] * 4).map(lambda t: WeightSystem((1, *t)))


@given(weights5, st.integers(0, 24), st.sets(st.integers(1, 5), min_size=1, max_size=3))
def test_monomials_match_brute_force(ws, deg, support):
    got = [m.exponents for m in monomials_of_degree(ws, deg, support)]
    assert got == brute_monomials(ws.weights, deg, support)
    assert all(m.degree(ws) == deg and m.support <= support for m in monomials_of_degree(ws, deg, support))


@given(weights5, st.integers(0, 40))
def test_pair_with_common_factor_needs_divisible_degree(ws, deg):
    from math import gcd
    for i in range(1, 6):
        for j in range(i + 1, 6):
            h = gcd(ws[i - 1], ws[j - 1])
            if h > 1 and deg % h:
                assert monomials_of_degree(ws, deg, {i, j}) == []


def test_registry_weights_anticanonical_positive(records):
    for r in records:
        assert is_anticanonical(r.ws)
        assert minus_k_cubed(r.ws) > 0
        assert minus_k_cubed(r.ws) == Fraction(r.ws.degree, r.ws[0] * r.ws[1] * r.ws[2] * r.ws[3] * r.ws[4])
