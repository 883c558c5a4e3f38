import pytest

from fano95.enumeration import check_quasismooth, enumerate_families, is_admissible
from fano95.singularities import compute_basket
from fano95.weights import WeightSystem


def test_known_examples_admissible():
    assert check_quasismooth(WeightSystem((1, 1, 2, 2, 3), 8)).admissible
    assert check_quasismooth(WeightSystem((1, 3, 4, 7, 10), 24)).admissible


def test_triple_gcd_rejected():
    v = check_quasismooth(WeightSystem((1, 2, 2, 2, 2), 8))
    assert not v.admissible
    assert "face-singular" in v.tags
    assert "not-well-formed" in v.tags


def test_failure_tags():
    assert "not-anticanonical" in check_quasismooth(WeightSystem((1, 1, 1, 1, 1), 5)).tags
    v = check_quasismooth(WeightSystem((1, 1, 2, 3, 7)))  # d = 13
    assert "vertex-not-quasismooth" in v.tags
    v = check_quasismooth(WeightSystem((1, 1, 3, 6, 9)))  # d = 19, gcd(3,6,9)=3
    assert "face-singular" in v.tags
    v = check_quasismooth(WeightSystem((1, 1, 2, 4, 6)))  # d = 13, no monomial in x3, x4
    assert "edge-contained" in v.tags
    v = check_quasismooth(WeightSystem((1, 1, 1, 2, 2)))
    assert v.admissible and v.describe() == "admissible"


def test_non_terminal_rejected():
    # vertex P4 of X_16 in P(1,2,2,5,7) is 1/5(2,2,2) = 1/5(1,1,1)
    v = check_quasismooth(WeightSystem((1, 2, 2, 5, 7)))
    assert not v.admissible
    assert v.tags == {"non-terminal"}


def test_count_and_sorted(enumerated):
    assert len(enumerated) == 95
    assert enumerated == sorted(enumerated, key=WeightSystem.key)
    assert len(set(enumerated)) == 95
    assert WeightSystem((1, 4, 5, 6, 9), 24) in enumerated
    assert WeightSystem((1, 2, 3, 3, 4), 12) in enumerated
    assert enumerated[-1] == WeightSystem((1, 5, 6, 22, 33), 66)


def test_matches_registry(enumerated, records):
    assert enumerated == [r.ws for r in records]


def test_bounds_checked():
    with pytest.raises(ValueError, match="max_weight"):
        enumerate_families(max_weight=20)
    with pytest.raises(ValueError, match="max_degree"):
        enumerate_families(max_degree=50)


def test_monotone_in_bounds(enumerated):
    bigger = enumerate_families(max_weight=50, max_degree=130)
    assert set(enumerated) <= set(bigger)
    assert bigger == enumerated


def test_outputs_pass_checks(enumerated):
    for ws in enumerated:
        assert is_admissible(ws)
        for s in compute_basket(ws):
            assert 1 <= s.a < s.r and (s.a * 2 <= s.r)
