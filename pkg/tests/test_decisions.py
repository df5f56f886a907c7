import pytest
from hypothesis import given, strategies as st

from invcurve.decisions import (
    BASE_LOCUS, BINARY_FORM, COMMON_FACTOR, EMPTY, FUNDAMENTAL, NONREDUCED, ODD, REDUCIBLE,
    basis, boundary_conditions, closed_form_nonsingular, decide_nonsingular,
    low_degree_case, profile, representable, six_conditions,
)
from invcurve.groups import expand_poincare

GIDS = ["V", "I", "K"]


@pytest.mark.parametrize("gid", GIDS)
def test_sweep_matches_congruences(gid):
    for d in range(1, 421):
        assert decide_nonsingular(gid, d).exists == closed_form_nonsingular(gid, d), d


def test_congruence_residues():
    assert [d for d in range(1, 61) if closed_form_nonsingular("V", d)] == [6, 12, 30, 36, 42, 60]
    assert [d for d in range(1, 21) if closed_form_nonsingular("I", d)] == [2, 6, 10, 12, 16, 20]
    assert [d for d in range(1, 29) if closed_form_nonsingular("K", d)] == [4, 6, 14, 18, 20, 28]


def test_valentiner_48_fails_condition_four():
    r = decide_nonsingular("V", 48)
    assert not r.exists and r.failed_conditions == [4]
    assert r.to_json()["failed_conditions"] == [4]


@pytest.mark.parametrize("gid", GIDS)
def test_boundary_degree(gid):
    assert boundary_conditions(gid) == {1: True, 2: True, 3: True}


LOW = {
    ("V", 6): FUNDAMENTAL, ("V", 12): FUNDAMENTAL, ("V", 18): COMMON_FACTOR,
    ("V", 24): BINARY_FORM, ("I", 2): FUNDAMENTAL, ("I", 4): NONREDUCED,
    ("I", 6): FUNDAMENTAL, ("I", 8): COMMON_FACTOR, ("K", 2): EMPTY,
    ("K", 4): FUNDAMENTAL, ("K", 6): FUNDAMENTAL, ("K", 8): NONREDUCED,
    ("K", 10): REDUCIBLE, ("K", 12): BASE_LOCUS,
}


@pytest.mark.parametrize("key,tag", sorted(LOW.items()))
def test_low_degree_tags(key, tag):
    gid, d = key
    assert low_degree_case(gid, d)[1] == tag
    assert decide_nonsingular(gid, d).low_degree_case == tag


def test_odd_degrees_tagged():
    assert low_degree_case("K", 7) == (False, ODD)
    assert decide_nonsingular("V", 45).low_degree_case == ODD


@given(st.integers(0, 300), st.integers(1, 30), st.integers(1, 30))
def test_representable_brute_force(d, p, q):
    brute = any(p * s + q * t == d for s in range(d // p + 1) for t in range(d // q + 1))
    assert representable(d, p, q) == brute


@given(st.sampled_from(GIDS), st.integers(1, 420))
def test_conditions_one_to_three_from_basis(gid, d):
    # condition l holds iff some monomial of degree d avoids the l-th invariant
    conds = six_conditions(gid, d)
    sols = basis(gid, d).solutions
    for l in range(3):
        assert conds[l + 1] == any(s[l] == 0 for s in sols)


@given(st.sampled_from(GIDS), st.integers(0, 200))
def test_basis_solutions_are_exact(gid, d):
    p = profile(gid)
    sols = basis(gid, d).solutions
    assert all(p.a * i + p.b * j + p.c * k == d for i, j, k in sols)
    assert len(set(sols)) == len(sols)


@pytest.mark.parametrize("gid", GIDS)
def test_basis_size_is_poincare_coefficient(gid):
    series = expand_poincare(gid, 90)
    for d in range(0, 91, 2):
        assert len(basis(gid, d)) == series[d]
        assert bool(basis(gid, d)) == (series[d] > 0)


def test_invalid_input():
    with pytest.raises(ValueError):
        decide_nonsingular("V", 0)
    with pytest.raises(KeyError):
        decide_nonsingular("Q", 6)
