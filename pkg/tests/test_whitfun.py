"""Torus values of spherical and essential Whittaker functions."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from whittaker.errors import BadRank, UnsupportedWeight
from whittaker.repdata import parse_rep
from whittaker.ringcore import Scalar, u_power
from whittaker.whitfun import (
    beta_to_diag,
    delta_half,
    essential_value,
    essential_value_beta,
    spherical_value,
)

Z = [Scalar.variable(f"z{i}") for i in range(1, 5)]

STEINBERG = parse_rep({"q": "3", "segments": [
    {"kind": "unramified", "satake": "1/2", "length": 2}]})
ALL_RAMIFIED = parse_rep({"q": "3", "segments": [
    {"kind": "ramified", "id": "rho1", "degree": 3, "length": 1}]})
MIXED = parse_rep({"q": "3", "segments": [
    {"kind": "unramified", "satake": "1/2", "length": 2},
    {"kind": "ramified", "id": "rho1", "degree": 2, "length": 1},
    {"kind": "unramified", "satake": "3", "length": 1}]})
UNRAMIFIED3 = parse_rep({"q": "3", "segments": [
    {"kind": "unramified", "satake": "2", "length": 1},
    {"kind": "unramified", "satake": "5", "length": 1},
    {"kind": "unramified", "satake": "7", "length": 1}]})


# --- delta_half ----------------------------------------------------------------

def test_delta_half_trivial():
    assert delta_half((0, 0, 0), 3) == Scalar.of(1)


def test_delta_half_rank_two():
    # |w/1| = q^{-1}; half power is u^{-1}
    assert delta_half((1, 0), 2) == u_power(-1)


def test_delta_half_rank_three():
    # product of |a_i/a_j| over i<j at (2,1,0) is q^{-4}
    assert delta_half((2, 1, 0), 3) == u_power(-4)


def test_delta_half_rank_mismatch():
    with pytest.raises(BadRank):
        delta_half((1, 0), 3)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=1, max_size=5))
def test_delta_half_matches_pairwise_product(weight):
    # definition: product over i < j of |a_i/a_j|, halved; |w| = q^{-1} = u^{-2}
    m = len(weight)
    exponent = -sum(weight[i] - weight[j] for i in range(m) for j in range(i + 1, m))
    assert delta_half(weight, m) == u_power(exponent)


# --- spherical_value -------------------------------------------------------------

def test_spherical_normalized_at_identity():
    assert spherical_value(Z[:3], (0, 0, 0)) == Scalar.of(1)


def test_spherical_first_fundamental_weight():
    assert spherical_value(Z[:2], (1, 0)) == u_power(-1) * (Z[0] + Z[1])


def test_spherical_vanishes_off_dominant_cone():
    assert spherical_value(Z[:2], (0, 1)).is_zero()


def test_spherical_rejects_negative_dominant_weight():
    with pytest.raises(UnsupportedWeight):
        spherical_value(Z[:2], (0, -1))


@settings(max_examples=30, deadline=None)
@given(st.permutations(range(3)),
       st.sampled_from([(0, 0, 0), (1, 0, 0), (1, 1, 0), (2, 1, 0), (3, 1, 1)]))
def test_spherical_symmetric_in_satake(perm, weight):
    satake = Z[:3]
    permuted = [satake[i] for i in perm]
    assert spherical_value(satake, weight) == spherical_value(permuted, weight)


# --- essential_value ---------------------------------------------------------------

def test_essential_r0_kills_nonunit_coordinates():
    assert essential_value(ALL_RAMIFIED, (1, 0)).is_zero()
    assert essential_value(ALL_RAMIFIED, (0, 0)) == Scalar.of(1)


def test_essential_steinberg_formula():
    # n=2, r=1: value at (k) is (1/2)^k u^{-k} for k >= 0, zero for k < 0
    xi = Scalar.rational(1, 2)
    for k in range(4):
        assert essential_value(STEINBERG, (k,)) == xi ** k * u_power(-k)
    assert essential_value(STEINBERG, (-1,)).is_zero()


def test_essential_at_identity_is_one():
    for rep in (STEINBERG, ALL_RAMIFIED, MIXED, UNRAMIFIED3):
        assert essential_value(rep, (0,) * (rep.n - 1)) == Scalar.of(1)


def test_essential_unramified_rep_delegates_to_spherical():
    satake = [Scalar.of(v) for v in (2, 5, 7)]
    for weight in [(0, 0), (1, 0), (2, 1), (3, 3), (5, 2)]:
        assert essential_value(UNRAMIFIED3, weight) \
            == spherical_value(satake, weight + (0,))
    # non-dominant extension vanishes rather than raising
    assert essential_value(UNRAMIFIED3, (0, 1)).is_zero()
    assert essential_value(UNRAMIFIED3, (-1, -2)).is_zero()


def test_essential_mixed_support_pattern():
    # n=5, r=2: coordinates 3 and 4 must be units, coordinate 2 nonnegative
    assert essential_value(MIXED, (2, 1, 0, 0)) != Scalar.of(0)
    assert essential_value(MIXED, (2, 1, 1, 0)).is_zero()
    assert essential_value(MIXED, (2, 1, 0, -1)).is_zero()
    assert essential_value(MIXED, (2, -1, 0, 0)).is_zero()
    assert essential_value(MIXED, (1, 2, 0, 0)).is_zero()


def test_essential_rank_mismatch():
    with pytest.raises(BadRank):
        essential_value(STEINBERG, (1, 0))


# --- beta coordinates ---------------------------------------------------------------

def test_beta_to_diag_examples():
    assert beta_to_diag((0, 0, 0)) == (0, 0, 0)
    assert beta_to_diag((1, 0)) == (1, 0)
    assert beta_to_diag((1, 1, 1)) == (3, 2, 1)


@pytest.mark.parametrize("rep", [STEINBERG, ALL_RAMIFIED, MIXED])
def test_beta_formula_matches_diagonal_formula(rep):
    rng = random.Random(11)
    m = rep.n - 1
    for _ in range(150):
        z = tuple(rng.randint(-3, 4) for _ in range(m))
        assert essential_value_beta(rep, z) == essential_value(rep, beta_to_diag(z)), z


def test_beta_formula_restricted_to_ramified_reps():
    with pytest.raises(BadRank):
        essential_value_beta(UNRAMIFIED3, (1, 0))
