"""Series expansion of the local integrals and the main-identity verifier."""

import random
from fractions import Fraction

import pytest

from whittaker.errors import BadRanks, Unsupported
from whittaker.repdata import UnramifiedLanglandsRep, parse_rep
from whittaker.ringcore import EulerFactor, Scalar, euler_expand
from whittaker.rseng import cauchy_check, l_factor, rs_series, theorem_product, verify_essential
from whittaker.suite import generate_suite, make_pi_prime
from whittaker.symfunc import complete_homogeneous
from whittaker.whitfun import essential_value, spherical_value

STEINBERG = parse_rep({"q": "3", "segments": [
    {"kind": "unramified", "satake": "1/2", "length": 2}]})
ALL_RAMIFIED4 = parse_rep({"q": "2", "segments": [
    {"kind": "ramified", "id": "rho1", "degree": 2, "length": 2}]})
MIXED = parse_rep({"q": "3", "segments": [
    {"kind": "unramified", "satake": "1/2", "length": 2},
    {"kind": "ramified", "id": "rho1", "degree": 2, "length": 1},
    {"kind": "unramified", "satake": "3", "length": 1}]})
RANK2_UNRAM = parse_rep({"q": "3", "segments": [
    {"kind": "unramified", "satake": "2", "length": 2},
    {"kind": "unramified", "satake": "5", "length": 1}]})

W = Scalar.variable("w")


# --- l_factor / theorem_product ------------------------------------------------

def test_l_factor_trivial_for_fully_ramified():
    factor = l_factor(ALL_RAMIFIED4, UnramifiedLanglandsRep((W,)))
    assert factor.roots == ()
    series = euler_expand(factor, 4)
    assert series.coeffs[0] == Scalar.of(1)
    assert all(c.is_zero() for c in series.coeffs[1:])


def test_l_factor_two_tops_one_satake():
    factor = l_factor(MIXED, UnramifiedLanglandsRep((W,)))
    assert factor == EulerFactor([Scalar.rational(1, 2) * W, Scalar.of(3) * W])


def test_l_factor_one_top_two_satake():
    w1, w2 = Scalar.variable("w1"), Scalar.variable("w2")
    factor = l_factor(STEINBERG, UnramifiedLanglandsRep((w1, w2)))
    xi = Scalar.rational(1, 2)
    assert factor == EulerFactor([xi * w1, xi * w2])


def test_theorem_product_multiset_equality():
    w1, w2 = Scalar.variable("w1"), Scalar.variable("w2")
    for rep in (STEINBERG, MIXED, RANK2_UNRAM, ALL_RAMIFIED4):
        pp = UnramifiedLanglandsRep((w1, w2))
        assert theorem_product(rep, pp.satake) == l_factor(rep, pp)


def test_root_count_is_r_times_m():
    rng = random.Random(5)
    for rep in generate_suite(12):
        from whittaker.repdata import compute_piu

        r, _ = compute_piu(rep)
        for m in (1, 2):
            pp = make_pi_prime(m, rng)
            assert l_factor(rep, pp).degree() == r * m


# --- rs_series -------------------------------------------------------------------

def test_rs_series_steinberg_geometric():
    xi = Scalar.rational(1, 2)
    series = rs_series(STEINBERG, UnramifiedLanglandsRep((W,)), 3)
    expected = [(xi * W) ** k for k in range(4)]
    assert list(series.coeffs) == expected


def test_rs_series_fully_ramified_is_constant_one():
    for m in (1, 2, 3):
        pp = UnramifiedLanglandsRep(tuple(Scalar.of(v) for v in range(2, 2 + m)))
        series = rs_series(ALL_RAMIFIED4, pp, 5)
        assert series.coeffs[0] == Scalar.of(1)
        assert all(c.is_zero() for c in series.coeffs[1:])


def test_rs_series_unramified_two_by_one():
    z1, z2 = Scalar.variable("z1"), Scalar.variable("z2")
    series = rs_series(UnramifiedLanglandsRep((z1, z2)), UnramifiedLanglandsRep((W,)), 2)
    assert series.coeffs[1] == (z1 + z2) * W
    for k in range(3):
        assert series.coeffs[k] == complete_homogeneous(k, [z1 * W, z2 * W])
    assert series == euler_expand(EulerFactor([z1 * W, z2 * W]), 2)


def test_rs_series_rank_errors():
    with pytest.raises(BadRanks):
        rs_series(STEINBERG, UnramifiedLanglandsRep((W, W, W)), 3)
    with pytest.raises(Unsupported):
        # equal rank with a ramified left argument is out of scope
        rs_series(STEINBERG, UnramifiedLanglandsRep((W, W)), 3)


# --- verify_essential ----------------------------------------------------------

def test_verify_steinberg_passes():
    report = verify_essential(STEINBERG, UnramifiedLanglandsRep((W,)), 8)
    assert report.passed
    assert report.first_mismatch is None
    assert report.metadata["r"] == 1


def test_verify_fully_ramified_passes_with_both_sides_one():
    pp = UnramifiedLanglandsRep((Scalar.of(2), Scalar.of(3), Scalar.of(5)))
    report = verify_essential(ALL_RAMIFIED4, pp, 8)
    assert report.passed
    assert report.lhs_series.coeffs[0] == Scalar.of(1)
    assert all(c.is_zero() for c in report.lhs_series.coeffs[1:])
    assert report.rhs_series == report.lhs_series


def test_negative_control_indicator_removal():
    # m equal to the unramified rank r >= 2 is the regime where the lattice
    # indicator carries weight; dropping it must break the identity
    pp = UnramifiedLanglandsRep((Scalar.of(7), Scalar.rational(1, 11)))
    good = verify_essential(RANK2_UNRAM, pp, 6)
    assert good.passed
    bad = verify_essential(RANK2_UNRAM, pp, 6, drop_integrality=True)
    assert not bad.passed
    k, lhs_c, rhs_c = bad.first_mismatch
    assert k == 0
    assert lhs_c != rhs_c


def test_negative_control_is_invisible_off_the_critical_rank():
    # off m = r the indicator is redundant: for m > r the spherical factor's
    # dominance forces the lattice condition, for m < r the trailing zeros do
    pp3 = UnramifiedLanglandsRep((Scalar.of(7), Scalar.rational(1, 11), Scalar.of(13)))
    assert verify_essential(MIXED, pp3, 6, drop_integrality=True).passed  # m=3 > r=2
    pp1 = UnramifiedLanglandsRep((Scalar.of(7),))
    assert verify_essential(RANK2_UNRAM, pp1, 6, drop_integrality=True).passed  # m=1 < r=2


def test_verify_rank_precondition():
    with pytest.raises(BadRanks):
        verify_essential(STEINBERG, UnramifiedLanglandsRep((W, W)), 4)


# --- cauchy_check -----------------------------------------------------------------

def test_cauchy_rank_one():
    report = cauchy_check(1, 1, [Scalar.variable("z1")], [Scalar.variable("y1")], 5)
    assert report.passed
    z1y1 = Scalar.variable("z1") * Scalar.variable("y1")
    assert list(report.lhs_series.coeffs) == [z1y1 ** k for k in range(6)]


def test_cauchy_three_by_two_symbolic():
    xs = [Scalar.variable(f"x{i}") for i in range(1, 4)]
    ys = [Scalar.variable(f"y{i}") for i in range(1, 3)]
    assert cauchy_check(3, 2, xs, ys, 6).passed


def test_cauchy_equal_rank_branch():
    xs = [Scalar.variable(f"x{i}") for i in range(1, 3)]
    ys = [Scalar.variable(f"y{i}") for i in range(1, 3)]
    assert cauchy_check(2, 2, xs, ys, 6).passed


def test_cauchy_rank_validation():
    with pytest.raises(BadRanks):
        cauchy_check(1, 2, [Scalar.of(2)], [Scalar.of(3), Scalar.of(5)], 4)


# --- support / finiteness ----------------------------------------------------------

def test_no_nonpartition_weight_contributes():
    # every branch kills weights that are not partitions: non-dominant ones
    # die in the spherical factor, dominant ones with a negative tail die in
    # the embedded left value
    rng = random.Random(3)
    satake = [Scalar.of(v) for v in (2, 5, 7)]
    pp_vals = [Scalar.of(v) for v in (3, Fraction(1, 2))]
    for _ in range(200):
        weight = tuple(rng.randint(-3, 3) for _ in range(2))
        is_partition = weight[0] >= weight[1] >= 0
        if is_partition:
            continue
        dominant = weight[0] >= weight[1]
        if not dominant:
            assert spherical_value(pp_vals, weight).is_zero()
        else:
            # embedded weights acquire trailing zeros, breaking dominance
            assert spherical_value(satake, weight + (0,)).is_zero()
            assert essential_value(MIXED, weight + (0, 0)).is_zero()


# --- symbolic/numeric coherence -----------------------------------------------------

def test_symbolic_verification_coheres_with_numeric_substitution():
    rep = parse_rep({"q": "symbolic", "segments": [
        {"kind": "unramified", "satake": "a1", "length": 2},
        {"kind": "unramified", "satake": "a2", "length": 1}]})
    pp = UnramifiedLanglandsRep((Scalar.variable("w1"),))
    report = verify_essential(rep, pp, 6)
    assert report.passed
    rng = random.Random(17)
    for _ in range(5):
        point = {v: Fraction(rng.choice([x for x in range(-7, 8) if x]),
                             rng.randint(1, 5))
                 for v in ("u", "a1", "a2", "w1")}
        for lc, rc in zip(report.lhs_series.coeffs, report.rhs_series.coeffs):
            assert lc.substitute(point) == rc.substitute(point)
