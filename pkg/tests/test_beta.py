"""Tests for the strip kernel and the half-period value routes."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from striphilbert import (
    DomainError,
    NonPositiveX,
    SingularPoint,
    StripGeometry,
    TolTooSmall,
    beta_half_excess,
    beta_half_lambert,
    beta_half_raw,
    beta_half_theta,
    beta_kernel_line1,
    beta_kernel_line2,
    limit_identity_check,
    raw_summand_cosh,
    raw_summand_exponential,
    raw_summand_product,
)

TWO_PI = 2.0 * math.pi

# Frozen oracle values (50-digit mpmath):
BETA_AT_PI = 1.1803405990160962260453380  # theta3(0, e^-pi)^2
BETA_AT_4 = 1.3682294188823125294631690
BETA_AT_HALF = 1.0000000107011519929260
EXCESS_AT_1 = 2.0690344596724215316545740e-4
BETA_AT_PI2_OVER_2 = 1.6163092660418822922670  # kernel value at (pi/2, d=1)
KERNEL_AT_1E3_D1 = 2000.0006449336906511700
KERNEL_AT_1_D1 = 2.4253767616661239382850
LOG10_EXCESS_AT_01 = -42.261087308283608104240
LOG10_EXCESS_AT_001 = -428.02941300478774255630
LOG10_EXCESS_AT_1 = -3.6842322761196911656380

CHECKPOINTS = (0.25, 0.5, 1.0, 2.0, math.pi, 5.0, 10.0)


class TestStripGeometry:
    def test_from_depth(self):
        g = StripGeometry.from_depth(1.0)
        assert g.x == pytest.approx(math.pi**2 / 2.0, rel=1e-16)
        assert g.q == pytest.approx(math.exp(-2.0), rel=1e-16)
        assert abs(g.x * 2.0 * g.d - math.pi**2) <= 1e-15 * math.pi**2

    def test_from_half_period_round_trip(self):
        for x in (0.1, 1.0, math.pi, 17.3):
            g = StripGeometry.from_half_period(x)
            assert g.x == x
            assert abs(g.x * 2.0 * g.d - math.pi**2) <= 1e-15 * math.pi**2
            assert g.q == pytest.approx(math.exp(-(math.pi**2) / x), rel=1e-15)

    def test_validation(self):
        with pytest.raises(DomainError):
            StripGeometry.from_depth(0.0)
        with pytest.raises(NonPositiveX):
            StripGeometry.from_half_period(-1.0)


class TestKernelLine1:
    def test_oddness_exact(self):
        g = StripGeometry.from_depth(1.0)
        for s in (0.3, 1.0, 2.0, 5.5):
            assert beta_kernel_line1(-s, g) == -beta_kernel_line1(s, g)

    def test_matches_theta_route_at_quarter_period(self):
        # s = pi/2, d = pi/2 means x = pi: value is theta3(0, e^-pi)^2
        g = StripGeometry.from_depth(math.pi / 2.0)
        got = beta_kernel_line1(math.pi / 2.0, g, 1e-12)
        assert got == pytest.approx(BETA_AT_PI, abs=1e-12)
        assert got == pytest.approx(beta_half_theta(math.pi), abs=1e-12)

    def test_frozen_value_d1(self):
        g = StripGeometry.from_depth(1.0)
        assert beta_kernel_line1(1.0, g, 1e-12) == pytest.approx(KERNEL_AT_1_D1, rel=1e-14)

    def test_near_singularity_leading_pole(self):
        g = StripGeometry.from_depth(1.0)
        got = beta_kernel_line1(1e-3, g, 1e-11)
        assert got == pytest.approx(2.0 / 1e-3, rel=0.01)
        assert got == pytest.approx(KERNEL_AT_1E3_D1, rel=1e-13)

    def test_singular_points_rejected(self):
        g = StripGeometry.from_depth(1.0)
        for s in (0.0, TWO_PI, -TWO_PI):
            with pytest.raises(SingularPoint):
                beta_kernel_line1(s, g)

    def test_out_of_window_rejected(self):
        g = StripGeometry.from_depth(1.0)
        with pytest.raises(DomainError):
            beta_kernel_line1(TWO_PI + 0.5, g)

    def test_tol_too_small_near_pole(self):
        # kernel is ~2e6 here, so an absolute 1e-12 is below its ulp
        g = StripGeometry.from_depth(1.0)
        with pytest.raises(TolTooSmall):
            beta_kernel_line1(1e-6, g, 1e-12)


class TestKernelLine2:
    def test_bare_term_at_zero_images(self):
        g = StripGeometry.from_depth(1.0)
        s = math.pi / 2.0
        want = -s / 1.0 + math.pi / math.tanh(math.pi * s / 2.0)
        assert beta_kernel_line2(s, g, 0) == pytest.approx(want, rel=1e-15)

    def test_converges_to_line1(self):
        g = StripGeometry.from_depth(1.0)
        line1 = beta_kernel_line1(math.pi / 2.0, g, 1e-12)
        assert beta_kernel_line2(math.pi / 2.0, g, 50) == pytest.approx(line1, abs=1e-10)
        # convergence is geometric: successive partial sums stabilise fast
        assert beta_kernel_line2(math.pi / 2.0, g, 200) == pytest.approx(line1, abs=1e-13)

    def test_two_pi_shift_telescopes(self):
        # value at s+2pi with N terms minus value at s with N-1 terms equals
        # the two boundary summands exposed by reindexing the symmetric sum
        for d in (1.0, 25.0):
            g = StripGeometry.from_depth(d)
            s, n = 1.0, 20
            c = math.pi / (2.0 * d)
            boundary = -TWO_PI / d + (math.pi / d) * (
                1.0 / math.tanh(c * (s + TWO_PI * (n + 1)))
                + 1.0 / math.tanh(c * (s + TWO_PI * n))
            )
            diff = beta_kernel_line2(s + TWO_PI, g, n) - beta_kernel_line2(s, g, n - 1)
            assert diff == pytest.approx(boundary, abs=1e-13)

    def test_periodicity_of_limit(self):
        g = StripGeometry.from_depth(1.0)
        a = beta_kernel_line2(1.0, g, 400)
        b = beta_kernel_line2(1.0 + TWO_PI, g, 400)
        assert a == pytest.approx(b, abs=1e-12)

    def test_singular_points_rejected(self):
        g = StripGeometry.from_depth(1.0)
        with pytest.raises(SingularPoint):
            beta_kernel_line2(2.0 * TWO_PI, g, 10)


class TestHalfPeriodRoutes:
    def test_raw_at_pi(self):
        assert beta_half_raw(math.pi, 1e-13) == pytest.approx(BETA_AT_PI, abs=1e-13)

    def test_raw_flat_region(self):
        # true excess at x=0.1 is ~5e-43, so the double value is exactly 1
        assert beta_half_raw(0.1, 1e-13) == pytest.approx(1.0, abs=5e-14)

    def test_raw_at_4(self):
        assert beta_half_raw(4.0, 1e-13) == pytest.approx(BETA_AT_4, abs=1e-12)

    def test_lambert_matches_raw_and_theta(self):
        assert beta_half_lambert(math.pi, 1e-13) == pytest.approx(
            beta_half_raw(math.pi, 1e-13), abs=1e-12
        )
        assert beta_half_lambert(1.0, 1e-13) == pytest.approx(beta_half_theta(1.0), abs=1e-12)

    def test_lambert_large_x_one_term(self):
        x = 30.0
        want = (x / math.pi) * (1.0 + 4.0 * math.exp(-x))
        assert beta_half_lambert(x, 1e-13) == pytest.approx(want, rel=1e-13)

    def test_theta_frozen_values(self):
        assert beta_half_theta(math.pi) == pytest.approx(BETA_AT_PI, abs=5e-15)
        assert beta_half_theta(4.0) == pytest.approx(BETA_AT_4, abs=5e-15)
        assert beta_half_theta(0.5) == pytest.approx(BETA_AT_HALF, abs=5e-15)

    def test_theta_limit_from_above(self):
        assert beta_half_theta(0.01) == 1.0  # excess ~1e-428, below resolution
        assert beta_half_excess(0.01).log10_excess < -400.0

    def test_three_way_agreement(self):
        for x in CHECKPOINTS:
            theta_route = beta_half_theta(x)
            assert abs(beta_half_raw(x, 1e-12) - theta_route) <= 1e-10
            assert abs(beta_half_lambert(x, 1e-12) - theta_route) <= 1e-10

    def test_domain_errors(self):
        for bad in (0.0, -2.0, math.nan):
            with pytest.raises(NonPositiveX):
                beta_half_raw(bad, 1e-12)
            with pytest.raises(NonPositiveX):
                beta_half_lambert(bad, 1e-12)
            with pytest.raises(NonPositiveX):
                beta_half_theta(bad)
            with pytest.raises(NonPositiveX):
                beta_half_excess(bad)
        with pytest.raises(TolTooSmall):
            beta_half_raw(1.0, 1e-17)


class TestExcess:
    def test_forty_two_digit_flatness(self):
        result = beta_half_excess(0.1)
        assert result.log10_excess == pytest.approx(LOG10_EXCESS_AT_01, abs=1e-9)
        assert -42.5 <= result.log10_excess <= -42.0
        assert result.excess is not None
        assert result.excess == pytest.approx(10.0**LOG10_EXCESS_AT_01, rel=1e-9)

    def test_below_normal_range_reports_log_only(self):
        result = beta_half_excess(0.01)
        assert result.excess is None
        assert result.log10_excess == pytest.approx(LOG10_EXCESS_AT_001, abs=1e-9)

    def test_moderate_values(self):
        r1 = beta_half_excess(1.0)
        assert r1.excess == pytest.approx(EXCESS_AT_1, rel=1e-12)
        assert r1.log10_excess == pytest.approx(LOG10_EXCESS_AT_1, abs=1e-12)
        r_pi = beta_half_excess(math.pi)
        assert r_pi.excess == pytest.approx(BETA_AT_PI - 1.0, rel=1e-12)

    def test_always_positive(self):
        for x in (0.02, 0.1, 0.5, 1.0, math.pi, 10.0, 50.0, 300.0):
            result = beta_half_excess(x)
            assert math.isfinite(result.log10_excess)
            if result.excess is not None:
                assert result.excess > 0.0

    def test_consistency_with_direct_value(self):
        for x in (0.5, 1.0, 2.0, math.pi, 7.0):
            result = beta_half_excess(x)
            assert result.excess == pytest.approx(
                10.0**result.log10_excess, rel=1e-12
            )


class TestKernelConsistency:
    def test_convention_pins_half_period_parameter(self):
        # the kernel at s = pi/2 must equal the raw series at x = pi^2/(2d)
        for d in (0.5, 1.0, 2.0, 5.0):
            g = StripGeometry.from_depth(d)
            kernel = beta_kernel_line1(math.pi / 2.0, g, 1e-12)
            adopted = beta_half_raw(math.pi**2 / (2.0 * d), 1e-12)
            assert abs(kernel - adopted) <= 1e-10
        # and the rival reading x = pi^2/d misses by an O(1) margin
        g1 = StripGeometry.from_depth(1.0)
        kernel = beta_kernel_line1(math.pi / 2.0, g1, 1e-12)
        rival = beta_half_raw(math.pi**2, 1e-12)
        assert abs(kernel - rival) > 0.5

    def test_kernel_equals_theta_route_across_depths(self):
        for d in (0.5, 1.0, 2.0, 5.0):
            g = StripGeometry.from_depth(d)
            kernel = beta_kernel_line1(math.pi / 2.0, g, 1e-12)
            assert kernel == pytest.approx(beta_half_theta(g.x), abs=1e-10)


class TestSummandForms:
    def test_termwise_identity(self):
        # difference-to-product rule, checked term by term in its valid range
        for x in (0.5, 1.0, 2.0):
            for n in range(1, 21):
                product_form = raw_summand_product(x, n)
                assert raw_summand_cosh(x, n) == pytest.approx(product_form, rel=1e-13)
                assert raw_summand_exponential(x, n) == pytest.approx(product_form, rel=1e-13)

    def test_exponential_form_survives_overflow_range(self):
        # cosh(720) overflows a double; the factored form stays representable
        import mpmath as mp

        with pytest.raises(OverflowError):
            raw_summand_cosh(180.0, 1)
        value = raw_summand_exponential(180.0, 1)
        with mp.workdps(40):
            oracle = float(2 * mp.sinh(180) / (mp.cosh(720) - mp.cosh(180)))
        assert value > 0.0
        assert value == pytest.approx(oracle, rel=1e-13)


class TestLimitIdentity:
    def test_single_term(self):
        report = limit_identity_check(1)
        assert report.computed == pytest.approx(4.0 - 8.0 / 15.0, rel=1e-15)
        assert report.residual == pytest.approx(abs(4.0 - 8.0 / 15.0 - math.pi), rel=1e-12)
        assert report.tolerance == 0.5
        assert report.passed

    def test_thousand_terms(self):
        report = limit_identity_check(1000)
        assert report.passed
        assert report.residual <= 5e-4

    def test_million_terms(self):
        report = limit_identity_check(10**6)
        assert report.passed
        assert report.residual <= 5e-7

    def test_guard(self):
        with pytest.raises(DomainError):
            limit_identity_check(0)


@settings(max_examples=60, deadline=None)
@given(
    s=st.floats(min_value=1e-3, max_value=TWO_PI - 1e-3),
    d=st.floats(min_value=0.3, max_value=8.0),
)
def test_kernel_oddness_property(s, d):
    g = StripGeometry.from_depth(d)
    assert beta_kernel_line1(-s, g, 1e-10) == -beta_kernel_line1(s, g, 1e-10)


@settings(max_examples=60, deadline=None)
@given(x=st.floats(min_value=0.05, max_value=30.0))
def test_theta_route_at_least_one(x):
    assert beta_half_theta(x) >= 1.0


@settings(max_examples=40, deadline=None)
@given(
    x1=st.floats(min_value=0.05, max_value=20.0),
    x2=st.floats(min_value=0.05, max_value=20.0),
)
def test_excess_monotone_property(x1, x2):
    lo, hi = sorted((x1, x2))
    if hi - lo < 1e-9:
        return
    assert beta_half_excess(lo).log10_excess < beta_half_excess(hi).log10_excess
