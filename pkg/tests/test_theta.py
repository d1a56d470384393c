"""Tests for the theta constant, its transformation, and the exact
two-squares coefficient machinery."""

import math

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from striphilbert import (
    DomainError,
    Nome,
    NomeOutOfRange,
    NonPositiveX,
    TolTooSmall,
    TooLarge,
    TruncationBudget,
    divisor_excess,
    r2_bruteforce,
    theta3,
    theta3_excess,
    theta3_fast,
    two_squares_coefficient_check,
)

# Frozen oracle values (50-digit mpmath, independent of the package):
# theta3(0, e^-pi) agrees with the closed form pi^(1/4)/Gamma(3/4).
THETA3_E_PI = 1.0864348112133080145753161215
THETA3_HALF = 2.1289368272118771586694590086
THETA3_E_10 = 1.0000907998595249781997783

SQRT_100PI = 17.724538509055160272981674833


def brute_theta3(q, terms):
    """Direct partial summation oracle, highest terms first."""
    return 1.0 + 2.0 * math.fsum(q ** (n * n) for n in range(terms, 0, -1))


class TestTheta3:
    def test_zero_nome(self):
        value, budget = theta3(0.0, 1e-12)
        assert value == 1.0
        assert budget.terms_used == 0
        assert budget.tail_bound == 0.0

    def test_classical_point(self):
        # oracle: 30-term direct partial sum at q = e^-pi
        q = math.exp(-math.pi)
        oracle = brute_theta3(q, 30)
        assert oracle == pytest.approx(THETA3_E_PI, abs=1e-15)
        value, budget = theta3(q, 1e-14)
        assert value == pytest.approx(oracle, abs=1e-14)
        assert budget.tail_bound <= 1e-14

    def test_half_nome_against_extended_precision(self):
        # oracle: 50-term summation carried out in 50-digit arithmetic
        with mp.workdps(50):
            oracle = float(1 + 2 * mp.fsum(mp.mpf("0.5") ** (n * n) for n in range(1, 51)))
        assert oracle == pytest.approx(THETA3_HALF, abs=1e-15)
        value, _ = theta3(0.5, 1e-14)
        assert value == pytest.approx(oracle, abs=1e-14)

    def test_budget_honours_tolerance(self):
        for tol in (1e-3, 1e-8, 1e-14):
            value, budget = theta3(0.5, tol)
            assert budget.tail_bound <= tol
            assert abs(value - THETA3_HALF) <= tol + 1e-15

    def test_value_at_least_one(self):
        for q in (0.0, 1e-10, 0.3, 0.9, 0.99):
            value, _ = theta3(q, 1e-12)
            assert value >= 1.0

    def test_nome_validation(self):
        for bad in (-0.1, 1.0, 1.5, math.nan):
            with pytest.raises(NomeOutOfRange):
                theta3(bad, 1e-12)

    def test_tol_too_small(self):
        with pytest.raises(TolTooSmall):
            theta3(0.5, 1e-17)
        with pytest.raises(DomainError):
            theta3(0.5, 0.0)

    def test_accepts_nome_wrapper(self):
        value, _ = theta3(Nome(0.25), 1e-12)
        assert value == pytest.approx(brute_theta3(0.25, 40), abs=1e-13)


class TestTheta3Excess:
    def test_zero_nome(self):
        assert theta3_excess(0.0, 1e-12) == 0.0

    def test_tiny_nome_leading_term(self):
        # q = e^{-pi^2/0.1}: the n=1 term dominates the rest by ~e^{-296}
        q = math.exp(-(math.pi**2) / 0.1)
        got = theta3_excess(q, 1e-12)
        assert got == pytest.approx(2.0 * q, rel=1e-15)
        assert got > 0.0

    def test_consistency_with_theta3(self):
        value, _ = theta3(0.5, 1e-14)
        excess = theta3_excess(0.5, 1e-14)
        assert excess == pytest.approx(value - 1.0, rel=1e-15)

    def test_bracketing_bounds(self):
        for q in (0.1, 0.3, 0.5, 0.7, 0.9):
            excess = theta3_excess(q, 1e-14)
            assert 2.0 * q < excess <= 2.0 * q / (1.0 - q**3)


class TestTheta3Fast:
    def test_self_dual_point(self):
        assert theta3_fast(math.pi, 1e-14) == pytest.approx(THETA3_E_PI, abs=1e-14)

    def test_small_x_transformation(self):
        # sqrt(pi/x) with a dual correction below 1e-300
        assert theta3_fast(0.01, 1e-12) == pytest.approx(SQRT_100PI, rel=1e-15)

    def test_large_x_direct(self):
        assert theta3_fast(10.0, 1e-14) == pytest.approx(THETA3_E_10, abs=1e-14)

    def test_agrees_with_direct_summation(self):
        for x in (0.5, 1.0, 2.0, 3.0, 5.0):
            direct = brute_theta3(math.exp(-x), 60)
            assert theta3_fast(x, 1e-13) == pytest.approx(direct, abs=1e-12)

    def test_positive_x_required(self):
        for bad in (0.0, -1.0, math.nan):
            with pytest.raises(NonPositiveX):
                theta3_fast(bad, 1e-12)


class TestTransformationResidual:
    def test_residual_scan(self):
        # x theta3(e^-x)^2 = pi theta3(e^-pi^2/x)^2, both by direct summation
        for i in range(40):
            x = 0.5 + (20.0 - 0.5) * i / 39
            lhs = x * brute_theta3(math.exp(-x), 80) ** 2
            rhs = math.pi * brute_theta3(math.exp(-math.pi**2 / x), 80) ** 2
            assert abs(lhs - rhs) <= 1e-12 * rhs


class TestIntegerOracles:
    def test_r2_small_values(self):
        # independent oracle: full box enumeration over both coordinates
        def box_count(n):
            root = math.isqrt(n)
            return sum(
                1
                for a in range(-root, root + 1)
                for b in range(-root, root + 1)
                if a * a + b * b == n
            )

        assert r2_bruteforce(0) == 1
        assert r2_bruteforce(1) == 4
        assert r2_bruteforce(3) == 0
        assert r2_bruteforce(25) == 12
        for n in range(0, 120):
            assert r2_bruteforce(n) == box_count(n)

    def test_divisor_excess_small_values(self):
        # independent oracle: trial division over every candidate divisor
        def trial(n):
            total = 0
            for d in range(1, n + 1):
                if n % d == 0:
                    total += 1 if d % 4 == 1 else (-1 if d % 4 == 3 else 0)
            return total

        assert divisor_excess(1) == 1
        assert divisor_excess(3) == 0
        assert divisor_excess(5) == 2
        for n in range(1, 200):
            assert divisor_excess(n) == trial(n)

    def test_guards(self):
        with pytest.raises(TooLarge):
            r2_bruteforce(10**6 + 1)
        with pytest.raises(TooLarge):
            divisor_excess(10**6 + 1)
        with pytest.raises(DomainError):
            r2_bruteforce(-1)
        with pytest.raises(DomainError):
            divisor_excess(0)


class TestTwoSquaresCheck:
    def test_degree_one(self):
        report = two_squares_coefficient_check(1)
        assert report.passed
        assert report.residual == 0.0
        assert r2_bruteforce(1) == 4 * divisor_excess(1) == 4

    def test_degree_three(self):
        assert two_squares_coefficient_check(3).passed
        assert r2_bruteforce(3) == 4 * divisor_excess(3) == 0

    def test_two_hundred_degrees_exact(self):
        report = two_squares_coefficient_check(200)
        assert report.passed
        assert report.computed == 0
        assert report.tolerance == 0.0

    def test_guard(self):
        with pytest.raises(TooLarge):
            two_squares_coefficient_check(10**4 + 1)
        with pytest.raises(DomainError):
            two_squares_coefficient_check(0)


class TestBudgetInvariants:
    def test_budget_validation(self):
        with pytest.raises(DomainError):
            TruncationBudget(tol=1e-12, terms_used=3, tail_bound=1e-11)
        with pytest.raises(DomainError):
            TruncationBudget(tol=-1.0, terms_used=0, tail_bound=0.0)


@settings(max_examples=80, deadline=None)
@given(
    q1=st.floats(min_value=0.0, max_value=0.995, exclude_max=True),
    q2=st.floats(min_value=0.0, max_value=0.995, exclude_max=True),
)
def test_strict_monotonicity_in_nome(q1, q2):
    lo, hi = sorted((q1, q2))
    if hi - lo < 1e-12:
        return
    v_lo, _ = theta3(lo, 1e-13)
    v_hi, _ = theta3(hi, 1e-13)
    assert v_lo < v_hi


@settings(max_examples=80, deadline=None)
@given(q=st.floats(min_value=1e-6, max_value=0.99))
def test_bounds_property(q):
    value, _ = theta3(q, 1e-13)
    assert 1.0 + 2.0 * q <= value * (1.0 + 1e-14)
    assert value <= (1.0 + 2.0 * q / (1.0 - q)) * (1.0 + 1e-14)
