"""Discrete summation: point functions, the interval identity, brute-force oracles."""
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gossamer import (
    ClosedFormSum,
    Gossamer,
    Polynomial,
    faulhaber,
    indefinite_sum,
    lower_sum_at_point,
    omega,
    sum_at_point,
    sum_ftc,
    sum_ftc_half_open,
    sum_interval_bruteforce,
    sum_to_integral_bridge,
)
from strategies import polynomials

K = Polynomial.parse("k")
K2 = Polynomial.parse("k^2")

small_polys = st.lists(
    st.fractions(min_value=-9, max_value=9, max_denominator=3), max_size=7
).map(Polynomial)


class TestIndefiniteSum:
    def test_triangular(self):
        assert indefinite_sum(K).point_function == Polynomial(
            (0, Fraction(1, 2), Fraction(1, 2))
        )  # n(n+1)/2

    def test_zero(self):
        assert indefinite_sum(Polynomial()).point_function == Polynomial()

    def test_squares(self):
        assert indefinite_sum(K2).point_function == Polynomial(
            (0, Fraction(1, 6), Fraction(1, 2), Fraction(1, 3))
        )  # (2n^3 + 3n^2 + n) / 6

    def test_invariants_enforced(self):
        with pytest.raises(ValueError):
            ClosedFormSum(K, Polynomial((1, 1)))  # nonzero at 0
        with pytest.raises(ValueError):
            ClosedFormSum(K, Polynomial((0, 1)))  # does not telescope

    @given(small_polys)
    def test_faulhaber_consistency(self, g):
        # Coefficient-for-coefficient agreement with the power-sum forms.
        expected = Polynomial()
        for degree, c in enumerate(g.coefficients):
            expected = expected + c * faulhaber(degree)
        assert indefinite_sum(g).point_function == expected


class TestSumAtPoint:
    def test_hundred(self):
        # Oracle: brute-force loop over 1..100.
        brute = sum(range(1, 101))
        assert sum_at_point(indefinite_sum(K), 100) == brute == 5050

    def test_empty(self):
        assert sum_at_point(indefinite_sum(K), 0) == 0

    def test_infinite(self):
        assert sum_at_point(indefinite_sum(K), omega()) == Gossamer.parse("1/2*w^2 + 1/2*w")

    def test_lower_is_negation(self):
        s = indefinite_sum(K2)
        assert lower_sum_at_point(s, 10) == -sum_at_point(s, 10)


class TestBruteforce:
    def test_examples(self):
        assert sum_interval_bruteforce(K, 3, 10) == 52
        assert sum_interval_bruteforce(K2, 1, 1) == 1
        assert sum_interval_bruteforce(Polynomial.constant(1), -2, 2) == 5

    def test_empty_range_rejected(self):
        with pytest.raises(ValueError):
            sum_interval_bruteforce(K, 3, 2)


class TestSumFtc:
    def test_pinned_example(self):
        result = sum_ftc(K, 3, 10)
        assert result.value == 52
        assert result.oracle_match

    def test_symbolic_upper_endpoint(self):
        value = sum_ftc(K2, 1, omega()).value
        assert value == indefinite_sum(K2).point_function.evaluate(omega())

    def test_triangular_to_infinity(self):
        result = sum_ftc(K, 1, omega())
        assert result.value == Gossamer.parse("1/2*w^2 + 1/2*w")
        assert result.oracle_match  # vacuous for infinite endpoints

    def test_empty_range_rejected(self):
        with pytest.raises(ValueError):
            sum_ftc(K, 11, 10)

    def test_non_integer_endpoint_rejected(self):
        with pytest.raises(ValueError):
            sum_ftc(K, Fraction(1, 2), 10)

    def test_half_open_convention(self):
        # G(b) - G(a) is the sum over a+1..b.
        result = sum_ftc_half_open(K, 3, 10)
        assert result.value == sum_interval_bruteforce(K, 4, 10) == 49
        assert result.oracle_match

    @given(small_polys, st.integers(0, 60), st.integers(0, 60))
    def test_oracle_equivalence(self, g, a, b):
        a, b = min(a, b), max(a, b)
        result = sum_ftc(g, a, b)
        assert result.oracle_match
        assert result.value == sum_interval_bruteforce(g, a, b)

    @given(small_polys, st.integers(0, 40), st.integers(0, 40), st.integers(1, 30))
    def test_additivity(self, g, a, b, gap):
        a, b = min(a, b), max(a, b)
        c = b + gap
        assert (
            sum_ftc(g, a, b).value + sum_ftc(g, b + 1, c).value == sum_ftc(g, a, c).value
        )

    @given(small_polys, st.integers(1, 80))
    def test_telescoping(self, g, n):
        point = indefinite_sum(g).point_function
        assert point.evaluate(Fraction(n)) - point.evaluate(Fraction(n - 1)) == g.evaluate(
            Fraction(n)
        )

    @given(small_polys, st.integers(1, 25))
    def test_infinite_value_specializes(self, g, n):
        # The symbolic value at an infinite endpoint, evaluated at a finite
        # stand-in, reproduces the brute-force sum.
        value = sum_ftc(g, 1, omega()).value
        assert value.at_omega(n) == sum_interval_bruteforce(g, 1, n)


class TestBridge:
    def test_staircase(self):
        result = sum_to_integral_bridge(K, 1, 3)
        assert [result.step.value_at(Fraction(k, 2)) for k in (3, 5, 7)] == [1, 2, 3]
        assert result.integral == 6
        assert result.equal

    def test_unit_box(self):
        result = sum_to_integral_bridge(Polynomial.constant(1), 0, 0)
        assert result.integral == 1
        assert result.equal

    def test_squares(self):
        result = sum_to_integral_bridge(K2, 2, 4)
        assert result.integral == 4 + 9 + 16 == 29
        assert result.equal

    def test_empty_range_rejected(self):
        with pytest.raises(ValueError):
            sum_to_integral_bridge(K, 2, 1)

    @given(small_polys, st.integers(-10, 10), st.integers(0, 8))
    def test_bridge_matches_sum(self, g, a, width):
        result = sum_to_integral_bridge(g, a, a + width)
        assert result.equal
        assert result.integral == sum_interval_bruteforce(g, a, a + width)
