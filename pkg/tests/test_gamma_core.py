"""Unit tests for the scalar gamma kernel."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from turancheck.gamma_core import (
    GammaArgument,
    digamma,
    gamma_exact,
    gamma_ratio,
    ln_gamma,
    pochhammer,
    pochhammer_rational,
    recip_gamma,
)

EULER_GAMMA = 0.5772156649015328606


def rel_err(x, y):
    return abs(x - y) / max(abs(x), abs(y), 1e-300)


class TestLnGamma:
    def test_frozen_value(self):
        # reference: 30-digit evaluation of log Gamma(4.2)
        assert rel_err(ln_gamma(4.2), 2.0485556369605900) < 1e-14

    def test_positive_integers(self):
        for n in range(1, 15):
            assert rel_err(math.exp(ln_gamma(n)), math.factorial(n - 1)) < 1e-13

    @pytest.mark.parametrize("x", [0.0, -1.0, -0.5])
    def test_rejects_nonpositive(self, x):
        with pytest.raises(ValueError):
            ln_gamma(x)


class TestRecipGamma:
    def test_frozen_values(self):
        # references: 30-digit evaluations of 1/Gamma
        assert rel_err(recip_gamma(3.7), 0.2397706765846766) < 1e-13
        assert rel_err(recip_gamma(-0.5), -0.2820947917738781) < 1e-13
        assert rel_err(recip_gamma(-2.3), -0.6910337159283093) < 1e-13
        assert rel_err(recip_gamma(0.5), 1.0 / math.sqrt(math.pi)) < 1e-13

    def test_exact_zeros_at_nonpositive_integers(self):
        for k in range(21):
            assert recip_gamma(-float(k)) == 0.0

    def test_inverse_of_ln_gamma(self):
        x = 0.125
        while x <= 50.0:
            assert abs(recip_gamma(x) * math.exp(ln_gamma(x)) - 1.0) < 1e-12
            x += 0.375

    def test_sign_alternates_between_poles(self):
        # Gamma is negative on (-1, 0), positive on (-2, -1), ...
        assert recip_gamma(-0.5) < 0
        assert recip_gamma(-1.5) > 0
        assert recip_gamma(-2.5) < 0

    def test_reflection_consistency(self):
        # 1/Gamma(x) * 1/Gamma(1-x) = sin(pi x)/pi
        for x in (-1.7, -0.3, 0.25, 0.75):
            lhs = recip_gamma(x) * recip_gamma(1.0 - x)
            assert abs(lhs - math.sin(math.pi * x) / math.pi) < 1e-13


class TestDigamma:
    def test_frozen_values(self):
        # references: 30-digit evaluations of psi
        assert rel_err(digamma(0.3), -3.5025242222001331) < 1e-13
        assert rel_err(digamma(7.5), 1.9467574842460868) < 1e-13
        assert rel_err(digamma(1.0), -EULER_GAMMA) < 1e-13

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            digamma(0.0)
        with pytest.raises(ValueError):
            digamma(-2.5)

    @given(st.floats(min_value=0.01, max_value=50.0, allow_nan=False))
    @settings(max_examples=60, deadline=None)
    def test_recurrence(self, x):
        assert abs(digamma(x + 1.0) - digamma(x) - 1.0 / x) < 1e-11 * max(1.0, 1.0 / x)

    def test_half_integer_closed_form(self):
        # psi(1/2) = -gamma - 2 ln 2
        assert rel_err(digamma(0.5), -EULER_GAMMA - 2.0 * math.log(2.0)) < 1e-13


class TestPochhammer:
    def test_basic(self):
        assert pochhammer(3.0, 0) == 1.0
        assert pochhammer(3.0, 4) == 3.0 * 4.0 * 5.0 * 6.0
        assert pochhammer_rational(Fraction(1, 2), 3) == Fraction(15, 8)

    def test_rejects_negative_order(self):
        with pytest.raises(ValueError):
            pochhammer(1.0, -1)
        with pytest.raises(ValueError):
            pochhammer_rational(1, -2)

    @given(
        st.fractions(min_value=-5, max_value=5, max_denominator=6),
        st.integers(min_value=0, max_value=8),
        st.integers(min_value=0, max_value=8),
    )
    @settings(max_examples=80, deadline=None)
    def test_additivity(self, x, m, n):
        # (x)_{m+n} = (x)_m (x+m)_n
        lhs = pochhammer_rational(x, m + n)
        rhs = pochhammer_rational(x, m) * pochhammer_rational(x + m, n)
        assert lhs == rhs

    def test_float_matches_rational(self):
        for x, n in ((Fraction(3, 4), 5), (Fraction(-5, 2), 6)):
            assert rel_err(pochhammer(float(x), n), float(pochhammer_rational(x, n))) < 1e-13


class TestGammaRatio:
    def test_integer_shift_is_pochhammer(self):
        assert rel_err(gamma_ratio(2.5, 3.0), 2.5 * 3.5 * 4.5) < 1e-13

    def test_monotone_in_shift(self):
        vals = [gamma_ratio(1.5, alpha) for alpha in (0.0, 0.5, 1.0, 2.0, 4.0)]
        assert vals == sorted(vals)
        assert vals[0] == 1.0

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            gamma_ratio(0.0, 1.0)
        with pytest.raises(ValueError):
            gamma_ratio(1.0, -0.5)


class TestGammaExact:
    def test_values(self):
        assert gamma_exact(1) == 1
        assert gamma_exact(5) == 24
        assert gamma_exact(Fraction(7)) == 720

    @pytest.mark.parametrize("x", [Fraction(1, 2), 0, -3])
    def test_rejects_non_positive_integer(self, x):
        with pytest.raises(ValueError):
            gamma_exact(x)


def test_gamma_argument_pole_flag():
    assert GammaArgument(0.0).pole_flag
    assert GammaArgument(-3.0).pole_flag
    assert not GammaArgument(0.5).pole_flag
    assert not GammaArgument(2.0).pole_flag
