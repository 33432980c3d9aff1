"""Coefficient families: frozen values, recurrences, duals, saddle engine."""

from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mp

from ramasym.coefficients import (SaddleData, U_coeff, alpha_s, beta,
                                  check_conjecture, gamma_coeff, gamma_zero,
                                  psi, psi_zero, rho, rho_zero, tau, tau_zero)
from ramasym.numcore import GaussianRational
from ramasym.polys import PolyV, PolyW, RationalFnW, Sqrt2Scaled, binomial_poly

fracs = st.fractions(
    min_value=Fraction(-4), max_value=Fraction(4), max_denominator=12)

V = PolyV.variable()


class TestFrozenRho:
    def test_values_at_zero(self):
        expected = [Fraction(1, 3), Fraction(4, 135), Fraction(-8, 2835),
                    Fraction(-16, 8505), Fraction(8992, 12629925)]
        for r, want in enumerate(expected):
            assert rho(r)(Fraction(0)) == want
            assert rho_zero(r) == want

    def test_polynomials(self):
        one = PolyV([1])
        assert rho(0) == Fraction(1, 3) * one - V
        assert rho(1) == Fraction(4, 135) * one \
            - Fraction(1, 3) * V * V * (V + one)
        inner = 9 * V ** 4 - 15 * V * V - 2 * V + 4 * one
        assert rho(2) == Fraction(-8, 2835) * one \
            - Fraction(1, 135) * V * inner


class TestFrozenPsi:
    def test_values_at_zero(self):
        assert psi(0)(Fraction(0)) == Fraction(-1, 3)
        assert psi(1)(Fraction(0)) == Fraction(4, 135)
        assert psi(2)(Fraction(0)) == Fraction(8, 2835)
        for r in range(3):
            assert psi_zero(r) == psi(r)(Fraction(0))

    def test_polynomials(self):
        one = PolyV([1])
        assert psi(0) == Fraction(-1, 3) * one - V
        assert psi(1) == Fraction(4, 135) * one \
            + Fraction(1, 3) * V * (V + one) ** 2
        inner = 9 * V ** 4 + 45 * V ** 3 + 75 * V * V + 47 * V + 8 * one
        assert psi(2) == Fraction(8, 2835) * one - Fraction(1, 135) * V * inner


class TestFrozenU:
    def test_symbolic_strings(self):
        assert str(U_coeff(0)) == "1/(1-w)"
        assert str(U_coeff(1)) == "-w/(1-w)^3 - v*w/(1-w)^2"
        assert str(U_coeff(2)) == ("(w + 2*w^2)/(1-w)^5"
                                   " + v*(2*w + w^2)/(1-w)^4"
                                   " + v^2*w/(1-w)^3")

    @given(fracs.filter(lambda w: w != 1), fracs)
    def test_u2_pointwise(self, w, v):
        got = U_coeff(2)(w, v)
        d = 1 - w
        want = w * (2 * w + 1) / d ** 5 + v * w * (w + 2) / d ** 4 \
            + v * v * w / d ** 3
        assert got == want


class TestRecurrences:
    @pytest.mark.parametrize("family", [rho, gamma_coeff])
    def test_polynomial_recurrence(self, family):
        assert family(0, "plain") == family(0, "tilde")
        for r in range(1, 7):
            assert family(r, "plain") \
                == family(r, "tilde") + V * family(r - 1, "tilde")

    @given(st.integers(1, 5), fracs.filter(lambda w: w != 1), fracs)
    @settings(max_examples=30, deadline=None)
    def test_u_recurrence_pointwise(self, r, w, v):
        lhs = U_coeff(r)(w, v)
        rhs = U_coeff(r, "tilde")(w, v) + v * U_coeff(r - 1, "tilde")(w, v)
        assert lhs == rhs


class TestScalarDuals:
    def test_rho_both_modes(self):
        for r in range(9):
            assert rho_zero(r, "plain") == rho(r, "plain")(Fraction(0))
            assert rho_zero(r, "tilde") == rho(r, "tilde")(Fraction(0))

    def test_gamma_mode_independent_at_zero(self):
        for r in range(9):
            val = gamma_coeff(r)(Fraction(0))
            assert gamma_zero(r, "plain") == val
            assert gamma_zero(r, "tilde") == val

    def test_tau_and_psi(self):
        for r in range(9):
            assert tau_zero(r) == tau(r)(Fraction(0))
            assert psi_zero(r) == psi(r)(Fraction(0))

    def test_gamma_known_values(self):
        assert gamma_zero(0) == 1
        assert gamma_zero(1) == Fraction(1, 12)
        assert gamma_zero(2) == Fraction(1, 288)
        assert gamma_zero(3) == Fraction(-139, 51840)


class TestStirlingSeriesFit:
    """Numeric cross-check of gamma_r(0) against factorial asymptotics.

    f(n) = n! / (sqrt(2 pi n) (n/e)^n) is computed at high precision for
    two large n, and Richardson extrapolation of n*(f(n)-1) pins the 1/n
    coefficient without using any library code under test.
    """

    @staticmethod
    def _f(n):
        return mp.factorial(n) / (mp.sqrt(2 * mp.pi * n)
                                  * mp.power(n, n) * mp.exp(-n))

    def test_first_two_coefficients(self):
        with mp.workprec(400):
            n = 4000
            g1 = [(self._f(m) - 1) * m for m in (n, 2 * n)]
            fit1 = 2 * g1[1] - g1[0]
            assert abs(fit1 - mp.mpf(1) / 12) < mp.mpf(10) ** -8
            c1 = Fraction(1, 12)
            g2 = [((self._f(m) - 1) - mp.mpf(c1.numerator)
                   / (c1.denominator * m)) * m * m for m in (n, 2 * n)]
            fit2 = 2 * g2[1] - g2[0]
            assert abs(fit2 - mp.mpf(1) / 288) < mp.mpf(10) ** -5
        assert gamma_coeff(1)(Fraction(0)) == Fraction(1, 12)
        assert gamma_coeff(2)(Fraction(0)) == Fraction(1, 288)


class TestBeta:
    def test_parity_of_sqrt2_power(self):
        for s in range(8):
            assert beta(s).half_pow == s - 1

    def test_gamma_anchor(self):
        # beta at even index 2r recovers gamma_r after the factorial rescale
        for r in range(5):
            scale = Sqrt2Scaled(
                PolyV.const(Fraction(factorial(2 * r),
                                     4 ** r * factorial(r))), 1)
            assert (beta(2 * r) * scale).to_polyv() == gamma_coeff(r)

    def test_rho_anchor(self):
        # rho_r = delta_{r,0} - r! * beta at odd index 2r+1 (even sqrt2 power)
        for r in range(6):
            delta = PolyV([1]) if r == 0 else PolyV()
            assert delta - factorial(r) * beta(2 * r + 1).to_polyv() == rho(r)


class TestUModes:
    @pytest.mark.parametrize("mode", ["tilde", "vzero_harmonic",
                                      "vzero_factorial", "eulerian"])
    def test_all_modes_agree_at_v_zero(self, mode):
        w = Fraction(2, 5)
        for r in range(6):
            assert U_coeff(r, mode)(w, Fraction(0)) \
                == U_coeff(r)(w, Fraction(0)), (mode, r)

    def test_vzero_modes_are_v_independent(self):
        u = U_coeff(3, "vzero_harmonic")
        assert u.max_v_degree() == 0

    def test_taylor_mode_sections(self):
        for r in range(4):
            exact = U_coeff(r).taylor_at_zero(9)
            tay = U_coeff(r, "taylor", taylor_terms=9)
            for j in range(9):
                assert tay.num.coeff(j)(Fraction(0)) == exact[j](Fraction(0))

    def test_taylor_mode_needs_terms(self):
        with pytest.raises(ValueError):
            U_coeff(2, "taylor")

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            U_coeff(2, "fancy")

    def test_gaussian_evaluation(self):
        w = GaussianRational(Fraction(1, 2), Fraction(1, 2))
        got = U_coeff(1)(w, Fraction(1))
        d = 1 - w
        want = -w / d ** 3 - w / d ** 2
        assert got == want


class TestConjecture:
    def test_small_range(self):
        report = check_conjecture(10)
        assert report.all_equal
        assert len(report.rows) == 11
        for row in report.rows:
            assert row.psi_value == row.expected
            assert row.expected == -((-1) ** row.r) * rho_zero(row.r)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            check_conjecture(-1)


class TestSaddle:
    @staticmethod
    def _beta_data():
        return SaddleData(
            mu=2, a=Fraction(1),
            p=lambda j: Fraction((-1) ** j, j + 2),
            q=lambda j: binomial_poly(j),
            tag="test-beta")

    def test_reproduces_beta(self):
        data = self._beta_data()
        for s in range(5):
            a = alpha_s(data, s)
            assert Sqrt2Scaled(a.factor, s + 1) == beta(s)

    def test_fractional_exponent_refuses_assembly(self):
        a = alpha_s(self._beta_data(), 1)    # exponent -(1+1)/2 = -1: ok
        assert a.exponent == -1
        b = alpha_s(self._beta_data(), 2)    # exponent -3/2: fractional
        with pytest.raises(ValueError):
            b.assembled()

    def test_reproduces_u(self):
        one = RationalFnW(PolyW([1]), 0)
        wfn = RationalFnW(PolyW.w_monomial(1, 1), 0)

        def p(j):
            if j == 0:
                return RationalFnW(PolyW([-1, 1]), 0)
            return Fraction((-1) ** (j + 1), j + 1) * one

        data = SaddleData(mu=1, a=Fraction(1), p=p,
                          q=lambda j: binomial_poly(j), tag="test-u")
        for r in range(4):
            a = alpha_s(data, r)
            delta = one if r == 0 else RationalFnW(PolyW(), 0)
            got = delta - wfn * (factorial(r) * a.assembled())
            assert got == U_coeff(r), r

    def test_input_validation(self):
        data = self._beta_data()
        with pytest.raises(ValueError):
            alpha_s(data, -1)
        bad = SaddleData(mu=0, a=Fraction(1), p=data.p, q=data.q, tag="bad")
        with pytest.raises(ValueError):
            alpha_s(bad, 1)
