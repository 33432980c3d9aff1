"""Exact coefficient families for the large-n expansions.

The package's central objects: for the partial sums of e^(nw) split at the
term of index n + v, the expansion coefficients in powers of 1/n are exact
polynomials in the offset v (families rho, gamma, tau, psi) or rational
functions of w with polynomial-in-v numerators (family U).  Each family has
a primary form ("plain", built on the sequence 1/(j+2) or 1/(j+1)) and an
exponential-weight companion ("tilde", built on 1/(j+2)! or 1/(j+1)!),
linked by one-step recurrences in v.

gamma_coeff gives the Stirling-series coefficients of the Gamma function
(gamma_0 = 1, gamma_1(0) = 1/12, gamma_2(0) = 1/288, ...), rho the
correction-term coefficients (rho_0(0) = 1/3), psi the coefficients of the
companion expansion built from the exponential-integral tail, and U the
w-plane interior coefficients U_0 = 1/(1-w).

``alpha_s`` is the generic saddle-point coefficient extractor the families
come from; it works over any coefficient ring (rationals, polynomials,
rational functions) and leaves the possibly fractional power of the leading
series coefficient symbolic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Optional

from .combinat import binomial, double_factorial
from .demoivre import CoeffSequence, demoivre, harmonic, inv_factorial
from .polys import PolyV, PolyW, RationalFnW, Sqrt2Scaled, binomial_poly, \
    w_minus_1_pow

_SEQ_H2 = harmonic(2)
_SEQ_F2 = inv_factorial(2)
_SEQ_H1 = harmonic(1)
_SEQ_F1 = inv_factorial(1)

_POLY_MODES = ("plain", "tilde")


def _check_mode(mode: str) -> None:
    if mode not in _POLY_MODES:
        raise ValueError(f"mode must be one of {_POLY_MODES}")


def _outer_weight(mode: str, m: int, deg: int) -> PolyV:
    """The v-dependent weight of the degree-(deg-m) outer term."""
    if mode == "plain":
        return Fraction((-1) ** m) * binomial_poly(deg - m)
    return PolyV.monomial(deg - m, Fraction(1, factorial(deg - m)))


@lru_cache(maxsize=None)
def beta(s: int, mode: str = "plain") -> Sqrt2Scaled:
    """Raw saddle coefficient of index s, an exact multiple of sqrt(2)^(s-1).

    beta(s) carries the half-integer power 2^((s-1)/2) explicitly; the
    polynomial part is rational.  beta(1).to_polyv() == 2/3.
    """
    _check_mode(mode)
    if s < 0:
        raise ValueError("s must be nonnegative")
    seq = _SEQ_H2 if mode == "plain" else _SEQ_F2
    total = PolyV()
    for m in range(s + 1):
        inner = Fraction(0)
        for k in range(m + 1):
            A = demoivre(m, k, seq)
            if A:
                inner += Fraction(2) ** k * binomial(Fraction(-s - 1, 2), k) * A
        if inner:
            total = total + _outer_weight(mode, m, s) * inner
    return Sqrt2Scaled(total, s - 1)


@lru_cache(maxsize=None)
def rho(r: int, mode: str = "plain") -> PolyV:
    """Correction-term coefficient rho_r(v), a polynomial of degree 2r+1.

    rho(0) == 1/3 - v; at v = 0 the values run 1/3, 4/135, -8/2835, ...
    The tilde mode is the exponential-weight companion with
    rho_r = rho~_r + v * rho~_{r-1}.
    """
    _check_mode(mode)
    if r < 0:
        raise ValueError("r must be nonnegative")
    seq = _SEQ_H2 if mode == "plain" else _SEQ_F2
    total = PolyV()
    for m in range(2 * r + 2):
        inner = Fraction(0)
        for k in range(m + 1):
            A = demoivre(m, k, seq)
            if A:
                inner += Fraction(double_factorial(2 * r + 2 * k),
                                  (-1) ** k * factorial(k)) * A
        if inner:
            total = total + _outer_weight(mode, m, 2 * r + 1) * inner
    if mode == "plain":
        return (PolyV.const(1) if r == 0 else PolyV()) - total
    return -total


@lru_cache(maxsize=None)
def gamma_coeff(r: int, mode: str = "plain") -> PolyV:
    """Stirling-series coefficient gamma_r(v), a polynomial of degree 2r.

    gamma_coeff(0) == 1, gamma_coeff(1)(0) == 1/12,
    gamma_coeff(2)(0) == 1/288.  Same plain/tilde pairing as rho.
    """
    _check_mode(mode)
    if r < 0:
        raise ValueError("r must be nonnegative")
    seq = _SEQ_H2 if mode == "plain" else _SEQ_F2
    total = PolyV()
    for m in range(2 * r + 1):
        inner = Fraction(0)
        for k in range(m + 1):
            A = demoivre(m, k, seq)
            if A:
                inner += Fraction(double_factorial(2 * r + 2 * k - 1),
                                  (-1) ** k * factorial(k)) * A
        if inner:
            total = total + _outer_weight(mode, m, 2 * r) * inner
    return total


@lru_cache(maxsize=None)
def tau(r: int) -> PolyV:
    """Companion coefficient tau_r(v) driving the psi family; tau(0) = -1/3 - v."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    total = PolyV()
    for m in range(2 * r + 2):
        inner = Fraction(0)
        for k in range(m + 1):
            A = demoivre(m, k, _SEQ_H2)
            if A:
                inner += Fraction(double_factorial(2 * r + 2 * k - 1),
                                  (-1) ** k * factorial(k)) * A
        if inner:
            total = total + Fraction((-1) ** (m + 1)) \
                * binomial_poly(2 * r + 1 - m) * inner
    return total


_GAMMA_POLY_SEQ = CoeffSequence(lambda j: gamma_coeff(j), "gamma[v]")


@lru_cache(maxsize=None)
def psi(r: int) -> PolyV:
    """Exponential-integral companion coefficient psi_r(v).

    Assembled by series inversion: psi_r = sum_m tau_{r-m} * I_m where I_m
    are the coefficients of 1/(1 + gamma_1 x + gamma_2 x^2 + ...), computed
    with the same power-coefficient engine over the polynomial ring in v.
    psi(0) == -1/3 - v and psi(1)(0) == 4/135.
    """
    if r < 0:
        raise ValueError("r must be nonnegative")
    total = PolyV()
    for m in range(r + 1):
        inner = PolyV()
        for k in range(m + 1):
            A = demoivre(m, k, _GAMMA_POLY_SEQ)
            if A:
                inner = inner + Fraction((-1) ** k) * A
        if inner:
            total = total + tau(r - m) * inner
    return total


# ---------------------------------------------------------------------------
# v = 0 specializations (single-sum forms; also the conjecture fast path)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def rho_zero(r: int, mode: str = "plain") -> Fraction:
    """rho_r(0) by its single-sum form over 1/(j+2) (plain) or 1/(j+2)! (tilde)."""
    _check_mode(mode)
    if r < 0:
        raise ValueError("r must be nonnegative")
    seq = _SEQ_H2 if mode == "plain" else _SEQ_F2
    s = Fraction(0)
    for k in range(2 * r + 2):
        A = demoivre(2 * r + 1, k, seq)
        if A:
            s += Fraction(double_factorial(2 * r + 2 * k),
                          (-1) ** k * factorial(k)) * A
    if mode == "plain":
        return (Fraction(1) if r == 0 else Fraction(0)) + s
    return -s


@lru_cache(maxsize=None)
def gamma_zero(r: int, mode: str = "plain") -> Fraction:
    """gamma_r(0) by its single-sum form; both modes must agree."""
    _check_mode(mode)
    if r < 0:
        raise ValueError("r must be nonnegative")
    seq = _SEQ_H2 if mode == "plain" else _SEQ_F2
    s = Fraction(0)
    for k in range(2 * r + 1):
        A = demoivre(2 * r, k, seq)
        if A:
            s += Fraction(double_factorial(2 * r + 2 * k - 1),
                          (-1) ** k * factorial(k)) * A
    return s


@lru_cache(maxsize=None)
def tau_zero(r: int) -> Fraction:
    s = Fraction(0)
    for k in range(2 * r + 2):
        A = demoivre(2 * r + 1, k, _SEQ_H2)
        if A:
            s += Fraction(double_factorial(2 * r + 2 * k - 1),
                          (-1) ** k * factorial(k)) * A
    return s


_GAMMA_ZERO_SEQ = CoeffSequence(lambda j: gamma_zero(j), "gamma[0]")


@lru_cache(maxsize=None)
def psi_zero(r: int) -> Fraction:
    """psi_r(0) via the same inversion as psi, specialized to v = 0."""
    total = Fraction(0)
    for m in range(r + 1):
        inner = Fraction(0)
        for k in range(m + 1):
            A = demoivre(m, k, _GAMMA_ZERO_SEQ)
            if A:
                inner += Fraction((-1) ** k) * A
        if inner:
            total += tau_zero(r - m) * inner
    return total


@dataclass(frozen=True)
class ConjectureRow:
    r: int
    psi_value: Fraction
    expected: Fraction

    @property
    def equal(self) -> bool:
        return self.psi_value == self.expected


@dataclass(frozen=True)
class ConjectureReport:
    rows: tuple
    all_equal: bool


def check_conjecture(max_r: int) -> ConjectureReport:
    """Exact test of psi_r(0) = (-1)^(r+1) rho_r(0) for 0 <= r <= max_r."""
    if max_r < 0:
        raise ValueError("max_r must be nonnegative")
    rows = []
    for r in range(max_r + 1):
        rows.append(ConjectureRow(r, psi_zero(r),
                                  Fraction((-1) ** (r + 1)) * rho_zero(r)))
    return ConjectureReport(tuple(rows), all(row.equal for row in rows))


# ---------------------------------------------------------------------------
# the U family: rational functions of w
# ---------------------------------------------------------------------------

_U_MODES = ("plain", "tilde", "vzero_harmonic", "vzero_factorial",
            "eulerian", "taylor")


@lru_cache(maxsize=None)
def U_coeff(r: int, mode: str = "plain",
            taylor_terms: Optional[int] = None) -> RationalFnW:
    """Interior expansion coefficient U_r(w; v) = N(w, v)/(w-1)^(2r+1).

    U_coeff(0) == 1/(1-w).  Modes:
      plain           polynomial-in-v form over the sequence 1/(j+1)
      tilde           exponential-weight companion over 1/(j+1)!
      vzero_harmonic  v = 0 single sum over 1/(j+1)
      vzero_factorial v = 0 single sum over 1/(j+1)!
      eulerian        v = 0 numerator read off second-order Eulerian numbers
      taylor          v = 0 Taylor section at w = 0 (needs taylor_terms);
                      agrees with the others only through that order
    """
    if mode not in _U_MODES:
        raise ValueError(f"mode must be one of {_U_MODES}")
    if r < 0:
        raise ValueError("r must be nonnegative")

    if mode == "plain":
        num = w_minus_1_pow(2 * r + 1) if r == 0 else PolyW()
        for m in range(r + 1):
            for k in range(m + 1):
                A = demoivre(m, k, _SEQ_H1)
                if A:
                    c = Fraction((-1) ** (m + 1) * factorial(r + k),
                                 factorial(k)) * A
                    num = num + PolyW.w_monomial(1, binomial_poly(r - m) * c) \
                        * w_minus_1_pow(r - k)
        return RationalFnW(num, 2 * r + 1)

    if mode == "tilde":
        num = PolyW()
        for m in range(r + 1):
            for k in range(m + 1):
                A = demoivre(m, k, _SEQ_F1)
                if A:
                    c = Fraction(-((-1) ** k) * factorial(r + k),
                                 factorial(r - m) * factorial(k)) * A
                    num = num + PolyW.w_monomial(
                        k, PolyV.monomial(r - m, c)) * w_minus_1_pow(r - k)
        return RationalFnW(num, 2 * r + 1)

    if mode == "vzero_harmonic":
        num = w_minus_1_pow(2 * r + 1) if r == 0 else PolyW()
        for k in range(r + 1):
            A = demoivre(r, k, _SEQ_H1)
            if A:
                c = Fraction((-1) ** (r + 1) * factorial(r + k),
                             factorial(k)) * A
                num = num + PolyW.w_monomial(1, PolyV.const(c)) \
                    * w_minus_1_pow(r - k)
        return RationalFnW(num, 2 * r + 1)

    if mode == "vzero_factorial":
        num = PolyW()
        for k in range(r + 1):
            A = demoivre(r, k, _SEQ_F1)
            if A:
                c = Fraction((-1) ** (k + 1) * factorial(r + k),
                             factorial(k)) * A
                num = num + PolyW.w_monomial(k, PolyV.const(c)) \
                    * w_minus_1_pow(r - k)
        return RationalFnW(num, 2 * r + 1)

    if mode == "eulerian":
        from .combinat import eulerian2
        num = w_minus_1_pow(2 * r + 1) if r == 0 else PolyW()
        for j in range(max(r, 1)):
            E = eulerian2(r, j)
            if E:
                num = num + PolyW.w_monomial(
                    j + 1, PolyV.const(Fraction((-1) ** (r + 1) * E)))
        return RationalFnW(num, 2 * r + 1)

    # taylor
    from .combinat import stirling
    if taylor_terms is None:
        raise ValueError("taylor mode needs taylor_terms")
    coeffs = [PolyV.const(1 if r == 0 else 0)]
    for j in range(1, taylor_terms):
        coeffs.append(PolyV.const(
            Fraction((-1) ** r * stirling("subset", r + j, j))))
    return RationalFnW(PolyW(coeffs), 0)


# ---------------------------------------------------------------------------
# the generic saddle-point coefficient engine
# ---------------------------------------------------------------------------

def _ring_inverse(x):
    if isinstance(x, (int, Fraction)):
        if x == 0:
            raise ZeroDivisionError("leading series coefficient is zero")
        return Fraction(1) / Fraction(x)
    inv = getattr(x, "inverse", None)
    if inv is None:
        raise TypeError(f"no inverse available for {type(x).__name__}")
    return inv()


@dataclass(frozen=True)
class SaddleData:
    """Inputs for the saddle coefficient alpha_s.

    mu is the vanishing order at the endpoint, a the power weight, p(j) the
    phase-series coefficients (p(0) invertible), q(j) the amplitude-series
    coefficients.  ``tag`` keys the memo table for the ratio sequence
    p(j)/p(0); it must uniquely identify that sequence.
    """

    mu: int
    a: Fraction
    p: Callable[[int], object]
    q: Callable[[int], object]
    tag: Optional[str] = None


@dataclass(frozen=True)
class SaddleCoefficient:
    """alpha_s = p0**exponent * factor, with the p0 power left symbolic.

    The exponent -(s+a)/mu is generally fractional; ``assembled`` folds it
    in only when it is an integer, otherwise the caller must choose the
    branch."""

    p0: object
    exponent: Fraction
    factor: object

    def assembled(self):
        if self.exponent.denominator != 1:
            raise ValueError(
                "p0 power is fractional; pick a branch and assemble externally")
        return self.p0 ** int(self.exponent) * self.factor


def alpha_s(data: SaddleData, s: int) -> SaddleCoefficient:
    """Coefficient of index s in the endpoint saddle expansion.

    alpha_s = p0^(-(s+a)/mu) * (1/mu) * sum_{m<=s} q(s-m) *
              sum_j C(-(s+a)/mu, j) A(m, j; p_1/p_0, p_2/p_0, ...).
    """
    if s < 0:
        raise ValueError("s must be nonnegative")
    if data.mu < 1:
        raise ValueError("mu must be a positive integer")
    p0 = data.p(0)
    inv_p0 = _ring_inverse(p0)
    ratio = CoeffSequence(lambda j: data.p(j) * inv_p0,
                          f"saddle:{data.tag}" if data.tag else None)
    expo = Fraction(-(s + Fraction(data.a)), data.mu)
    total = None
    for m in range(s + 1):
        inner = None
        for j in range(m + 1):
            A = demoivre(m, j, ratio)
            if A:
                t = binomial(expo, j) * A
                inner = t if inner is None else inner + t
        if inner is not None:
            t2 = data.q(s - m) * inner
            total = t2 if total is None else total + t2
    if total is None:
        total = Fraction(0)
    return SaddleCoefficient(p0, expo, Fraction(1, data.mu) * total)
