"""Region classification and truncated-expansion evaluators.

The scaled partial sums of e^(nw) behave differently depending on where w
sits relative to the curve |w e^(1-w)| = 1 and the line Re(w) = 1.  This
module classifies points of the w-plane into those regions, parametrizes
the boundary curve, and evaluates the truncated large-n expansions for the
correction term theta_n(v), the factorial Gamma(n+v+1), the tail and head
sums S_n(w;v) / T_n(w;v), and the exponential-integral companion Psi_n(v).

All evaluators take an explicit truncation order R; the series are
asymptotic, not convergent, so choosing R is the caller's concern.  Every
numeric result passes the two-precision agreement contract of
:mod:`ramasym.numcore`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from mpmath import mp

from .coefficients import gamma_coeff, psi, rho, U_coeff
from .numcore import (PrecisionError, _LOG2_10, _agree, to_mp, verified_eval)

_REGION_KINDS = ("X", "Y", "Z", "ScurveBoundary", "TcurveBoundary",
                 "One", "Zero")


@dataclass(frozen=True)
class RegionLabel:
    """Where a point w lies in the partition of the w-plane.

    kind is one of X (|w e^(1-w)| > 1), Y (modulus < 1, Re w < 1),
    Z (modulus < 1, Re w > 1), the two boundary arcs ScurveBoundary
    (Re w < 1) and TcurveBoundary (Re w > 1), or the distinguished points
    One and Zero.  boundary_margin records the signed distance
    |w e^(1-w)| - 1 at working precision.
    """

    kind: str
    boundary_margin: object

    def __str__(self):
        return self.kind


def _margin_raw(wm):
    return abs(wm * mp.exp(1 - wm)) - 1


def classify(w, epsilon=Fraction(1, 10 ** 20), digits: int = 50) -> RegionLabel:
    """Label the position of w relative to the curve |w e^(1-w)| = 1.

    Points within epsilon of the distinguished values 1 and 0 get the
    labels One and Zero; points whose modulus margin is within epsilon of
    zero get a boundary label split by the sign of Re(w) - 1.
    """
    eps = to_mp(epsilon)
    if eps <= 0:
        raise ValueError("epsilon must be positive")
    margin = verified_eval(lambda: _margin_raw(to_mp(w)), digits)
    prec = int(digits * _LOG2_10) + 20
    with mp.workprec(prec):
        wm = to_mp(w)
        if abs(wm - 1) < eps:
            return RegionLabel("One", margin)
        if abs(wm) < eps:
            return RegionLabel("Zero", margin)
        re_less = wm.real < 1
        if abs(margin) < eps:
            return RegionLabel("ScurveBoundary" if re_less
                               else "TcurveBoundary", margin)
        if margin > 0:
            return RegionLabel("X", margin)
        return RegionLabel("Y" if re_less else "Z", margin)


def _phi_raw(wm):
    x = wm.imag - mp.arg(wm)
    y = x - 2 * mp.pi * mp.floor((x + mp.pi) / (2 * mp.pi))
    if y <= -mp.pi:
        y += 2 * mp.pi
    return y


def phi(w, digits: int = 50, tol=Fraction(1, 10 ** 20)):
    """Boundary phase: w e^(1-w) = e^(-i phi(w)) with phi in (-pi, pi].

    Only defined on the curve |w e^(1-w)| = 1; inputs whose modulus margin
    exceeds tol are rejected.
    """
    margin = verified_eval(lambda: _margin_raw(to_mp(w)), digits)
    if abs(margin) > to_mp(tol):
        raise ValueError(
            f"w is off the unit-modulus curve by {mp.nstr(margin, 8)}")
    return verified_eval(lambda: _phi_raw(to_mp(w)), digits)


def lambert_w_recip_e(digits: int = 50):
    """The constant W(1/e): the solution of x e^x = 1/e, about 0.27846.

    Newton iteration from 0.25; the negative of this value is the left
    endpoint of the boundary-curve parametrization.
    """

    def compute():
        target = mp.exp(-1)
        x = mp.mpf("0.25")
        for _ in range(300):
            ex = mp.exp(x)
            dx = (x * ex - target) / (ex * (1 + x))
            x -= dx
            if abs(dx) <= mp.eps * (1 + abs(x)):
                break
        return x

    return verified_eval(compute, digits)


@dataclass(frozen=True)
class CurvePoint:
    t: object
    w: object
    residual: object


def szego_curve(t_min, t_max, step, digits: int = 50) -> list:
    """Sample the upper branch w = t + i sqrt(e^(2t-2) - t^2) of the curve.

    Valid for t >= -W(1/e); the arc with Re(w) < 1 bounds the S regions and
    the continuation with Re(w) > 1 bounds the T side.  Each returned point
    carries the verified residual | |w e^(1-w)| - 1 |.
    """
    t_min, t_max, step = Fraction(t_min), Fraction(t_max), Fraction(step)
    if step <= 0:
        raise ValueError("step must be positive")
    if t_max < t_min:
        raise ValueError("t_max must be at least t_min")
    floor_t = -lambert_w_recip_e(digits + 10)
    points = []
    t = t_min
    while t <= t_max:
        tm = to_mp(t)
        if tm < floor_t and abs(tm - floor_t) > mp.mpf(10) ** (-digits):
            raise ValueError(
                f"t = {t} is below the curve domain t >= {mp.nstr(floor_t, 10)}")

        def compute(tt=t):
            tmm = to_mp(tt)
            rad = mp.exp(2 * tmm - 2) - tmm * tmm
            if rad < 0:
                rad = mp.mpf(0)
            return mp.mpc(tmm, mp.sqrt(rad))

        w = verified_eval(compute, digits)
        residual = verified_eval(lambda ww=w: abs(_margin_raw(ww)), digits)
        points.append(CurvePoint(to_mp(t), w, residual))
        t += step
    return points


@dataclass(frozen=True)
class ExpansionResult:
    """A truncated expansion value with its per-term breakdown.

    value is the sum of per_term; terms_used is the truncation order R
    (terms r = 0..R-1); regime records which expansion branch fired;
    error_order describes the dropped remainder.
    """

    value: object
    terms_used: int
    per_term: tuple
    regime: RegionLabel
    error_order: str


def _verified_terms(build: Callable[[], Sequence], digits: int,
                    max_rounds: int = 6) -> list:
    """Like verified_eval, but for a list of terms compared by their sum."""
    prec = int((digits + 10) * _LOG2_10) + 20
    for _ in range(max_rounds):
        with mp.workprec(prec):
            total_low = mp.fsum(build())
        with mp.workprec(prec + 64):
            terms = build()
            total_high = mp.fsum(terms)
            if _agree(total_low, total_high, digits):
                return list(terms)
        prec *= 2
    raise PrecisionError(
        f"no two-precision agreement to {digits} digits after "
        f"{max_rounds} rounds")


def _check_order(n, R: int) -> None:
    if not (to_mp(n).real > 0):
        raise ValueError("n must be positive")
    if R < 0:
        raise ValueError("R must be nonnegative")


_ONE_LABEL = RegionLabel("One", 0)


def _plain_order(R: int) -> str:
    return f"O(n^(-{R}))"


def _half_order(R: int) -> str:
    return f"O(n^({Fraction(1, 2) - R}))"


def theta_expansion(n, v=0, R: int = 3, digits: int = 50) -> ExpansionResult:
    """Truncated expansion of the correction term: sum of rho_r(v)/n^r."""
    _check_order(n, R)
    coeffs = [rho(r)(v) for r in range(R)]

    def build():
        nm = to_mp(n)
        return [to_mp(c) / nm ** r for r, c in enumerate(coeffs)]

    terms = _verified_terms(build, digits) if R else []
    return ExpansionResult(mp.fsum(terms), R, tuple(terms), _ONE_LABEL,
                           _plain_order(R))


def psi_expansion(n, v=0, R: int = 3, digits: int = 50) -> ExpansionResult:
    """Truncated expansion of the exponential-integral companion.

    v must be an integer; the expansion is stated only there.
    """
    _check_order(n, R)
    if isinstance(v, Fraction):
        if v.denominator != 1:
            raise ValueError("v must be an integer")
        v = int(v)
    if not isinstance(v, int):
        raise ValueError("v must be an integer")
    coeffs = [psi(r)(v) for r in range(R)]

    def build():
        nm = to_mp(n)
        return [to_mp(c) / nm ** r for r, c in enumerate(coeffs)]

    terms = _verified_terms(build, digits) if R else []
    return ExpansionResult(mp.fsum(terms), R, tuple(terms), _ONE_LABEL,
                           _plain_order(R))


def gamma_expansion(n, v=0, R: int = 3, digits: int = 50) -> ExpansionResult:
    """Stirling-type expansion of Gamma(n+v+1).

    value = sqrt(2 pi n) * n^(n+v) / e^n * sum of gamma_r(v)/n^r, with the
    prefactor at verified precision; the remainder is relative to that
    prefactor.
    """
    _check_order(n, R)
    coeffs = [gamma_coeff(r)(v) for r in range(R)]

    def build():
        nm = to_mp(n)
        pref = mp.sqrt(2 * mp.pi * nm) * mp.power(nm, nm + to_mp(v)) \
            / mp.exp(nm)
        return [pref * to_mp(c) / nm ** r for r, c in enumerate(coeffs)]

    terms = _verified_terms(build, digits) if R else []
    return ExpansionResult(mp.fsum(terms), R, tuple(terms), _ONE_LABEL,
                           f"prefactor * O(n^(-{R}))")


def _scaled_order(R: int) -> str:
    return f"O(sqrt(n) * |w*e^(1-w)|^(-n) * n^(-{R}))"


def _tail_head_expansion(kind: str, n, w, v, R: int, digits: int,
                         epsilon) -> ExpansionResult:
    label = classify(w, epsilon, digits)
    k = label.kind

    if k == "Zero":
        if kind == "T":
            raise ValueError("T is undefined at w = 0")
        return ExpansionResult(mp.mpf(0), R, (), label, "exact")

    sign = 1 if kind == "S" else -1
    if k == "One":
        branch = "mixed"
    elif (kind == "S" and k == "Z") or (kind == "T" and k == "Y"):
        branch = "dominant"
    elif (kind == "S" and k == "TcurveBoundary") or \
            (kind == "T" and k == "ScurveBoundary"):
        branch = "oscillatory"
    else:
        branch = "interior"

    rho_c = [rho(r)(v) for r in range(R)] if branch == "mixed" else None
    gamma_c = [gamma_coeff(r)(v) for r in range(R)] \
        if branch != "interior" else None
    u_c = [U_coeff(r)(w, v) for r in range(R)] \
        if branch in ("interior", "oscillatory") else None

    def build():
        nm = to_mp(n)
        wm = to_mp(w)
        vm = to_mp(v)
        inv = [nm ** -r for r in range(R)]
        if branch == "mixed":
            half_osc = mp.sqrt(2 * mp.pi * nm) / 2
            return [(sign * to_mp(rho_c[r]) + to_mp(gamma_c[r]) * half_osc)
                    * inv[r] for r in range(R)]
        if branch == "dominant":
            pref = mp.sqrt(2 * mp.pi * nm) * mp.exp(
                -nm * (1 - wm + mp.log(wm)) - vm * mp.log(wm))
            return [pref * to_mp(gamma_c[r]) * inv[r] for r in range(R)]
        if branch == "oscillatory":
            osc = mp.exp(1j * nm * _phi_raw(wm)) * mp.sqrt(2 * mp.pi * nm) \
                / mp.power(wm, vm)
            return [(sign * to_mp(u_c[r]) + to_mp(gamma_c[r]) * osc) * inv[r]
                    for r in range(R)]
        return [sign * to_mp(u_c[r]) * inv[r] for r in range(R)]

    terms = _verified_terms(build, digits) if R else []
    order = {"mixed": _half_order(R), "dominant": _scaled_order(R),
             "oscillatory": _half_order(R),
             "interior": _plain_order(R)}[branch]
    return ExpansionResult(mp.fsum(terms), R, tuple(terms), label, order)


def S_expansion(n, w, v=0, R: int = 3, digits: int = 50,
                epsilon=Fraction(1, 10 ** 20)) -> ExpansionResult:
    """Truncated large-n expansion of the scaled tail sum S_n(w;v).

    Dispatches on classify(w): the U-series in X, Y, and on the S-side
    boundary; the mixed rho/gamma form at w = 1; the oscillatory boundary
    form on the T-side arc; the dominant sqrt(n)-scaled gamma form in Z;
    and the exact value 0 at w = 0.
    """
    _check_order(n, R)
    return _tail_head_expansion("S", n, w, v, R, digits, epsilon)


def T_expansion(n, w, v=0, R: int = 3, digits: int = 50,
                epsilon=Fraction(1, 10 ** 20)) -> ExpansionResult:
    """Truncated large-n expansion of the scaled head sum T_n(w;v).

    Mirror of S_expansion: the negated U-series in X, Z, and on the T-side
    boundary; the mixed form at w = 1; the oscillatory form on the S-side
    arc; the dominant form in Y.  w = 0 is undefined.
    """
    _check_order(n, R)
    return _tail_head_expansion("T", n, w, v, R, digits, epsilon)
