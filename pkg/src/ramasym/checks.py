"""Runnable verification ledger.

Every structural claim the package makes about its coefficient families
(frozen reference values, dual-form identities, combinatorial closed
forms, the saddle-engine cross-checks, the psi/rho sign conjecture, the
convergence orders, and the w-plane region partition) is represented here
as a named check returning a CheckResult.  The CLI ``verify`` subcommand
and the acceptance test suite both run these; they are the single source
of truth for what "verified" means.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Iterable, Optional

from mpmath import mp

from . import coefficients as cf
from .asymptotics import classify, phi, szego_curve
from .combinat import (binomial, double_factorial, enumerate_oracle,
                       eulerian2, stirling, stirling_associated)
from .demoivre import (CLOSED_FORM_SEQUENCES, CoeffSequence, demoivre,
                       harmonic, inv_factorial, special_closed_forms,
                       strip_first, strip_r)
from .numcore import GaussianRational, to_mp
from .oracle import convergence_probe
from .polys import PolyV, PolyW, RationalFnW, Sqrt2Scaled, binomial_poly


@dataclass(frozen=True)
class CheckResult:
    item: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.item}" + \
            (f": {self.detail}" if self.detail else "")


def _all_equal(item: str, pairs: Iterable, describe: str) -> CheckResult:
    count = 0
    for got, want, where in pairs:
        count += 1
        if got != want:
            return CheckResult(item, False,
                               f"{describe} mismatch at {where}: "
                               f"{got} != {want}")
    return CheckResult(item, True, f"{describe}; {count} cases")


# ---------------------------------------------------------------------------
# frozen reference values
# ---------------------------------------------------------------------------

_RHO_ZERO_FROZEN = (Fraction(1, 3), Fraction(4, 135), Fraction(-8, 2835),
                    Fraction(-16, 8505), Fraction(8992, 12629925))
_PSI_ZERO_FROZEN = (Fraction(-1, 3), Fraction(4, 135), Fraction(8, 2835))

_V = PolyV.variable()


def _frozen_rho_polys():
    return (
        Fraction(1, 3) - _V,
        Fraction(4, 135) - _V ** 2 * (_V + 1) * Fraction(1, 3),
        Fraction(-8, 2835)
        - _V * (9 * _V ** 4 - 15 * _V ** 2 - 2 * _V + 4) * Fraction(1, 135),
    )


def _frozen_psi_polys():
    return (
        Fraction(-1, 3) - _V,
        Fraction(4, 135) + _V * (_V + 1) ** 2 * Fraction(1, 3),
        Fraction(8, 2835)
        - _V * (9 * _V ** 4 + 45 * _V ** 3 + 75 * _V ** 2 + 47 * _V + 8)
        * Fraction(1, 135),
    )


def _frozen_u():
    u0 = RationalFnW(PolyW([-1]), 1)  # 1/(1-w)
    u1 = RationalFnW(PolyW.w_monomial(1, 1), 3) \
        + RationalFnW(PolyW.w_monomial(1, PolyV.monomial(1, -1)), 2)
    u2 = RationalFnW(PolyW([0, -1, -2]), 5) \
        + RationalFnW(PolyW([PolyV(), PolyV.monomial(1, 2),
                             PolyV.monomial(1, 1)]), 4) \
        + RationalFnW(PolyW.w_monomial(1, PolyV.monomial(2, -1)), 3)
    return u0, u1, u2


def check_frozen_values() -> list:
    """Reference values of rho, psi, and U at small index, exactly."""
    out = []
    out.append(_all_equal(
        "frozen-rho-at-zero",
        ((cf.rho_zero(r), _RHO_ZERO_FROZEN[r], f"r={r}") for r in range(5)),
        "rho_r(0) for r <= 4"))
    out.append(_all_equal(
        "frozen-rho-polynomials",
        ((cf.rho(r), p, f"r={r}")
         for r, p in enumerate(_frozen_rho_polys())),
        "rho_r(v) for r <= 2"))
    out.append(_all_equal(
        "frozen-psi-at-zero",
        ((cf.psi_zero(r), _PSI_ZERO_FROZEN[r], f"r={r}") for r in range(3)),
        "psi_r(0) for r <= 2"))
    out.append(_all_equal(
        "frozen-psi-polynomials",
        ((cf.psi(r), p, f"r={r}")
         for r, p in enumerate(_frozen_psi_polys())),
        "psi_r(v) for r <= 2"))
    out.append(_all_equal(
        "frozen-u-rational-functions",
        ((cf.U_coeff(r), u, f"r={r}") for r, u in enumerate(_frozen_u())),
        "U_r(w;v) for r <= 2"))
    return out


# ---------------------------------------------------------------------------
# dual forms and recurrences
# ---------------------------------------------------------------------------

def check_dual_forms(max_r: int = 25, max_r_u: int = 15) -> list:
    """Plain/tilde recurrences and the equal-value dual sums."""
    out = []
    out.append(_all_equal(
        "dual-rho-recurrence",
        ((cf.rho(r),
          cf.rho(r, "tilde") + (_V * cf.rho(r - 1, "tilde") if r else 0),
          f"r={r}") for r in range(max_r + 1)),
        f"rho_r = rho~_r + v rho~_(r-1) for r <= {max_r}"))
    out.append(_all_equal(
        "dual-gamma-recurrence",
        ((cf.gamma_coeff(r),
          cf.gamma_coeff(r, "tilde")
          + (_V * cf.gamma_coeff(r - 1, "tilde") if r else 0),
          f"r={r}") for r in range(max_r + 1)),
        f"gamma_r = gamma~_r + v gamma~_(r-1) for r <= {max_r}"))
    out.append(_all_equal(
        "dual-u-recurrence",
        ((cf.U_coeff(r),
          cf.U_coeff(r, "tilde")
          + (cf.U_coeff(r - 1, "tilde") * _V if r else 0),
          f"r={r}") for r in range(max_r_u + 1)),
        f"U_r = U~_r + v U~_(r-1) for r <= {max_r_u}"))
    out.append(_all_equal(
        "dual-gamma-scalar-sums",
        ((cf.gamma_zero(r, "plain"), cf.gamma_zero(r, "tilde"), f"r={r}")
         for r in range(max_r + 1)),
        f"gamma_r(0) via 1/j equals via 1/j! for r <= {max_r}"))
    out.append(_all_equal(
        "dual-rho-scalar-sums",
        ((cf.rho_zero(r, "plain"), cf.rho_zero(r, "tilde"), f"r={r}")
         for r in range(max_r + 1)),
        f"rho_r(0) via 1/j equals via 1/j! for r <= {max_r}"))

    def u_mode_pairs():
        for r in range(max_r_u + 1):
            ref = cf.U_coeff(r, "vzero_harmonic")
            yield cf.U_coeff(r, "vzero_factorial"), ref, f"r={r} factorial"
            yield cf.U_coeff(r, "eulerian"), ref, f"r={r} eulerian"

    out.append(_all_equal(
        "dual-u-closed-modes", u_mode_pairs(),
        f"v=0 closed forms of U_r agree for r <= {max_r_u}"))

    def taylor_pairs():
        terms = 16
        for r in range(max_r_u + 1):
            sections = cf.U_coeff(r, "eulerian").taylor_at_zero(terms)
            series = cf.U_coeff(r, "taylor", taylor_terms=terms)
            for j in range(terms):
                yield series.num.coeff(j), PolyV() + sections[j], \
                    f"r={r} j={j}"

    out.append(_all_equal(
        "dual-u-taylor-sections", taylor_pairs(),
        f"series mode matches Taylor sections for r <= {max_r_u}, 16 terms"))
    return out


# ---------------------------------------------------------------------------
# combinatorial identity ledger
# ---------------------------------------------------------------------------

def _padded(seq: CoeffSequence, zeros: int) -> CoeffSequence:
    """The sequence with ``zeros`` extra leading zero terms."""
    return CoeffSequence(
        lambda j: Fraction(0) if j <= zeros else seq(j - zeros),
        f"pad{zeros}:{seq.tag}" if seq.tag else None)


def check_identities(max_n: int = 12) -> list:
    """The combinatorial ledger grounding the De Moivre machinery."""
    out = []

    out.append(_all_equal(
        "eulerian2-to-stirling-cycle",
        ((stirling("cycle", r + j, j),
          sum(eulerian2(r, k) * binomial(r + j + k, 2 * r)
              for k in range(r + 1)), f"r={r} j={j}")
         for r in range(11) for j in range(11)),
        "cycle numbers from second-order Eulerian rows"))
    out.append(_all_equal(
        "eulerian2-to-stirling-subset",
        ((stirling("subset", r + j, j),
          sum(eulerian2(r, k) * binomial(2 * r + j - 1 - k, 2 * r)
              for k in range(r + 1)), f"r={r} j={j}")
         for r in range(11) for j in range(11)),
        "subset numbers from second-order Eulerian rows"))
    out.append(_all_equal(
        "eulerian2-row-sums",
        ((sum(eulerian2(n, k) for k in range(max(n, 1))),
          double_factorial(2 * n - 1), f"n={n}") for n in range(11)),
        "row sums equal odd double factorials"))

    def closed_pairs():
        for mode, seq in CLOSED_FORM_SEQUENCES.items():
            for n in range(max_n + 1):
                for k in range(n + 1):
                    yield special_closed_forms(n, k, mode), \
                        demoivre(n, k, seq), f"{mode} n={n} k={k}"

    out.append(_all_equal(
        "closed-forms-vs-convolution", closed_pairs(),
        f"all closed-form modes match the convolution for n <= {max_n}"))

    out.append(_all_equal(
        "power-form",
        ((demoivre(m + k, k, inv_factorial(-1)),
          Fraction(k ** m, factorial(m)), f"m={m} k={k}")
         for m in range(11) for k in range(11)),
        "A(m+k, k; 1/0!, 1/1!, ...) = k^m/m!"))

    def shift_pairs():
        for r in (2, 3):
            pad_f = _padded(inv_factorial(r - 1), r - 1)
            pad_h = _padded(harmonic(r - 1), r - 1)
            for n in range(max_n + 1):
                for k in range(n + 1):
                    yield demoivre(n, k, pad_f), \
                        demoivre(n - (r - 1) * k, k, inv_factorial(r - 1)) \
                        if n - (r - 1) * k >= 0 else Fraction(0), \
                        f"subset r={r} n={n} k={k}"
                    yield demoivre(n, k, pad_h), \
                        demoivre(n - (r - 1) * k, k, harmonic(r - 1)) \
                        if n - (r - 1) * k >= 0 else Fraction(0), \
                        f"cycle r={r} n={n} k={k}"

    out.append(_all_equal(
        "leading-zeros-shift", shift_pairs(),
        "padding with leading zeros shifts the order index"))

    def strip_pairs():
        for r in (1, 2, 3):
            for base, shifted, name in (
                    (harmonic(0), harmonic(r), "cycle"),
                    (inv_factorial(0), inv_factorial(r), "subset")):
                for n in range(max_n + 1):
                    for k in range(min(n, 6) + 1):
                        yield strip_r(n, k, r, base), \
                            demoivre(n, k, shifted), \
                            f"{name} r={r} n={n} k={k}"
        for n in range(max_n + 1):
            for k in range(min(n, 6) + 1):
                yield strip_first(n, k, harmonic(0)), \
                    demoivre(n, k, harmonic(1)), f"first n={n} k={k}"

    out.append(_all_equal(
        "strip-leading-terms", strip_pairs(),
        "binomial/multinomial strips equal the shifted-sequence values"))

    def assoc_pairs():
        for kind in ("cycle", "subset"):
            for r in (1, 2, 3):
                for n in range(11):
                    for k in range(n + 1):
                        yield stirling_associated(kind, n, k, r), \
                            enumerate_oracle(kind, n, k, r), \
                            f"{kind} n={n} k={k} r={r}"

    out.append(_all_equal(
        "associated-stirling-vs-enumeration", assoc_pairs(),
        "De Moivre closed form matches exhaustive counts for n <= 10"))

    out.append(_all_equal(
        "eulerian2-recovered-harmonic",
        ((eulerian2(r, j),
          sum(Fraction((-1) ** (r + j + k) * factorial(r + k), factorial(k))
              * binomial(r - k, j) * demoivre(r, k, harmonic(1))
              for k in range(r + 1)), f"r={r} j={j}")
         for r in range(11) for j in range(max(r, 1))),
        "second-order Eulerian numbers from the 1/(j+1) polynomials"))
    out.append(_all_equal(
        "eulerian2-recovered-factorial",
        ((eulerian2(r, j),
          sum(Fraction((-1) ** (j + k + 1) * factorial(r + k), factorial(k))
              * binomial(r - k, j + 1 - k)
              * demoivre(r, k, inv_factorial(1))
              for k in range(r + 1)), f"r={r} j={j}")
         for r in range(1, 11) for j in range(r)),
        "second-order Eulerian numbers from the 1/(j+1)! polynomials"))

    def gamma_assoc(kind):
        for j in range(11):
            total = sum(
                Fraction((-1) ** k, double_factorial(2 * j + 2 * k))
                * stirling_associated(kind, 2 * j + 2 * k, k, 3)
                for k in range(2 * j + 1))
            yield total, cf.gamma_zero(j), f"{kind} j={j}"

    out.append(_all_equal(
        "gamma-from-associated-cycle", gamma_assoc("cycle"),
        "gamma_j(0) from min-size-3 cycle counts for j <= 10"))
    out.append(_all_equal(
        "gamma-from-associated-subset", gamma_assoc("subset"),
        "gamma_j(0) from min-size-3 subset counts for j <= 10"))

    out.append(_all_equal(
        "rho-from-associated-cycle",
        (((Fraction(1) if j == 0 else Fraction(0)) + sum(
            Fraction((-1) ** k, double_factorial(2 * j + 2 * k + 1))
            * stirling_associated("cycle", 2 * j + 2 * k + 1, k, 3)
            for k in range(2 * j + 2)),
          cf.rho_zero(j), f"j={j}") for j in range(11)),
        "rho_j(0) from min-size-3 cycle counts for j <= 10"))
    out.append(_all_equal(
        "rho-from-associated-subset",
        ((-sum(Fraction((-1) ** k, double_factorial(2 * j + 2 * k + 1))
               * stirling_associated("subset", 2 * j + 2 * k + 1, k, 3)
               for k in range(2 * j + 2)),
          cf.rho_zero(j), f"j={j}") for j in range(11)),
        "rho_j(0) from min-size-3 subset counts for j <= 10"))

    # proof-relation anchors tying the beta family to rho and gamma
    out.append(_all_equal(
        "anchor-rho-from-beta",
        (((Fraction(1) if r == 0 else Fraction(0))
          - factorial(r) * cf.beta(2 * r + 1).to_polyv(),
          cf.rho(r), f"r={r}") for r in range(9)),
        "rho_r = delta - r! beta_(2r+1) for r <= 8"))
    out.append(_all_equal(
        "anchor-rho-tilde-from-beta",
        ((-factorial(r) * cf.beta(2 * r + 1, "tilde").to_polyv(),
          cf.rho(r, "tilde"), f"r={r}") for r in range(9)),
        "rho~_r = -r! beta~_(2r+1) for r <= 8"))
    out.append(_all_equal(
        "anchor-gamma-from-beta",
        (((cf.beta(2 * r) * Sqrt2Scaled(
            Fraction(factorial(2 * r), 4 ** r * factorial(r)), 1)
           ).to_polyv(),
          cf.gamma_coeff(r), f"r={r}") for r in range(9)),
        "gamma_r from beta_(2r) with the exact half-integer factor"))
    out.append(_all_equal(
        "anchor-halfinteger-binomial",
        ((Fraction(2) ** (r + k) * Fraction(factorial(2 * r),
                                            4 ** r * factorial(r))
          * binomial(Fraction(-2 * r - 1, 2), k),
          Fraction(double_factorial(2 * r + 2 * k - 1),
                   (-1) ** k * factorial(k)), f"r={r} k={k}")
         for r in range(21) for k in range(21)),
        "2^(r+k) (2r)!/(4^r r!) C(-r-1/2, k) = (2r+2k-1)!!/((-1)^k k!)"))
    return out


# ---------------------------------------------------------------------------
# the sign conjecture, the saddle engine, convergence, regions
# ---------------------------------------------------------------------------

def check_conjecture_range(max_r: int = 100) -> list:
    report = cf.check_conjecture(max_r)
    bad = [row for row in report.rows if not row.equal]
    detail = f"{sum(r.equal for r in report.rows)}/{len(report.rows)} equal"
    if bad:
        b = bad[0]
        detail += f"; first failure r={b.r}: {b.psi_value} vs {b.expected}"
    return [CheckResult(f"conjecture-psi-rho-sign-r{max_r}",
                        report.all_equal, detail)]


def check_saddle(max_s: int = 8, max_r: int = 5) -> list:
    out = []
    data_beta = cf.SaddleData(
        mu=2, a=Fraction(1),
        p=lambda j: Fraction((-1) ** j, j + 2),
        q=lambda j: binomial_poly(j), tag="engine:beta")

    def beta_pairs():
        for s in range(max_s + 1):
            a = cf.alpha_s(data_beta, s)
            yield Sqrt2Scaled(a.factor, s + 1), cf.beta(s), f"s={s}"

    out.append(_all_equal(
        "saddle-reproduces-beta", beta_pairs(),
        f"order-2 saddle data gives beta_s for s <= {max_s}"))

    one = RationalFnW(PolyW([1]), 0)
    wfn = RationalFnW(PolyW.w_monomial(1, 1), 0)

    def pseq(j):
        if j == 0:
            return RationalFnW(PolyW([-1, 1]), 0)
        return RationalFnW(PolyW([Fraction((-1) ** (j + 1), j + 1)]), 0)

    data_u = cf.SaddleData(
        mu=1, a=Fraction(1), p=pseq,
        q=lambda j: RationalFnW(PolyW([binomial_poly(j)]), 0),
        tag="engine:u")

    def u_pairs():
        for r in range(max_r + 1):
            a = cf.alpha_s(data_u, r)
            got = (one if r == 0 else RationalFnW(PolyW(), 0)) \
                - wfn * factorial(r) * a.assembled()
            yield got, cf.U_coeff(r), f"r={r}"

    out.append(_all_equal(
        "saddle-reproduces-u", u_pairs(),
        f"order-1 saddle data gives U_r for r <= {max_r}"))
    return out


_PROBES = (
    ("theta", 3, (25, 50, 100), 0, None),
    ("gammaFactorial", 4, (20, 40), 0, None),
    ("gammaFactorial", 4, (20, 40), 5, None),
    ("psi", 3, (25, 50, 100), 0, None),
    ("S", 3, (25, 50, 100), 0, Fraction(1, 2)),
    ("T", 3, (25, 50, 100), 0, Fraction(2)),
)


def check_convergence(digits: int = 200) -> list:
    """Error-decay ratios for all expansion targets, within 2x of 2^-R."""
    out = []
    for target, R, n_list, v, w in _PROBES:
        rows = convergence_probe(target, R, n_list, v=v, w=w, digits=digits)
        expected = mp.mpf(2) ** -R
        ok = True
        parts = []
        for row in rows:
            if row.ratio is None:
                continue
            parts.append(f"n={row.n}: {mp.nstr(row.ratio, 4)}")
            if not (expected / 2 <= row.ratio <= expected * 2):
                ok = False
        name = f"convergence-{target.lower()}-v{v}" \
            + (f"-w{w}".replace("/", "over") if w is not None else "")
        out.append(CheckResult(
            name, ok,
            f"R={R}, target 2^-{R}={mp.nstr(expected, 4)}; "
            + ", ".join(parts)))
    return out


def _independent_label(re: Fraction, im: Fraction) -> str:
    """Region label via the logarithmic sign test, bypassing classify."""
    if im == 0 and re == 1:
        return "One"
    if im == 0 and re == 0:
        return "Zero"
    with mp.workprec(400):
        margin = mp.log(to_mp(re * re + im * im)) / 2 + 1 - to_mp(re)
        if abs(margin) < mp.mpf(10) ** -40:
            return "ScurveBoundary" if re < 1 else "TcurveBoundary"
        if margin > 0:
            return "X"
        return "Y" if re < 1 else "Z"


def check_regions(samples: int = 1000, seed: int = 20260816,
                  curve_points: int = 200, digits: int = 50) -> list:
    out = []
    rng = random.Random(seed)
    bad = None
    for _ in range(samples):
        re = Fraction(rng.randint(-2000, 3000), 1000)
        im = Fraction(rng.randint(-2000, 2000), 1000)
        got = classify(GaussianRational(re, im), digits=digits).kind
        want = _independent_label(re, im)
        if got != want:
            bad = (re, im, got, want)
            break
    out.append(CheckResult(
        "classify-vs-sign-test",
        bad is None,
        f"{samples} seeded points in [-2,3]x[-2,2]" if bad is None else
        f"mismatch at w={bad[0]}+{bad[1]}i: {bad[2]} != {bad[3]}"))

    step = Fraction(1, 100)
    t_min = Fraction(-27, 100)
    t_max = t_min + (curve_points - 1) * step
    points = szego_curve(t_min, t_max, step, digits=digits)
    tol = mp.mpf(10) ** -30
    worst = max(p.residual for p in points)
    ok = len(points) == curve_points and worst < tol
    side_ok = True
    for p in points:
        lab = classify(p.w, digits=digits).kind
        t_re = p.w.real
        expect = "One" if abs(t_re - 1) < mp.mpf(10) ** -20 else (
            "ScurveBoundary" if t_re < 1 else "TcurveBoundary")
        if lab != expect:
            side_ok = False
            break
    out.append(CheckResult(
        "curve-residuals",
        ok and side_ok,
        f"{len(points)} points, worst | |w e^(1-w)| - 1 | = "
        f"{mp.nstr(worst, 3)}, boundary labels "
        f"{'consistent' if side_ok else 'inconsistent'}"))

    def phi_pairs():
        for p in points[::10]:
            if abs(p.w.real - 1) < mp.mpf(10) ** -20:
                continue
            ph = phi(p.w, digits=digits)
            with mp.workprec(int(digits * 3.4) + 30):
                recon = abs(p.w * mp.exp(1 - p.w) - mp.exp(-1j * ph))
                ok_here = recon < mp.mpf(10) ** -30
            yield ok_here, True, f"t={mp.nstr(p.t, 6)}"

    out.append(_all_equal(
        "phase-reconstruction", phi_pairs(),
        "e^(-i phi) rebuilds w e^(1-w) on sampled curve points"))
    return out


# ---------------------------------------------------------------------------
# suite registry
# ---------------------------------------------------------------------------

def run_identity_suite(max_r: Optional[int] = None) -> list:
    """Frozen values, dual forms, combinatorial ledger, saddle engine."""
    dual_kwargs = {}
    if max_r is not None:
        dual_kwargs = {"max_r": max_r, "max_r_u": min(max_r, 15)}
    results = []
    results += check_frozen_values()
    results += check_dual_forms(**dual_kwargs)
    results += check_identities()
    results += check_saddle()
    return sorted(results, key=lambda r: r.item)


def run_all(max_r_conjecture: int = 100) -> list:
    results = run_identity_suite()
    results += check_conjecture_range(max_r_conjecture)
    results += check_convergence()
    results += check_regions()
    return sorted(results, key=lambda r: r.item)
