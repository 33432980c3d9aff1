"""Command-line interface.

Subcommands:
  coeff     print an expansion coefficient exactly (symbolic or evaluated)
  eval      evaluate a truncated expansion at given n
  oracle    ground-truth reference values from the defining sums
  classify  label a point of the w-plane
  szego     sample the boundary curve as CSV
  verify    run the verification ledger suites

JSON is the default output format (CSV for curve/probe tables); pass
``--format plain`` for bare text.  The RAMA_PRECISION environment variable
overrides the default working precision of 50 digits.  Exit status: 0 on
success, 1 on failed checks or domain errors, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction

from mpmath import mp

from . import checks
from .asymptotics import (S_expansion, T_expansion, classify, gamma_expansion,
                          psi_expansion, szego_curve, theta_expansion)
from .coefficients import (U_coeff, beta, gamma_coeff, psi, rho, tau)
from .numcore import (GaussianRational, PrecisionError, format_bigfloat,
                      format_rational, parse_gaussian, parse_rational, to_mp)
from .oracle import (oracle_Ei, oracle_S, oracle_T, oracle_factorial,
                     oracle_psi, oracle_theta)
from .polys import PolyV, Sqrt2Scaled


def _default_digits() -> int:
    env = os.environ.get("RAMA_PRECISION")
    if env:
        try:
            d = int(env)
            if d > 0:
                return d
        except ValueError:
            pass
    return 50


def _emit(args, payload, plain_text: str) -> None:
    if args.format == "plain":
        sys.stdout.write(plain_text + "\n")
    else:
        sys.stdout.write(json.dumps(payload, ensure_ascii=False) + "\n")


def _num_str(x, digits: int) -> str:
    if isinstance(x, (int, Fraction)):
        return format_rational(Fraction(x))
    if isinstance(x, (GaussianRational, PolyV)):
        return str(x)
    return format_bigfloat(x, digits)


# ---------------------------------------------------------------------------
# coeff
# ---------------------------------------------------------------------------

_POLY_FAMILIES = {"rho": rho, "gamma": gamma_coeff, "tau": tau, "psi": psi}


def _coeff_value(args, r: int):
    """One family member, as (payload value, plain string)."""
    family = args.family
    if family in _POLY_FAMILIES:
        fn = _POLY_FAMILIES[family]
        poly = fn(r, args.mode) if family in ("rho", "gamma") else fn(r)
        if args.v is not None:
            return format_rational(poly(parse_rational(args.v)))
        return str(poly)
    if family == "beta":
        b = beta(r, args.mode)
        if args.v is not None:
            b = Sqrt2Scaled(PolyV.const(b.poly(parse_rational(args.v))),
                            b.half_pow)
        return str(b)
    # family == "U"
    u = U_coeff(r, args.mode, taylor_terms=args.taylor_terms)
    if args.w is not None:
        w = parse_gaussian(args.w)
        v = parse_rational(args.v) if args.v is not None else Fraction(0)
        return _num_str(u(w, v), args.digits)
    return str(u)


def cmd_coeff(args) -> int:
    if args.family == "U":
        if args.mode == "plain" and args.u_mode:
            args.mode = args.u_mode
    if args.symbolic:
        args.v = None
        args.w = None
    if args.upto is not None:
        records = []
        for r in range(args.upto + 1):
            if args.family in _POLY_FAMILIES:
                fn = _POLY_FAMILIES[args.family]
                poly = fn(r, args.mode) if args.family in ("rho", "gamma") \
                    else fn(r)
                records.append({"r": r, "polyV": poly.coeff_strings()})
            elif args.family == "beta":
                b = beta(r, args.mode)
                records.append({"r": r, "polyV": b.poly.coeff_strings(),
                                "sqrt2Power": b.half_pow})
            else:
                records.append({"r": r, "value": _coeff_value(args, r)})
        plain = "\n".join(json.dumps(rec, ensure_ascii=False)
                          for rec in records)
        _emit(args, records, plain)
        return 0
    value = _coeff_value(args, args.r)
    _emit(args, value, value)
    return 0


# ---------------------------------------------------------------------------
# eval / oracle
# ---------------------------------------------------------------------------

def _parse_v(text):
    if text is None:
        return Fraction(0)
    g = parse_gaussian(text)
    if not g.im:
        return g.re
    return g


def cmd_eval(args) -> int:
    v = _parse_v(args.v)
    w = parse_gaussian(args.w) if args.w is not None else None
    R = args.terms
    digits = args.digits
    if args.target == "theta":
        res = theta_expansion(args.n, v, R, digits)
    elif args.target == "gamma":
        res = gamma_expansion(args.n, v, R, digits)
    elif args.target == "psi":
        res = psi_expansion(args.n, v, R, digits)
    elif args.target == "S":
        if w is None:
            raise ValueError("eval S needs --w")
        res = S_expansion(args.n, w, v, R, digits)
    else:
        if w is None:
            raise ValueError("eval T needs --w")
        res = T_expansion(args.n, w, v, R, digits)
    value = _num_str(res.value, digits)
    payload = {
        "target": args.target, "n": args.n, "v": str(v),
        "w": str(w) if w is not None else None,
        "terms": R, "value": value,
        "perTerm": [_num_str(t, digits) for t in res.per_term],
        "regime": res.regime.kind, "errorOrder": res.error_order,
    }
    _emit(args, payload, value)
    return 0


def cmd_oracle(args) -> int:
    v = args.v if args.v is not None else 0
    digits = args.digits
    w = parse_gaussian(args.w) if args.w is not None else None
    if args.target == "theta":
        value = _num_str(oracle_theta(args.n, v, digits), digits)
    elif args.target == "psi":
        value = _num_str(oracle_psi(args.n, v, digits), digits)
    elif args.target == "Ei":
        value = _num_str(oracle_Ei(args.n, digits), digits)
    elif args.target == "factorial":
        value = str(oracle_factorial(args.n, v))
    elif args.target == "S":
        if w is None:
            raise ValueError("oracle S needs --w")
        value = _num_str(oracle_S(args.n, _exact_w(w), v, digits), digits)
    else:
        if w is None:
            raise ValueError("oracle T needs --w")
        value = _num_str(oracle_T(args.n, _exact_w(w), v), digits)
    payload = {"target": args.target, "n": args.n, "v": v,
               "w": str(w) if w is not None else None,
               "digits": digits, "value": value}
    _emit(args, payload, value)
    return 0


def _exact_w(g: GaussianRational):
    return g.re if not g.im else g


# ---------------------------------------------------------------------------
# classify / szego
# ---------------------------------------------------------------------------

def cmd_classify(args) -> int:
    w = parse_gaussian(args.w)
    eps = parse_rational(args.epsilon)
    label = classify(w, eps, args.digits)
    _emit(args, label.kind, label.kind)
    return 0


def cmd_szego(args) -> int:
    points = szego_curve(parse_rational(args.t_min),
                         parse_rational(args.t_max),
                         parse_rational(args.step), args.digits)
    digits = args.digits
    if args.format == "json":
        payload = [{"t": format_bigfloat(to_mp(p.t), digits),
                    "re": format_bigfloat(p.w.real, digits),
                    "im": format_bigfloat(p.w.imag, digits),
                    "residual": format_bigfloat(p.residual, 3)}
                   for p in points]
        sys.stdout.write(json.dumps(payload, ensure_ascii=False) + "\n")
        return 0
    lines = ["t,re,im,residual"]
    for p in points:
        lines.append(",".join((format_bigfloat(to_mp(p.t), digits),
                               format_bigfloat(p.w.real, digits),
                               format_bigfloat(p.w.imag, digits),
                               format_bigfloat(p.residual, 3))))
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def cmd_verify(args) -> int:
    if args.suite == "identities":
        results = checks.run_identity_suite(args.max_r)
    elif args.suite == "conjecture":
        results = checks.check_conjecture_range(
            args.max_r if args.max_r is not None else 100)
    elif args.suite == "convergence":
        results = checks.check_convergence()
    elif args.suite == "regions":
        results = checks.check_regions()
    else:
        results = checks.run_all(
            args.max_r if args.max_r is not None else 100)
    passed = sum(1 for r in results if r.ok)
    ok = passed == len(results)
    if args.format == "json":
        payload = {"results": [{"item": r.item, "ok": r.ok,
                                "detail": r.detail} for r in results],
                   "passed": passed, "total": len(results)}
        sys.stdout.write(json.dumps(payload, ensure_ascii=False) + "\n")
    else:
        for r in results:
            sys.stdout.write(r.line() + "\n")
        sys.stdout.write(f"{passed}/{len(results)} pass\n")
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# parser assembly
# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    """Accepts negative rationals such as -27/100 or -1/2-1/3i as values."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r"^-[0-9./+\-i]+$")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--digits", type=int, default=_default_digits(),
                        help="working precision in decimal digits "
                             "(default 50; env RAMA_PRECISION)")
    common.add_argument("--format", choices=("json", "plain", "csv"),
                        default=None,
                        help="output format (default json; szego defaults "
                             "to csv, verify to plain)")

    p = _Parser(
        prog="ramasym",
        description="Exact coefficients and verified numerics for the "
                    "asymptotics of exponential partial sums.")
    sub = p.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("coeff", parents=[common],
                        help="print an expansion coefficient")
    pc.add_argument("family",
                    choices=("rho", "gamma", "U", "tau", "psi", "beta"))
    pc.add_argument("--r", type=int, default=0, help="coefficient index")
    pc.add_argument("--upto", type=int, default=None,
                    help="emit all indices 0..N as JSON records")
    pc.add_argument("--v", default=None,
                    help="evaluate at this rational v (default: symbolic)")
    pc.add_argument("--w", default=None,
                    help="evaluate U at this Gaussian rational w")
    pc.add_argument("--symbolic", "--symbolic-v", action="store_true",
                    help="force the symbolic polynomial form")
    pc.add_argument("--mode", default="plain",
                    help="family variant (plain, tilde; U also accepts "
                         "vzero_harmonic, vzero_factorial, eulerian, taylor)")
    pc.add_argument("--u-mode", default=None, help=argparse.SUPPRESS)
    pc.add_argument("--taylor-terms", type=int, default=None,
                    help="truncation order for U mode taylor")
    pc.set_defaults(fn=cmd_coeff)

    pe = sub.add_parser("eval", parents=[common],
                        help="evaluate a truncated expansion")
    pe.add_argument("target", choices=("theta", "gamma", "S", "T", "psi"))
    pe.add_argument("--n", type=int, required=True)
    pe.add_argument("--v", default=None, help="offset (Gaussian rational)")
    pe.add_argument("--w", default=None, help="argument (Gaussian rational)")
    pe.add_argument("--terms", type=int, default=3,
                    help="truncation order R (default 3)")
    pe.set_defaults(fn=cmd_eval)

    po = sub.add_parser("oracle", parents=[common],
                        help="reference value from the defining sum")
    po.add_argument("target",
                    choices=("theta", "S", "T", "psi", "Ei", "factorial"))
    po.add_argument("--n", type=int, required=True)
    po.add_argument("--v", type=int, default=None)
    po.add_argument("--w", default=None, help="exact Gaussian rational")
    po.set_defaults(fn=cmd_oracle)

    pk = sub.add_parser("classify", parents=[common],
                        help="label a point of the w-plane")
    pk.add_argument("--w", required=True, help="Gaussian rational point")
    pk.add_argument("--epsilon", default="1/100000000000000000000",
                    help="boundary tolerance (default 10^-20)")
    pk.set_defaults(fn=cmd_classify)

    ps = sub.add_parser("szego", parents=[common],
                        help="sample the boundary curve")
    ps.add_argument("--t-min", default="-27/100")
    ps.add_argument("--t-max", default="173/100")
    ps.add_argument("--step", default="1/100")
    ps.set_defaults(fn=cmd_szego)

    pv = sub.add_parser("verify", parents=[common],
                        help="run the verification ledger")
    pv.add_argument("suite", choices=("identities", "conjecture",
                                      "convergence", "regions", "all"))
    pv.add_argument("--max-r", type=int, default=None,
                    help="index range override (conjecture default 100)")
    pv.set_defaults(fn=cmd_verify)
    return p


_FORMAT_DEFAULTS = {"szego": "csv", "verify": "plain"}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = _FORMAT_DEFAULTS.get(args.command, "json")
    mp.dps = max(args.digits + 10, 30)
    try:
        return args.fn(args)
    except (ValueError, ZeroDivisionError, PrecisionError,
            NotImplementedError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
