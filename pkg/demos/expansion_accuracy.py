"""Truncation error against the defining sums, doubling n each row.

An order-R truncation should lose a factor of about 2^R per doubling of
n (relative error for the factorial target).  Each row reports the error
of the expansion against an oracle that recomputes the quantity straight
from its definition at high precision.
"""

from fractions import Fraction

from mpmath import mp

from ramasym import (S_expansion, T_expansion, gamma_expansion,
                     oracle_S, oracle_T, oracle_factorial, oracle_psi,
                     oracle_theta, psi_expansion, theta_expansion, to_mp)


def report(name, R, rows):
    print(f"{name} (R = {R})")
    prev = None
    for n, err in rows:
        ratio = "" if prev is None else f"  ratio {mp.nstr(err / prev, 4)}"
        print(f"  n = {n:>4}: error {mp.nstr(err, 4)}{ratio}")
        prev = err
    print(f"  target ratio 2^-{R} = {mp.nstr(mp.mpf(2) ** -R, 4)}")
    print()


def main():
    digits = 50
    ns = (25, 50, 100, 200)

    rows = []
    for n in ns:
        approx = theta_expansion(n, 0, 3, digits).value
        rows.append((n, abs(approx - oracle_theta(n, 0, digits))))
    report("median shift theta_n(0)", 3, rows)

    rows = []
    for n in ns:
        approx = gamma_expansion(n, 2, 4, digits).value
        with mp.workprec(digits * 4 + 64):
            exact = mp.mpf(oracle_factorial(n, 2))
            rows.append((n, abs(approx - exact) / exact))
    report("factorial (n+2)!, relative", 4, rows)

    rows = []
    for n in ns:
        approx = psi_expansion(n, 1, 3, digits).value
        rows.append((n, abs(approx - oracle_psi(n, 1, digits))))
    report("exponential-integral companion psi_n(1)", 3, rows)

    w = Fraction(1, 2)
    rows = []
    for n in ns:
        approx = S_expansion(n, w, 0, 3, digits).value
        rows.append((n, abs(approx - oracle_S(n, w, 0, digits))))
    report("tail sum S at w = 1/2 (region Y)", 3, rows)

    w = Fraction(2)
    rows = []
    for n in ns:
        approx = T_expansion(n, w, 0, 3, digits).value
        with mp.workprec(digits * 4 + 64):
            rows.append((n, abs(approx - to_mp(oracle_T(n, w, 0)))))
    report("head sum T at w = 2 (region Z)", 3, rows)

    print("boundary case: S at w = 1 mixes a sqrt(n) oscillation")
    for n in ns:
        e = S_expansion(n, Fraction(1), 0, 3, digits)
        err = abs(e.value - oracle_S(n, Fraction(1), 0, digits))
        print(f"  n = {n:>4}: error {mp.nstr(err, 4)}   "
              f"[{e.error_order}]")


if __name__ == "__main__":
    main()
