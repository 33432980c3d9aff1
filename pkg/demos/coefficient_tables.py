"""Print the exact coefficient families through modest orders.

Every entry is a polynomial in the offset v (or a rational function of w
with polynomial-in-v numerator coefficients), computed in exact rational
arithmetic.  The tilde variants relate to the plain ones through

    plain_r = tilde_r + v * tilde_(r-1)

which the last section verifies on the spot.
"""

from fractions import Fraction

from ramasym import U_coeff, beta, gamma_coeff, psi, rho, tau


def section(title):
    print()
    print(title)
    print("-" * len(title))


def main():
    section("rho_r(v): median-shift coefficients of the split at n + v")
    for r in range(4):
        print(f"  rho_{r}  = {rho(r)}")
    print(f"  rho_4(0) = {rho(4)(Fraction(0))}")

    section("gamma_r(v): factorial-asymptotics coefficients")
    for r in range(4):
        print(f"  gamma_{r} = {gamma_coeff(r)}")

    section("tau_r(v) and psi_r(v): the exponential-integral companions")
    for r in range(3):
        print(f"  tau_{r}  = {tau(r)}")
    for r in range(3):
        print(f"  psi_{r}  = {psi(r)}")

    section("beta_s(v): half-integer ladder (carries a power of sqrt 2)")
    for s in range(5):
        print(f"  beta_{s} = {beta(s)}")

    section("U_r(w; v): tail/head coefficients away from w = 1")
    for r in range(3):
        print(f"  U_{r} = {U_coeff(r)}")
    print(f"  U_1 tilde variant = {U_coeff(1, 'tilde')}")
    print(f"  U_2 at w=1/2, v=0 -> {U_coeff(2)(Fraction(1, 2), Fraction(0))}")

    section("recurrence check: plain = tilde + v * shifted tilde")
    v = Fraction(3, 7)
    w = Fraction(-2, 5)
    for r in range(1, 6):
        lhs = rho(r)(v)
        rhs = rho(r, "tilde")(v) + v * rho(r - 1, "tilde")(v)
        mark = "ok" if lhs == rhs else "MISMATCH"
        print(f"  rho_{r}({v}) = {lhs}   [{mark}]")
    for r in range(1, 4):
        lhs = U_coeff(r)(w, v)
        rhs = U_coeff(r, "tilde")(w, v) + v * U_coeff(r - 1, "tilde")(w, v)
        mark = "ok" if lhs == rhs else "MISMATCH"
        print(f"  U_{r}({w}; {v}) = {lhs}   [{mark}]")


if __name__ == "__main__":
    main()
