"""Exact polynomial rings used by the coefficient families.

``PolyV`` is a dense univariate polynomial over the rationals in the offset
variable v.  ``PolyW`` stacks PolyV coefficients into a polynomial in a
second variable w, and ``RationalFnW`` is the fraction N(w, v)/(w-1)^e kept
in lowest terms with respect to the (w-1) factor.  ``Sqrt2Scaled`` tracks an
exact multiple of an integer power of sqrt(2) so that intermediate
half-integer-power quantities never leave exact arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from mpmath import mp

from .numcore import format_rational, to_mp

_EXACT_SCALARS = (int, Fraction)


def _poly_terms_str(coeffs, var: str) -> str:
    """Render a coefficient list ascending in ``var``; '0' when empty."""
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        if i == 0:
            term = format_rational(c)
        else:
            vp = var if i == 1 else f"{var}^{i}"
            if c == 1:
                term = vp
            elif c == -1:
                term = f"-{vp}"
            else:
                term = f"{format_rational(c)}*{vp}"
        parts.append(term)
    if not parts:
        return "0"
    out = parts[0]
    for t in parts[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


class PolyV:
    """Polynomial in v with exact rational coefficients, lowest degree first."""

    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        cs = [Fraction(x) for x in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.c = tuple(cs)

    @classmethod
    def const(cls, x) -> "PolyV":
        return cls([Fraction(x)])

    @classmethod
    def variable(cls) -> "PolyV":
        return cls([0, 1])

    @classmethod
    def monomial(cls, k: int, coeff=1) -> "PolyV":
        return cls([0] * k + [Fraction(coeff)])

    @property
    def degree(self):
        """Degree as an int; -inf for the zero polynomial."""
        return len(self.c) - 1 if self.c else float("-inf")

    def coeff(self, i: int) -> Fraction:
        return self.c[i] if 0 <= i < len(self.c) else Fraction(0)

    def coeff_strings(self):
        """Coefficient list as "p/q" strings (constant term first)."""
        return [format_rational(x) for x in self.c]

    @staticmethod
    def _coerce(x):
        if isinstance(x, PolyV):
            return x
        if isinstance(x, _EXACT_SCALARS):
            return PolyV([Fraction(x)])
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        n = max(len(self.c), len(o.c))
        return PolyV([self.coeff(i) + o.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return PolyV([-x for x in self.c])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not self.c or not o.c:
            return PolyV()
        out = [Fraction(0)] * (len(self.c) + len(o.c) - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    if b:
                        out[i + j] += a * b
        return PolyV(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = PolyV([1])
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.c == o.c

    def __bool__(self):
        return bool(self.c)

    def __call__(self, x):
        """Horner evaluation; x may be exact, mpmath, or another ring element."""
        if isinstance(x, (mp.mpf, mp.mpc, float, complex)):
            z = to_mp(x)
            acc = mp.mpf(0)
            for co in reversed(self.c):
                acc = acc * z + to_mp(co)
            return acc
        acc = Fraction(0)
        for co in reversed(self.c):
            acc = acc * x + co
        return acc

    def __str__(self):
        return _poly_terms_str(self.c, "v")

    def __repr__(self):
        return f"PolyV({self})"


@lru_cache(maxsize=None)
def binomial_poly(m: int) -> PolyV:
    """Binomial coefficient of v over m as a degree-m polynomial in v."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    p = PolyV([1])
    for i in range(m):
        p = p * PolyV([-i, 1])
    return p * Fraction(1, factorial(m))


class PolyW:
    """Polynomial in w whose coefficients are PolyV elements."""

    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        cs = [x if isinstance(x, PolyV) else PolyV.const(x) for x in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.c = tuple(cs)

    @classmethod
    def w_monomial(cls, k: int, coeff=1) -> "PolyW":
        co = coeff if isinstance(coeff, PolyV) else PolyV.const(coeff)
        return cls([PolyV()] * k + [co])

    @property
    def degree(self):
        return len(self.c) - 1 if self.c else float("-inf")

    def coeff(self, i: int) -> PolyV:
        return self.c[i] if 0 <= i < len(self.c) else PolyV()

    @staticmethod
    def _coerce(x):
        if isinstance(x, PolyW):
            return x
        if isinstance(x, (PolyV, *_EXACT_SCALARS)):
            return PolyW([x])
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        n = max(len(self.c), len(o.c))
        return PolyW([self.coeff(i) + o.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return PolyW([-x for x in self.c])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not self.c or not o.c:
            return PolyW()
        out = [PolyV() for _ in range(len(self.c) + len(o.c) - 1)]
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    if b:
                        out[i + j] = out[i + j] + a * b
        return PolyW(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = PolyW([PolyV([1])])
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.c == o.c

    def __bool__(self):
        return bool(self.c)

    def divmod_w_minus_1(self):
        """Synthetic division by (w - 1): returns (quotient, remainder PolyV)."""
        if not self.c:
            return PolyW(), PolyV()
        q = [PolyV()] * (len(self.c) - 1)
        carry = PolyV()
        for i in range(len(self.c) - 1, 0, -1):
            carry = self.c[i] + carry
            q[i - 1] = carry
        rem = self.c[0] + carry
        return PolyW(q), rem

    def __call__(self, w, v):
        if isinstance(w, (mp.mpf, mp.mpc, float, complex)) or \
           isinstance(v, (mp.mpf, mp.mpc, float, complex)):
            zw = to_mp(w)
            acc = mp.mpf(0)
            for co in reversed(self.c):
                acc = acc * zw + co(v)
            return acc
        acc = Fraction(0)
        for co in reversed(self.c):
            acc = acc * w + co(v)
        return acc

    def __str__(self):
        if not self.c:
            return "0"
        if all(p.degree <= 0 for p in self.c):
            return _poly_terms_str([p.coeff(0) for p in self.c], "w")
        return " + ".join(
            f"({p})*w^{i}" if i else f"({p})"
            for i, p in enumerate(self.c) if p
        )


_W_MINUS_1 = PolyW([PolyV.const(-1), PolyV.const(1)])


@lru_cache(maxsize=None)
def w_minus_1_pow(e: int) -> PolyW:
    if e == 0:
        return PolyW([PolyV([1])])
    return w_minus_1_pow(e - 1) * _W_MINUS_1


class RationalFnW:
    """Fraction N(w, v) / (w - 1)^e with the (w-1) content fully cancelled."""

    __slots__ = ("num", "e")

    def __init__(self, num, e: int = 0):
        if e < 0:
            raise ValueError("denominator exponent must be nonnegative")
        n = PolyW._coerce(num)
        if n is NotImplemented:
            raise TypeError(f"cannot build numerator from {num!r}")
        if not n:
            e = 0
        while e > 0:
            q, rem = n.divmod_w_minus_1()
            if rem:
                break
            n, e = q, e - 1
        self.num = n
        self.e = e

    @staticmethod
    def _coerce(x):
        if isinstance(x, RationalFnW):
            return x
        if isinstance(x, (PolyW, PolyV, *_EXACT_SCALARS)):
            return RationalFnW(x, 0)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        e = max(self.e, o.e)
        n = (self.num * w_minus_1_pow(e - self.e)
             + o.num * w_minus_1_pow(e - o.e))
        return RationalFnW(n, e)

    __radd__ = __add__

    def __neg__(self):
        return RationalFnW(-self.num, self.e)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return RationalFnW(self.num * o.num, self.e + o.e)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFnW":
        """Invert when the numerator is c*(w-1)^d; raises otherwise."""
        n, d = self.num, 0
        while True:
            q, rem = n.divmod_w_minus_1()
            if rem or not q:
                break
            n, d = q, d + 1
        if n.degree != 0 or n.coeff(0).degree != 0:
            raise ValueError("inverse exists only for c*(w-1)^d numerators")
        c = n.coeff(0).coeff(0)
        if c == 0:
            raise ZeroDivisionError("inverse of zero")
        inv_c = PolyW([PolyV.const(Fraction(1) / c)])
        if self.e >= d:
            return RationalFnW(inv_c * w_minus_1_pow(self.e - d), 0)
        return RationalFnW(inv_c, d - self.e)

    def __pow__(self, n: int):
        base = self if n >= 0 else self.inverse()
        result = RationalFnW(1, 0)
        for _ in range(abs(n)):
            result = result * base
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.e == o.e and self.num == o.num

    def __bool__(self):
        return bool(self.num)

    def __call__(self, w, v=Fraction(0)):
        """Evaluate at w (not 1 when e > 0) and v; exact in, exact out."""
        numeric = isinstance(w, (mp.mpf, mp.mpc, float, complex)) or \
            isinstance(v, (mp.mpf, mp.mpc, float, complex))
        top = self.num(w, v)
        if self.e == 0:
            return top
        if numeric:
            return top / (to_mp(w) - 1) ** self.e
        den = (w - 1) ** self.e
        if not den:
            raise ZeroDivisionError("pole at w = 1")
        return top / den

    def taylor_at_zero(self, terms: int):
        """First ``terms`` coefficients of the w-power series (PolyV list)."""
        if self.e == 0:
            return [self.num.coeff(j) for j in range(terms)]
        # 1/(w-1)^e = (-1)^e * sum_j C(e-1+j, j) w^j
        out = []
        sign = (-1) ** self.e
        top_deg = len(self.num.c) - 1
        for j in range(terms):
            acc = PolyV()
            for i in range(min(j, top_deg) + 1):
                if self.num.coeff(i):
                    k = j - i
                    acc = acc + self.num.coeff(i) * Fraction(
                        sign * comb(self.e - 1 + k, k))
            out.append(acc)
        return out

    def max_v_degree(self) -> int:
        d = 0
        for p in self.num.c:
            if p and p.degree > d:
                d = p.degree
        return d

    def __str__(self):
        """Render grouped by v-power over (1-w) denominators."""
        if not self.num:
            return "0"
        chunks = []
        for i in range(self.max_v_degree() + 1):
            cw = [p.coeff(i) for p in self.num.c]
            if not any(cw):
                continue
            e = self.e
            while e > 0 and sum(cw) == 0:
                # divide by (w - 1)
                q = [Fraction(0)] * (len(cw) - 1)
                carry = Fraction(0)
                for d in range(len(cw) - 1, 0, -1):
                    carry = cw[d] + carry
                    q[d - 1] = carry
                cw, e = q, e - 1
            if e % 2:
                cw = [-x for x in cw]
            while cw and cw[-1] == 0:
                cw.pop()
            neg = False
            lead = next((x for x in cw if x), Fraction(0))
            if lead < 0:
                neg, cw = True, [-x for x in cw]
            num_str = _poly_terms_str(cw, "w")
            nontrivial = sum(1 for x in cw if x) > 1
            if e:
                den = "(1-w)" if e == 1 else f"(1-w)^{e}"
                body = f"({num_str})/{den}" if nontrivial else f"{num_str}/{den}"
            else:
                wrap = nontrivial and (i or neg)
                body = f"({num_str})" if wrap else num_str
            if i:
                vp = "v" if i == 1 else f"v^{i}"
                body = f"{vp}*{body}"
            chunks.append("-" + body if neg else body)
        out = chunks[0]
        for t in chunks[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out

    def __repr__(self):
        return f"RationalFnW({self})"


class Sqrt2Scaled:
    """Exact value poly * sqrt(2)^half_pow with a PolyV polynomial part."""

    __slots__ = ("poly", "half_pow")

    def __init__(self, poly, half_pow: int = 0):
        self.poly = poly if isinstance(poly, PolyV) else PolyV.const(poly)
        self.half_pow = half_pow

    def __mul__(self, other):
        if isinstance(other, Sqrt2Scaled):
            return Sqrt2Scaled(self.poly * other.poly,
                               self.half_pow + other.half_pow)
        return Sqrt2Scaled(self.poly * other, self.half_pow)

    __rmul__ = __mul__

    def __neg__(self):
        return Sqrt2Scaled(-self.poly, self.half_pow)

    def __add__(self, other):
        if not isinstance(other, Sqrt2Scaled):
            other = Sqrt2Scaled(other, 0)
        if not other.poly:
            return self
        if not self.poly:
            return other
        if (self.half_pow - other.half_pow) % 2:
            raise ValueError("cannot add incompatible sqrt(2) powers exactly")
        lo = min(self.half_pow, other.half_pow)
        a = self.poly * Fraction(2) ** ((self.half_pow - lo) // 2)
        b = other.poly * Fraction(2) ** ((other.half_pow - lo) // 2)
        return Sqrt2Scaled(a + b, lo)

    def __sub__(self, other):
        if not isinstance(other, Sqrt2Scaled):
            other = Sqrt2Scaled(other, 0)
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, Sqrt2Scaled):
            other = Sqrt2Scaled(other, 0)
        if not self.poly and not other.poly:
            return True
        if (self.half_pow - other.half_pow) % 2:
            return False
        if self.half_pow >= other.half_pow:
            return self.poly * Fraction(2) ** ((self.half_pow - other.half_pow) // 2) == other.poly
        return self.poly == other.poly * Fraction(2) ** ((other.half_pow - self.half_pow) // 2)

    def __bool__(self):
        return bool(self.poly)

    def to_polyv(self) -> PolyV:
        """Collapse to a plain polynomial; requires an even sqrt(2) power."""
        if not self.poly:
            return PolyV()
        if self.half_pow % 2:
            raise ValueError("value is an odd power of sqrt(2); not rational")
        return self.poly * Fraction(2) ** (self.half_pow // 2)

    def __str__(self):
        if self.half_pow % 2 == 0:
            return str(self.to_polyv()) if self.poly else "0"
        return f"sqrt2^{self.half_pow} * ({self.poly})"

    def __repr__(self):
        return f"Sqrt2Scaled({self.poly!r}, {self.half_pow})"
