"""Exact rational scalars and verified arbitrary-precision floats.

Every exact quantity in this package is built on :class:`fractions.Fraction`
(re-exported here as ``Rational``) or on :class:`GaussianRational`, a complex
number with rational real and imaginary parts.  Approximate quantities go
through mpmath, but only via :func:`verified_eval`, which evaluates each
requested expression at two working precisions (p and p + 64 bits) and only
releases a result once the two runs agree to the caller's tolerance.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

import mpmath
from mpmath import mp

Rational = Fraction

Scalar = Union[int, Fraction]


class PrecisionError(ArithmeticError):
    """Raised when two working precisions refuse to agree on a value."""


# ---------------------------------------------------------------------------
# rational helpers
# ---------------------------------------------------------------------------

def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"``, an integer string, or a decimal string exactly.

    >>> parse_rational("-8/2835")
    Fraction(-8, 2835)
    >>> parse_rational("0.25")
    Fraction(1, 4)
    """
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational literal: {text!r}") from exc


def format_rational(q: Fraction) -> str:
    """Serialize as ``"p/q"`` in lowest terms, or ``"p"`` for integers."""
    return str(Fraction(q))


def rational_arith(a: Fraction, b: Fraction, op: str) -> Fraction:
    """Apply one exact field operation; division by zero raises."""
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if op == "/":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


# ---------------------------------------------------------------------------
# Gaussian rationals
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GaussianRational:
    """Exact complex number a + bi with rational a, b."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    @staticmethod
    def _coerce(x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction)):
            return GaussianRational(Fraction(x), Fraction(0))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

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
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def norm2(self) -> Fraction:
        """Squared modulus, an exact rational."""
        return self.re * self.re + self.im * self.im

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def inverse(self) -> "GaussianRational":
        n = self.norm2()
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("only integer powers are exact")
        base = self if n >= 0 else self.inverse()
        result = GaussianRational(Fraction(1), Fraction(0))
        for _ in range(abs(n)):
            result = result * base
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __str__(self):
        if self.im == 0:
            return format_rational(self.re)
        if self.im == 1:
            imag = "i"
        elif self.im == -1:
            imag = "-i"
        else:
            imag = f"{format_rational(self.im)}i"
        if self.re == 0:
            return imag
        sign = "+" if self.im > 0 else "-"
        mag = "i" if abs(self.im) == 1 else f"{format_rational(abs(self.im))}i"
        return f"{format_rational(self.re)}{sign}{mag}"


_URAT = r"(?:\d+(?:\.\d+)?(?:/\d+)?|\.\d+)"
_RAT = rf"[+-]?{_URAT}"


def parse_gaussian(text: str) -> GaussianRational:
    """Parse the exact complex syntax ``a/b+c/di`` (and its degenerate forms).

    Accepted shapes: ``"2"``, ``"1/2"``, ``"0.25"``, ``"i"``, ``"-3/4i"``,
    ``"1/2+1/4i"``, ``"1/2-1/3i"``.
    """
    s = text.strip().replace(" ", "")
    m = re.fullmatch(rf"(?P<re>{_RAT})(?P<sign>[+-])(?P<im>{_URAT})?i", s)
    if m:
        mag = Fraction(m.group("im")) if m.group("im") else Fraction(1)
        if m.group("sign") == "-":
            mag = -mag
        return GaussianRational(Fraction(m.group("re")), mag)
    m = re.fullmatch(rf"(?P<co>{_RAT}|[+-])?i", s)
    if m:
        co = m.group("co")
        if co is None or co == "+":
            mag = Fraction(1)
        elif co == "-":
            mag = Fraction(-1)
        else:
            mag = Fraction(co)
        return GaussianRational(Fraction(0), mag)
    m = re.fullmatch(_RAT, s)
    if m:
        return GaussianRational(Fraction(s), Fraction(0))
    raise ValueError(f"not a Gaussian rational literal: {text!r}")


# ---------------------------------------------------------------------------
# verified high-precision evaluation
# ---------------------------------------------------------------------------

_LOG2_10 = 3.321928094887362


def mpf_from_fraction(q: Fraction):
    """Round an exact rational into the ambient mpmath context."""
    return mp.mpf(q.numerator) / mp.mpf(q.denominator)


def to_mp(x):
    """Convert exact or float input to an ambient-precision mpf/mpc."""
    if isinstance(x, Fraction):
        return mpf_from_fraction(x)
    if isinstance(x, GaussianRational):
        if x.im == 0:
            return mpf_from_fraction(x.re)
        return mp.mpc(mpf_from_fraction(x.re), mpf_from_fraction(x.im))
    if isinstance(x, complex):
        return mp.mpc(x)
    return mp.mpf(x) if not isinstance(x, mp.mpc) else x


def _agree(a, b, digits: int) -> bool:
    diff = abs(a - b)
    if not mpmath.isfinite(diff):
        return False
    scale = max(mp.mpf(1), abs(a), abs(b))
    return diff <= mp.mpf(10) ** (-digits) * scale


def verified_eval(compute: Callable[[], object], digits: int,
                  cancel_digits: int = 0, max_rounds: int = 6):
    """Evaluate ``compute`` until two precisions p and p + 64 bits agree.

    ``compute`` must rebuild its value from exact inputs using the ambient
    mpmath context, so that rerunning it at a higher precision actually
    produces a sharper answer.  ``cancel_digits`` announces expected digit
    cancellation (e.g. a difference of two nearly equal exponentially large
    terms), widening the starting precision.  Agreement means
    |a - b| <= 10^-digits * max(1, |a|, |b|); on persistent disagreement
    :class:`PrecisionError` is raised rather than releasing a shaky value.
    """
    if digits <= 0:
        raise ValueError("digits must be positive")
    prec = int((digits + cancel_digits + 10) * _LOG2_10) + 20
    for _ in range(max_rounds):
        with mp.workprec(prec):
            a = compute()
        with mp.workprec(prec + 64):
            b = compute()
        with mp.workprec(prec + 64):
            if _agree(a, b, digits):
                return b
        prec *= 2
    raise PrecisionError(
        f"no agreement to {digits} digits after {max_rounds} escalations")


_ELEMENTARY = ("exp", "log", "sqrt", "arg", "pow")


def elementary(fn: str, x, digits: int, y=None):
    """Verified elementary function on the principal branch.

    ``fn`` is one of exp, log, sqrt, arg, pow (pow takes the extra
    argument ``y``).  log/arg of zero raise, as does 0**y for y <= 0.
    """
    if fn not in _ELEMENTARY:
        raise ValueError(f"unknown elementary function {fn!r}")
    zero_input = (
        x == 0 if isinstance(x, (int, Fraction)) else
        not x if isinstance(x, GaussianRational) else
        to_mp(x) == 0
    )
    if fn in ("log", "arg") and zero_input:
        raise ValueError(f"{fn} is undefined at 0")
    if fn == "pow" and zero_input:
        if isinstance(y, (int, Fraction)) and y > 0:
            return mp.mpf(0)
        raise ValueError("0**y is undefined for y <= 0")

    def compute():
        z = to_mp(x)
        if fn == "exp":
            return mp.exp(z)
        if fn == "log":
            return mp.log(z)
        if fn == "sqrt":
            return mp.sqrt(z)
        if fn == "arg":
            return mp.arg(z)
        return mp.power(z, to_mp(y))

    return verified_eval(compute, digits)


def format_bigfloat(x, digits: int) -> str:
    """Decimal serialization carrying an explicit digit count."""
    return mpmath.nstr(x, digits, strip_zeros=False)
