"""Stirling numbers, their r-associated refinements, and related counts.

All tables are built by the classical recurrences and cached module-wide.
``enumerate_oracle`` is deliberately dumb: it walks every set partition of
an n-element set and counts, so the closed-form routes have something
independent to be checked against.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

_KINDS = ("cycle", "subset")


def binomial(top, k: int) -> Fraction:
    """Generalized binomial coefficient: top may be any rational.

    Zero for k < 0; for integer top in [0, k) this reduces to 0 as usual,
    and negative integer tops follow the polynomial extension, e.g.
    binomial(-1, 3) = -1.
    """
    if k < 0:
        return Fraction(0)
    num = Fraction(1)
    t = Fraction(top)
    for i in range(k):
        num *= t - i
    return num / factorial(k)


def double_factorial(n: int) -> int:
    """n!! with the empty-product convention 0!! = (-1)!! = 1."""
    if n < -1:
        raise ValueError("double factorial needs n >= -1")
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


_STIRLING: dict[str, list[list[int]]] = {k: [[1]] for k in _KINDS}


def stirling(kind: str, n: int, k: int) -> int:
    """Stirling cycle or subset number.

    cycle:  permutations of n elements with k cycles,
            rows via  c(n, k) = c(n-1, k-1) + (n-1) c(n-1, k).
    subset: partitions of an n-set into k blocks,
            rows via  S(n, k) = S(n-1, k-1) + k S(n-1, k).
    """
    if kind not in _KINDS:
        raise ValueError(f"kind must be one of {_KINDS}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > n:
        return 0
    rows = _STIRLING[kind]
    while len(rows) <= n:
        nn = len(rows)
        prev = rows[-1]
        row = [0] * (nn + 1)
        for kk in range(1, nn + 1):
            high = prev[kk] if kk < len(prev) else 0
            row[kk] = prev[kk - 1] + (kk if kind == "subset" else nn - 1) * high
        rows.append(row)
    return rows[n][k]


_EULERIAN2: list[list[int]] = [[1]]


def eulerian2(n: int, k: int) -> int:
    """Second-order Eulerian number.

    Recurrence E2(n, k) = (k+1) E2(n-1, k) + (2n-1-k) E2(n-1, k-1) with
    E2(n, 0) = 1 and E2(n, k) = 0 for k < 0 or k >= n when n >= 1.
    Row n sums to (2n-1)!!.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or (n >= 1 and k >= n) or (n == 0 and k > 0):
        return 0
    rows = _EULERIAN2
    while len(rows) <= n:
        nn = len(rows)
        prev = rows[-1]
        width = max(nn, 1)
        row = [0] * width
        for kk in range(width):
            a = prev[kk] if kk < len(prev) else 0
            b = prev[kk - 1] if 0 <= kk - 1 < len(prev) else 0
            row[kk] = (kk + 1) * a + (2 * nn - 1 - kk) * b
        rows.append(row)
    return rows[n][k]


def stirling_associated(kind: str, n: int, k: int, r: int) -> int:
    """Stirling numbers restricted to parts of size at least r.

    subset: partitions of an n-set into k blocks, every block >= r elements,
            computed as (n!/k!) * A(n-(r-1)k, k; 1/r!, 1/(r+1)!, ...).
    cycle:  permutations with k cycles, every cycle >= r elements,
            computed as (n!/k!) * A(n-(r-1)k, k; 1/r, 1/(r+1), ...).
    r = 1 recovers the classical numbers; n = 0 gives 1 exactly at k = 0.
    """
    from .demoivre import demoivre, harmonic, inv_factorial

    if kind not in _KINDS:
        raise ValueError(f"kind must be one of {_KINDS}")
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    if r < 1:
        raise ValueError("r must be at least 1")
    m = n - (r - 1) * k
    if m < k or m < 0:
        return 0
    seq = inv_factorial(r - 1) if kind == "subset" else harmonic(r - 1)
    val = Fraction(factorial(n), factorial(k)) * demoivre(m, k, seq)
    if val.denominator != 1:
        raise ArithmeticError("associated Stirling value is not an integer")
    return val.numerator


_ENUM_CAP = 12


@lru_cache(maxsize=None)
def _partition_census(n: int):
    """Exhaustive walk over set partitions of {0..n-1}.

    Returns {(blocks, min_block_size): (partition_count, cycle_count)} where
    cycle_count weights each partition by prod (size-1)!, the number of ways
    to arrange each block into a cycle.
    """
    counts: dict[tuple[int, int], list[int]] = {}
    sizes: list[int] = []

    def rec(i: int) -> None:
        if i == n:
            key = (len(sizes), min(sizes))
            w = 1
            for s in sizes:
                w *= factorial(s - 1)
            c = counts.get(key)
            if c is None:
                counts[key] = [1, w]
            else:
                c[0] += 1
                c[1] += w
            return
        for b in range(len(sizes)):
            sizes[b] += 1
            rec(i + 1)
            sizes[b] -= 1
        sizes.append(1)
        rec(i + 1)
        sizes.pop()

    rec(0)
    return {k: tuple(v) for k, v in counts.items()}


def enumerate_oracle(kind: str, n: int, k: int, r: int = 1) -> int:
    """Count partitions/permutations with k parts of size >= r by listing.

    Capped at n <= 12 (the walk is exponential in n); meant purely as an
    independent check of the closed-form routes.
    """
    if kind not in _KINDS:
        raise ValueError(f"kind must be one of {_KINDS}")
    if n < 0 or k < 0 or r < 1:
        raise ValueError("need n, k >= 0 and r >= 1")
    if n > _ENUM_CAP:
        raise ValueError(f"enumeration capped at n = {_ENUM_CAP}")
    if n == 0:
        return int(k == 0)
    idx = 0 if kind == "subset" else 1
    return sum(v[idx] for (nb, mn), v in _partition_census(n).items()
               if nb == k and mn >= r)
