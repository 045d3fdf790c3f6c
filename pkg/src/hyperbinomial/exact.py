"""Exact scalars and the classical special numbers.

Every scalar in the package is a :class:`fractions.Fraction`.  Integer-valued
special numbers (binomials, Stirling numbers, Bell numbers) are plain ``int``.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb
from typing import Callable, List, Union

__all__ = [
    "Rational",
    "RationalLike",
    "to_rational",
    "parse_rational",
    "format_rational",
    "binomial",
    "rising_factorial",
    "stirling_first_unsigned",
    "stirling_second",
    "bell",
]

Rational = Fraction
RationalLike = Union[int, Fraction, str]

_MINUS_SIGNS = ("-", "−")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` (optionally signed) into a canonical Fraction.

    Raises ValueError on anything else, including decimals and zero denominators.
    """
    s = text.strip()
    sign = 1
    if s[:1] in _MINUS_SIGNS:
        sign, s = -1, s[1:]
    elif s[:1] == "+":
        s = s[1:]
    num, slash, den = s.partition("/")
    if not num.isdigit() or (slash and not den.isdigit()):
        raise ValueError(f"not a rational: {text!r}")
    q = int(den) if slash else 1
    if q == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(sign * int(num), q)


def format_rational(x: Union[int, Fraction]) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def to_rational(x: RationalLike) -> Fraction:
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, float):
        raise TypeError("floats are not accepted as exact scalars")
    return Fraction(x)


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0, zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def rising_factorial(x: RationalLike, n: int) -> Fraction:
    """x (x+1) ... (x+n-1), with the empty product 1 at n = 0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    x = to_rational(x)
    out = Fraction(1)
    for i in range(n):
        out *= x + i
    return out


class _TriangleCache:
    # rows[n][k] for 0 <= k <= n, grown on demand under a lock
    def __init__(self, weight: Callable[[int, int], int]) -> None:
        self._weight = weight
        self._rows: List[List[int]] = [[1]]
        self._lock = threading.Lock()

    def row(self, n: int) -> List[int]:
        if n >= len(self._rows):
            with self._lock:
                while len(self._rows) <= n:
                    m = len(self._rows) - 1
                    prev = self._rows[m]
                    new = [0] * (m + 2)
                    for k in range(m + 2):
                        a = prev[k] if k <= m else 0
                        b = prev[k - 1] if k >= 1 else 0
                        new[k] = self._weight(m, k) * a + b
                    self._rows.append(new)
        return self._rows[n]

    def __call__(self, n: int, k: int) -> int:
        if n < 0:
            raise ValueError("n must be >= 0")
        if k < 0 or k > n:
            return 0
        return self.row(n)[k]


# c(n+1, k) = n c(n, k) + c(n, k-1)
_STIRLING1 = _TriangleCache(lambda n, k: n)
# S(n+1, k) = k S(n, k) + S(n, k-1)
_STIRLING2 = _TriangleCache(lambda n, k: k)


def stirling_first_unsigned(n: int, k: int) -> int:
    """Number of permutations of n elements with exactly k cycles."""
    return _STIRLING1(n, k)


def stirling_second(n: int, k: int) -> int:
    """Number of partitions of an n-set into k nonempty blocks."""
    return _STIRLING2(n, k)


def bell(n: int) -> int:
    if n < 0:
        raise ValueError("n must be >= 0")
    return sum(_STIRLING2.row(n))
