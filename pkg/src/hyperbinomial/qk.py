"""The polynomials Q_k(x) generated from Q_0 = 1 - x^n by

    Q_{k+1} = Q_k + (1 - x)/(k + 1) * Q_k'

together with three closed forms, the associated density in n, and the
telescoping certificate linking the closed forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import PreconditionError
from .exact import binomial
from .poly import ONE, Poly

__all__ = [
    "QkSpec",
    "qk_recurrence",
    "qk_sequence",
    "qk_form1",
    "qk_form2",
    "qk_form3",
    "qk_all_forms",
    "density",
    "gosper_g",
    "gosper_certificate_check",
    "inner_sum",
    "inner_sum_closed",
]

ONE_MINUS_X = Poly([1, -1])


@dataclass(frozen=True)
class QkSpec:
    n: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 0 or self.k < 0:
            raise PreconditionError("n and k must be nonnegative")


def qk_sequence(n: int, k_max: int) -> list[Poly]:
    q = ONE - Poly.monomial(n)
    out = [q]
    for k in range(k_max):
        q = q + ONE_MINUS_X * q.derivative() * Fraction(1, k + 1)
        out.append(q)
    return out


def qk_recurrence(spec: QkSpec) -> Poly:
    return qk_sequence(spec.n, spec.k)[spec.k]


def qk_form1(spec: QkSpec) -> Poly:
    """1 - sum_{j<=k} C(n, j) (1-x)^j x^(n-j)."""
    n, k = spec.n, spec.k
    total = Poly()
    for j in range(min(k, n) + 1):
        total = total + ONE_MINUS_X**j * Poly.monomial(n - j, binomial(n, j))
    return ONE - total


def qk_form2(spec: QkSpec) -> Poly:
    """-(n-k) C(n,k) (-1)^(n+k) sum_{r>=1} C(k, n-r) (-1)^r x^r / r, plus 1 when k < n."""
    n, k = spec.n, spec.k
    pre = -(n - k) * binomial(n, k) * (-1) ** (n + k)
    coeffs = [Fraction(1 if k < n else 0)] + [Fraction(0)] * n
    # C(k, n-r) vanishes unless n-k <= r <= n
    for r in range(max(1, n - k), n + 1):
        coeffs[r] += Fraction(pre * binomial(k, n - r) * (-1) ** r, r)
    return Poly(coeffs)


def qk_form3(spec: QkSpec) -> Poly:
    """(1-x)^(k+1) sum_{j=0}^{n-k-1} C(j+k, j) x^j."""
    n, k = spec.n, spec.k
    if k >= n:
        return Poly()
    tail = Poly(binomial(j + k, j) for j in range(n - k))
    return ONE_MINUS_X ** (k + 1) * tail


def qk_all_forms(spec: QkSpec) -> dict[str, Poly]:
    return {
        "rec": qk_recurrence(spec),
        "1": qk_form1(spec),
        "2": qk_form2(spec),
        "3": qk_form3(spec),
    }


def density(n: int, k: int) -> Poly:
    """C(n,k) x^(n-k) (1-x)^(k+1), the point mass at n of the distribution with CDF Q_k."""
    if k < 0:
        raise PreconditionError("k must be nonnegative")
    if n < k:
        raise PreconditionError(f"density needs n >= k, got n={n}, k={k}")
    return Poly.monomial(n - k, binomial(n, k)) * ONE_MINUS_X ** (k + 1)


def gosper_g(j: int, k: int, r: int) -> Fraction:
    """(-1)^(j+1) (k+j)! / (r (j-1)! k!) * C(k, r-j); the 1/(j-1)! pole makes g_j = 0 for j <= 0."""
    if r < 1:
        raise PreconditionError("r must be >= 1")
    if j <= 0:
        return Fraction(0)
    sign = -1 if j % 2 == 0 else 1
    return Fraction(sign * factorial(k + j) * binomial(k, r - j), r * factorial(j - 1) * factorial(k))


def _summand(j: int, k: int, r: int) -> int:
    return (-1) ** j * binomial(k + 1, r - j) * binomial(k + j, j)


def gosper_certificate_check(k: int, r: int, j_max: int) -> bool:
    """Exact check of summand(j) = g_{j+1} - g_j for 0 <= j <= j_max."""
    if r < 1:
        raise PreconditionError("r must be >= 1")
    if k < 0 or j_max < 0:
        raise PreconditionError("k and j_max must be nonnegative")
    return all(_summand(j, k, r) == gosper_g(j + 1, k, r) - gosper_g(j, k, r) for j in range(j_max + 1))


def inner_sum(n: int, k: int, r: int) -> int:
    """sum_{j=0}^{n-k-1} (-1)^j C(k+1, r-j) C(k+j, j), summed directly."""
    return sum(_summand(j, k, r) for j in range(n - k))


def inner_sum_closed(n: int, k: int, r: int) -> Fraction:
    """(-1)^(n-k+1) (n-k)/r C(n,k) C(k, r-n+k), the telescoped value g_{n-k}."""
    if r < 1:
        raise PreconditionError("r must be >= 1")
    sign = 1 if (n - k + 1) % 2 == 0 else -1
    return Fraction(sign * (n - k) * binomial(n, k) * binomial(k, r - n + k), r)
