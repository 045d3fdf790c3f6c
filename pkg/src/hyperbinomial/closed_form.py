"""Closed forms for the triangle when alpha' = 0.

With alpha' = 0 every entry splits as (a polynomial in alpha, beta, gamma) times
prod_{j=1..k} (gamma' + j beta').  Two routes are provided:

* :func:`gbc_factored` -- division-free Stirling/binomial sum, total on all rationals.
* :func:`gbc_hyper` -- the finite-difference form over rising factorials, which
  divides by alpha, beta and beta'.

:func:`row_sum_series` evaluates the row sums as an infinite series and is the
only floating-point code in the package.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterator, Tuple

import mpmath

from .errors import DegenerateParameterError, PreconditionError
from .exact import (
    binomial,
    format_rational,
    rising_factorial,
    stirling_first_unsigned,
    stirling_second,
)
from .triangle import Params

__all__ = [
    "FactoredValue",
    "gbc_factored",
    "gbc_hyper",
    "second_factor",
    "expanded_coefficient",
    "expanded_terms",
    "SeriesSum",
    "row_sum_series",
    "row_sum_series_sum",
]


@dataclass(frozen=True)
class FactoredValue:
    first_factor: Fraction
    second_factor: Fraction

    @property
    def product(self) -> Fraction:
        return self.first_factor * self.second_factor

    def to_dict(self) -> dict:
        return {
            "first": format_rational(self.first_factor),
            "second": format_rational(self.second_factor),
            "product": format_rational(self.product),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _require_alpha_prime_zero(params: Params) -> None:
    if params.alpha_prime != 0:
        raise PreconditionError(f"closed form needs alpha' = 0, got {format_rational(params.alpha_prime)}")


def second_factor(params: Params, k: int) -> Fraction:
    """prod_{j=1..k} (gamma' + j beta'); 1 for k <= 0."""
    out = Fraction(1)
    for j in range(1, k + 1):
        out *= params.gamma_prime + j * params.beta_prime
    return out


def _first_factor(params: Params, n: int, k: int) -> Fraction:
    a, b, c = params.alpha, params.beta, params.gamma
    d = n - k
    total = Fraction(0)
    for i1 in range(d + 1):
        s1 = stirling_first_unsigned(n, n - i1)
        if not s1:
            continue
        for i2 in range(d - i1 + 1):
            coeff = s1 * binomial(n - i1, k + i2) * stirling_second(k + i2, k)
            if coeff:
                total += coeff * a**i1 * b**i2 * c ** (d - i1 - i2)
    return total


def gbc_factored(params: Params, n: int, k: int) -> FactoredValue:
    _require_alpha_prime_zero(params)
    if n < 0:
        raise ValueError("n must be >= 0")
    if k < 0 or k > n:
        return FactoredValue(Fraction(0), second_factor(params, k))
    return FactoredValue(_first_factor(params, n, k), second_factor(params, k))


def gbc_hyper(params: Params, n: int, k: int) -> Fraction:
    """(alpha^n / k!) (beta'/beta)^k (gamma'/beta' + 1)^(k rising)
    * sum_j (-1)^(k-j) C(k, j) ((beta j + gamma)/alpha)^(n rising)."""
    _require_alpha_prime_zero(params)
    a, b, c = params.alpha, params.beta, params.gamma
    bp, cp = params.beta_prime, params.gamma_prime
    if a == 0 or b == 0 or bp == 0:
        raise DegenerateParameterError("alpha, beta and beta' must all be nonzero; use gbc_factored")
    if n < 0:
        raise ValueError("n must be >= 0")
    if k < 0 or k > n:
        return Fraction(0)
    diff = Fraction(0)
    for j in range(k + 1):
        term = binomial(k, j) * rising_factorial((b * j + c) / a, n)
        diff += term if (k - j) % 2 == 0 else -term
    return a**n / factorial(k) * (bp / b) ** k * rising_factorial(cp / bp + 1, k) * diff


def expanded_coefficient(
    params: Params, n: int, k: int, i1: int, i2: int, i3: int, j1: int, j2: int
) -> Fraction:
    """One monomial of the fully expanded entry:

    c(k+1, j2+1) c(n, n-i1) C(n-i1, k+i2) S(k+i2, k) alpha^i1 beta^i2 gamma^i3 beta'^j1 gamma'^j2
    """
    _require_alpha_prime_zero(params)
    if min(n, k, i1, i2, i3, j1, j2) < 0:
        raise PreconditionError("indices must be nonnegative")
    if i1 + i2 + i3 != n - k:
        raise PreconditionError(f"i1 + i2 + i3 = {i1 + i2 + i3} but n - k = {n - k}")
    if j1 + j2 != k:
        raise PreconditionError(f"j1 + j2 = {j1 + j2} but k = {k}")
    coeff = (
        stirling_first_unsigned(k + 1, j2 + 1)
        * stirling_first_unsigned(n, n - i1)
        * binomial(n - i1, k + i2)
        * stirling_second(k + i2, k)
    )
    if not coeff:
        return Fraction(0)
    p = params
    return coeff * p.alpha**i1 * p.beta**i2 * p.gamma**i3 * p.beta_prime**j1 * p.gamma_prime**j2


def expanded_terms(n: int, k: int) -> Iterator[Tuple[int, int, int, int, int]]:
    """All index tuples (i1, i2, i3, j1, j2) valid for entry (n, k)."""
    d = n - k
    for i1 in range(d + 1):
        for i2 in range(d - i1 + 1):
            for j2 in range(k + 1):
                yield i1, i2, d - i1 - i2, k - j2, j2


@dataclass(frozen=True)
class SeriesSum:
    value: mpmath.mpf
    last_term: mpmath.mpf
    truncation_j: int
    precision_bits: int


def _series_terms(params: Params, n: int, truncation_j: int) -> Iterator[Fraction]:
    # exact part of term j: alpha^n n! C(j + c', j) C(n + (beta j + gamma)/alpha - 1, n) (beta'/beta)^j
    a, b, c = params.alpha, params.beta, params.gamma
    cp = params.gamma_prime / params.beta_prime
    ratio = params.beta_prime / b
    scale = a**n
    first = Fraction(1)  # C(j + c', j) = (c'+1)^(j rising) / j!
    weight = Fraction(1)
    for j in range(truncation_j + 1):
        if j:
            first = first * (cp + j) / j
            weight *= ratio
        yield scale * rising_factorial((b * j + c) / a, n) * first * weight


def _mpf(x: Fraction) -> mpmath.mpf:
    return mpmath.mpf(x.numerator) / x.denominator


def row_sum_series_sum(params: Params, n: int, truncation_j: int, precision_bits: int) -> SeriesSum:
    """Partial sum of the row-sum series over j = 0..truncation_j, with the last term as a residual gauge."""
    _require_alpha_prime_zero(params)
    a, b, bp = params.alpha, params.beta, params.beta_prime
    if a <= 0 or b <= 0 or bp <= 0:
        raise DegenerateParameterError("row-sum series needs alpha, beta, beta' > 0")
    if n < 0 or truncation_j < 1 or precision_bits < 1:
        raise PreconditionError("need n >= 0, truncation_j >= 1, precision_bits >= 1")
    with mpmath.workprec(precision_bits):
        base = 1 + _mpf(bp / b)
        expo0 = -1 - _mpf(params.gamma_prime / bp)
        total = mpmath.mpf(0)
        term = mpmath.mpf(0)
        for j, exact in enumerate(_series_terms(params, n, truncation_j)):
            term = _mpf(exact) * mpmath.power(base, expo0 - j)
            total += term
        return SeriesSum(+total, abs(term), truncation_j, precision_bits)


def row_sum_series(params: Params, n: int, truncation_j: int = 400, precision_bits: int = 128) -> mpmath.mpf:
    return row_sum_series_sum(params, n, truncation_j, precision_bits).value
