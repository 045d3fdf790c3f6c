"""Generalized binomial coefficient triangles computed from the recurrence.

    {n+1||k} = (a n + b k + c) {n||k} + (a' n + b' k + c') {n||k-1},   {0||k} = [k == 0]

This module is the reference oracle for every closed form in the package.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from .exact import RationalLike, format_rational, parse_rational, to_rational

__all__ = [
    "Params",
    "GBCTable",
    "BINOMIAL",
    "STIRLING_FIRST",
    "STIRLING_SECOND",
    "EULERIAN",
    "compute_table",
    "entry",
    "row_sum",
    "first_column_product",
    "diagonal_product",
]


@dataclass(frozen=True)
class Params:
    """The six recurrence parameters, in the order (alpha, beta, gamma, alpha', beta', gamma')."""

    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    alpha_prime: Fraction
    beta_prime: Fraction
    gamma_prime: Fraction

    def __post_init__(self) -> None:
        for name in ("alpha", "beta", "gamma", "alpha_prime", "beta_prime", "gamma_prime"):
            object.__setattr__(self, name, to_rational(getattr(self, name)))

    @classmethod
    def of(cls, *values: RationalLike) -> "Params":
        if len(values) == 1 and not isinstance(values[0], (int, Fraction, str)):
            values = tuple(values[0])  # type: ignore[arg-type]
        if len(values) != 6:
            raise ValueError(f"expected 6 parameters, got {len(values)}")
        return cls(*values)  # type: ignore[arg-type]

    @classmethod
    def parse(cls, text: str) -> "Params":
        """Parse a comma-separated six-tuple such as ``"0,0,1,0,0,1"`` or ``"1/2,0,1,0,-3,1"``."""
        parts = text.split(",")
        if len(parts) != 6:
            raise ValueError(f"expected 6 comma-separated values, got {len(parts)}")
        return cls(*(parse_rational(p) for p in parts))

    def as_tuple(self) -> Tuple[Fraction, ...]:
        return (self.alpha, self.beta, self.gamma, self.alpha_prime, self.beta_prime, self.gamma_prime)

    def __str__(self) -> str:
        return ",".join(format_rational(v) for v in self.as_tuple())


BINOMIAL = Params.of(0, 0, 1, 0, 0, 1)
STIRLING_FIRST = Params.of(1, 0, 0, 0, 0, 1)
STIRLING_SECOND = Params.of(0, 1, 0, 0, 0, 1)
# A(n+1, k) = (k+1) A(n, k) + (n+1-k) A(n, k-1)
EULERIAN = Params.of(0, 1, 1, 1, -1, 1)


@dataclass(frozen=True)
class GBCTable:
    params: Params
    rows: Tuple[Tuple[Fraction, ...], ...]

    @property
    def max_n(self) -> int:
        return len(self.rows) - 1

    def entry(self, n: int, k: int) -> Fraction:
        if n < 0 or n > self.max_n:
            raise IndexError(f"row {n} outside table 0..{self.max_n}")
        if k < 0 or k > n:
            return Fraction(0)
        return self.rows[n][k]

    def row_sum(self, n: int) -> Fraction:
        if n < 0 or n > self.max_n:
            raise IndexError(f"row {n} outside table 0..{self.max_n}")
        return sum(self.rows[n], Fraction(0))

    def to_strings(self) -> list[list[str]]:
        return [[format_rational(v) for v in row] for row in self.rows]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n", quoting=csv.QUOTE_NONE)
        writer.writerows(self.to_strings())
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps(self.to_strings())


def _next_row(p: Params, n: int, row: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    out = []
    for k in range(n + 2):
        a = row[k] if k <= n else 0
        b = row[k - 1] if k >= 1 else 0
        val = Fraction(0)
        if a:
            val += (p.alpha * n + p.beta * k + p.gamma) * a
        if b:
            val += (p.alpha_prime * n + p.beta_prime * k + p.gamma_prime) * b
        out.append(val)
    return tuple(out)


def compute_table(params: Params, max_n: int) -> GBCTable:
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    rows = [(Fraction(1),)]
    for n in range(max_n):
        rows.append(_next_row(params, n, rows[-1]))
    return GBCTable(params, tuple(rows))


def entry(params: Params, n: int, k: int) -> Fraction:
    if n < 0:
        raise ValueError("n must be >= 0")
    if k < 0 or k > n:
        return Fraction(0)
    return compute_table(params, n).rows[n][k]


def row_sum(table: GBCTable, n: int) -> Fraction:
    return table.row_sum(n)


def first_column_product(params: Params, n: int) -> Fraction:
    """prod_{j<n} (alpha j + gamma), which is {n||0}."""
    out = Fraction(1)
    for j in range(n):
        out *= params.alpha * j + params.gamma
    return out


def diagonal_product(params: Params, n: int) -> Fraction:
    """prod_{j<n} (alpha' j + beta' (j+1) + gamma'), which is {n||n}."""
    out = Fraction(1)
    for j in range(n):
        out *= params.alpha_prime * j + params.beta_prime * (j + 1) + params.gamma_prime
    return out
