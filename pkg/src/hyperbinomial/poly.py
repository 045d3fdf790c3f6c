"""Dense univariate polynomials over the rationals."""

from __future__ import annotations

import json
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Optional, Sequence, Tuple, Union

from .exact import RationalLike, format_rational, parse_rational, to_rational

__all__ = ["Poly", "X", "ONE"]

Scalar = Union[int, Fraction]


class Poly:
    """Immutable polynomial; ``coeffs[i]`` is the coefficient of x**i.

    Trailing zeros are stripped, so the zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()) -> None:
        cs = [to_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: Tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def monomial(cls, degree: int, coeff: RationalLike = 1) -> "Poly":
        return cls([0] * degree + [coeff])

    @classmethod
    def from_strings(cls, items: Sequence[str]) -> "Poly":
        return cls(parse_rational(s) for s in items)

    @classmethod
    def from_json(cls, text: str) -> "Poly":
        return cls.from_strings(json.loads(text))

    @property
    def degree(self) -> Optional[int]:
        """None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({[format_rational(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        out = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = format_rational(mag)
            else:
                xs = "x" if i == 1 else f"x^{i}"
                if mag == 1:
                    body = xs
                elif mag.denominator == 1:
                    body = f"{mag.numerator}{xs}"
                else:
                    body = f"({format_rational(mag)}){xs}"
            if not out:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(("+ " if c > 0 else "- ") + body)
        return " ".join(out)

    def to_strings(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    def to_json(self) -> str:
        return json.dumps(self.to_strings())

    # arithmetic

    @staticmethod
    def _coerce(other: object) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly([other])
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: object) -> "Poly":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly(self[i] + o[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other: object) -> "Poly":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "Poly":
        return (-self) + other

    def __mul__(self, other: object) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative exponent")
        out, base = Poly([1]), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def scale(self, c: Scalar) -> "Poly":
        return self * Fraction(c)

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def __call__(self, x: RationalLike) -> Fraction:
        x = to_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod(self, other: "Poly") -> Tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(), self
        quot = [Fraction(0)] * (dq + 1)
        lead = other.lead
        for shift in range(dq, -1, -1):
            q = rem[shift + len(other.coeffs) - 1] / lead
            quot[shift] = q
            if q:
                for i, b in enumerate(other.coeffs):
                    rem[shift + i] -= q * b
        return Poly(quot), Poly(rem[: len(other.coeffs) - 1])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def monic(self) -> "Poly":
        return self * (1 / self.lead) if self.coeffs else self

    def primitive(self) -> "Poly":
        """Positive rescaling to coprime integer coefficients; keeps every sign."""
        if not self.coeffs:
            return self
        den = lcm(*(c.denominator for c in self.coeffs))
        ints = [c.numerator * (den // c.denominator) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        return Poly(Fraction(v, g) for v in ints)

    def gcd(self, other: "Poly") -> "Poly":
        """Monic gcd (zero if both are zero)."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, (a % b).primitive()
        return a.monic()

    def squarefree_part(self) -> "Poly":
        """p / gcd(p, p'): same roots, all simple."""
        if self.is_zero():
            return self
        g = self.gcd(self.derivative())
        return (self // g).primitive()


X = Poly([0, 1])
ONE = Poly([1])
