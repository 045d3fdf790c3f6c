"""Exact real-root counting by Sturm sequences."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import List, Optional, Union

from .errors import ZeroPolynomialError
from .poly import Poly

__all__ = [
    "RealityCertificate",
    "sturm_chain",
    "sign_variations",
    "count_roots",
    "sturm_distinct_real_roots",
    "certify_all_real",
    "negativity_check",
]

INF = float("inf")
Point = Union[int, Fraction, float]


def _nonzero(p: Poly) -> None:
    if p.is_zero():
        raise ZeroPolynomialError("the zero polynomial has no finite root set")


def sturm_chain(p: Poly) -> List[Poly]:
    """p0 = p, p1 = p', p_{i+1} = -(p_{i-1} mod p_i).

    Each member is rescaled by a positive constant to keep integers small,
    which leaves every sign variation unchanged.
    """
    _nonzero(p)
    chain = [p.primitive()]
    d = p.derivative()
    if d.is_zero():
        return chain
    chain.append(d.primitive())
    while True:
        r = -(chain[-2] % chain[-1])
        if r.is_zero():
            return chain
        chain.append(r.primitive())


def _sign_at(p: Poly, x: Point) -> int:
    if x == INF:
        v = p.lead
    elif x == -INF:
        v = p.lead if (p.degree or 0) % 2 == 0 else -p.lead
    else:
        v = p(Fraction(x))
    return (v > 0) - (v < 0)


def sign_variations(chain: List[Poly], x: Point) -> int:
    signs = [s for s in (_sign_at(q, x) for q in chain) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(p: Poly, lo: Point = -INF, hi: Point = INF) -> int:
    """Distinct real roots of p in the half-open interval (lo, hi]."""
    _nonzero(p)
    chain = sturm_chain(p.squarefree_part())
    return sign_variations(chain, lo) - sign_variations(chain, hi)


def sturm_distinct_real_roots(p: Poly) -> int:
    return count_roots(p)


@dataclass(frozen=True)
class RealityCertificate:
    degree: int
    squarefree_degree: int
    distinct_real_roots: int
    all_real: bool
    positive_roots: Optional[int] = None

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def certify_all_real(p: Poly) -> RealityCertificate:
    _nonzero(p)
    sf = p.squarefree_part()
    chain = sturm_chain(sf)
    real = sign_variations(chain, -INF) - sign_variations(chain, INF)
    positive = sign_variations(chain, 0) - sign_variations(chain, INF)
    sf_deg = sf.degree or 0
    return RealityCertificate(
        degree=p.degree or 0,
        squarefree_degree=sf_deg,
        distinct_real_roots=real,
        all_real=real == sf_deg,
        positive_roots=positive,
    )


def negativity_check(p: Poly) -> bool:
    """True iff p has no root in (0, +inf)."""
    return count_roots(p, 0, INF) == 0
