"""Row polynomials phi_n(x) = sum_k {n||k} x^k."""

from __future__ import annotations

from typing import List

from .errors import PreconditionError
from .poly import ONE, X, Poly
from .triangle import Params

__all__ = ["phi", "phi_sequence", "phi_product_form"]


def phi_sequence(params: Params, max_n: int) -> List[Poly]:
    """phi_0..phi_max_n via the derivative recurrence

    phi_{n+1} = ((alpha n + gamma) + (alpha' n + beta' + gamma') x) phi_n + (beta + beta' x) x phi_n'
    """
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    p = params
    shift = Poly([p.beta, p.beta_prime]) * X
    out = [ONE]
    for n in range(max_n):
        cur = out[-1]
        lin = Poly([p.alpha * n + p.gamma, p.alpha_prime * n + p.beta_prime + p.gamma_prime])
        out.append(lin * cur + shift * cur.derivative())
    return out


def phi(params: Params, n: int) -> Poly:
    return phi_sequence(params, n)[n]


def phi_product_form(params: Params, n: int) -> Poly:
    """prod_{j<n} ((alpha j + gamma) + (alpha' j + gamma') x), valid when beta = beta' = 0."""
    if params.beta != 0 or params.beta_prime != 0:
        raise PreconditionError("product form needs beta = beta' = 0")
    if n < 0:
        raise ValueError("n must be >= 0")
    out = ONE
    for j in range(n):
        out = out * Poly([params.alpha * j + params.gamma, params.alpha_prime * j + params.gamma_prime])
    return out
