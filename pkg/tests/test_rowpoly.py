import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperbinomial.errors import PreconditionError
from hyperbinomial.poly import ONE, X, Poly
from hyperbinomial.rowpoly import phi, phi_product_form, phi_sequence
from hyperbinomial.sturm import certify_all_real, negativity_check
from hyperbinomial.triangle import BINOMIAL, Params, compute_table
from strategies import nonneg_rationals, params

COUNTER = Params.of(3, 1, 1, 0, 1, 0)


def test_counterexample_phi3():
    assert phi(COUNTER, 3) == 2 * (X + 1) * (3 * X**2 + 12 * X + 14)
    cert = certify_all_real(phi(COUNTER, 3))
    assert not cert.all_real
    assert (cert.degree, cert.distinct_real_roots) == (3, 1)


def test_examples():
    assert phi(Params.of(5, -2, 3, 1, 1, 7), 0) == ONE
    assert phi(BINOMIAL, 4) == (ONE + X) ** 4
    assert phi_product_form(BINOMIAL, 3) == (ONE + X) ** 3
    assert phi_product_form(Params.of(2, 0, 5, 3, 0, 1), 0) == ONE


@given(params(), st.integers(0, 12))
def test_coefficients_are_table_rows(p, n):
    t = compute_table(p, n)
    seq = phi_sequence(p, n)
    for m in range(n + 1):
        assert seq[m] == Poly(t.rows[m])
        assert seq[m].is_zero() or seq[m].degree <= m


@given(params(alpha=st.just(Fraction(1)), alpha_prime=st.just(Fraction(1)), beta=st.just(Fraction(0)), beta_prime=st.just(Fraction(0))), st.integers(0, 10))
def test_product_form_matches(p, n):
    assert phi_product_form(p, n) == phi(p, n)


def test_product_form_guard():
    with pytest.raises(PreconditionError):
        phi_product_form(Params.of(1, 1, 1, 1, 0, 1), 2)


@given(params(beta_prime=st.just(Fraction(0)), alpha=nonneg_rationals, beta=nonneg_rationals, gamma=nonneg_rationals, alpha_prime=nonneg_rationals, gamma_prime=nonneg_rationals))
def test_real_rootedness_theorem(p):
    for n, poly in enumerate(phi_sequence(p, 10)):
        if poly.is_zero():
            continue
        assert certify_all_real(poly).all_real, (p, n)
        assert negativity_check(poly), (p, n)


def test_degree_law():
    rng = random.Random(7)
    for _ in range(20):
        # strictly positive primed parameters keep the leading coefficient alive
        p = Params.of(*(Fraction(rng.randint(1, 9), rng.randint(1, 5)) for _ in range(6)))
        assert all(q.degree == n for n, q in enumerate(phi_sequence(p, 8)))
