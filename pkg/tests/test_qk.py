from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperbinomial.errors import PreconditionError
from hyperbinomial.exact import binomial
from hyperbinomial.poly import ONE, X, Poly
from hyperbinomial.qk import (
    QkSpec,
    density,
    gosper_certificate_check,
    gosper_g,
    inner_sum,
    inner_sum_closed,
    qk_form1,
    qk_form2,
    qk_form3,
    qk_recurrence,
    qk_sequence,
)
from fixtures import QK_N5

SAMPLE_X = [Fraction(1, 10), Fraction(1, 3), Fraction(1, 2), Fraction(9, 10)]


def test_n5_sequence():
    assert [list(q.coeffs) for q in qk_sequence(5, 7)] == QK_N5


def test_examples():
    assert qk_recurrence(QkSpec(5, 0)) == ONE - X**5
    assert qk_recurrence(QkSpec(5, 1)) == Poly([1, 0, 0, 0, -5, 4])
    assert qk_recurrence(QkSpec(5, 7)).is_zero()
    assert qk_form1(QkSpec(5, 2)) == Poly([1, 0, 0, -10, 15, -6])
    assert qk_form2(QkSpec(5, 4)) == Poly([1, -5, 10, -10, 5, -1])
    assert qk_form3(QkSpec(5, 3)) == Poly([1, 0, -10, 20, -15, 4])
    for n in range(8):
        assert qk_form1(QkSpec(n, 0)) == ONE - X**n
        assert qk_form3(QkSpec(n, n)).is_zero()
    assert qk_form2(QkSpec(5, 5)).is_zero()
    assert all(qk_form1(QkSpec(5, k)).is_zero() for k in range(5, 9))


@pytest.mark.parametrize("n", range(21))
def test_four_forms_agree(n):
    seq = qk_sequence(n, n + 5)
    for k in range(n + 4):
        spec = QkSpec(n, k)
        assert seq[k] == qk_form1(spec) == qk_form2(spec) == qk_form3(spec)
    assert all(q.is_zero() for q in seq[n:])


@pytest.mark.parametrize("k", range(6))
def test_cdf_structure(k):
    for x in SAMPLE_X:
        vals = [qk_form3(QkSpec(n, k))(x) for n in range(k, 30)]
        assert all(a <= b for a, b in zip(vals, vals[1:]))
        assert all(0 <= v <= 1 for v in vals)
        assert all(density(m, k)(x) >= 0 for m in range(k, 30))


@pytest.mark.parametrize("n", range(16))
def test_density_partial_sums(n):
    for k in range(n + 1):
        total = sum((density(m, k) for m in range(k, n)), Poly())
        assert total == qk_form3(QkSpec(n, k))


def test_density_examples():
    assert density(3, 3) == (ONE - X) ** 4
    assert density(4, 2)(Fraction(1, 3)) == 6 * Fraction(1, 9) * Fraction(8, 27) == Fraction(16, 81)
    with pytest.raises(PreconditionError):
        density(2, 3)


@pytest.mark.parametrize("k, r, jmax", [(2, 3, 6), (0, 1, 4), (4, 7, 10)])
def test_gosper_examples(k, r, jmax):
    assert gosper_certificate_check(k, r, jmax)


def test_gosper_g_against_factorial_definition():
    # g_{n-k} closes the inner sum: compare the two spellings of the closed value
    for n in range(1, 10):
        for k in range(n):
            for r in range(1, n + 1):
                assert gosper_g(n - k, k, r) == inner_sum_closed(n, k, r)


@given(st.integers(0, 10), st.integers(1, 15))
def test_certificate_differences(k, r):
    js = range(16)
    diffs = [gosper_g(j + 1, k, r) - gosper_g(j, k, r) for j in js]
    summands = [(-1) ** j * binomial(k + 1, r - j) * binomial(k + j, j) for j in js]
    assert diffs == summands
    assert gosper_certificate_check(k, r, 15)


def test_telescoped_inner_sum():
    for n in range(1, 13):
        for k in range(n):
            for r in range(1, n + 1):
                assert inner_sum(n, k, r) == inner_sum_closed(n, k, r)


def test_precondition_errors():
    with pytest.raises(PreconditionError):
        gosper_certificate_check(1, 0, 3)
    with pytest.raises(PreconditionError):
        QkSpec(-1, 0)
