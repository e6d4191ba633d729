from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sdhall.coefficients import ContextError, Laurent, QSqrt, vpow

fracs = st.fractions(max_denominator=50).filter(lambda f: abs(f) < 1000)
primes = st.sampled_from([2, 3, 5])


@st.composite
def qsqrt(draw, q=None):
    q = q if q is not None else draw(primes)
    return QSqrt(draw(fracs), draw(fracs), q)


def test_vpow_small_values():
    assert vpow(0, 2) == 1
    assert vpow(2, 2) == 2
    assert vpow(-2, 3) == Fraction(1, 3)
    assert vpow(1, 2) == QSqrt(0, 1, 2)
    assert vpow(-1, 2) == QSqrt(0, Fraction(1, 2), 2)
    assert vpow(1, 2) * vpow(1, 2) == 2


@given(st.integers(-12, 12), st.integers(-12, 12), primes)
def test_vpow_is_a_homomorphism(m, n, q):
    assert vpow(m, q) * vpow(n, q) == vpow(m + n, q)


@given(primes.flatmap(lambda q: st.tuples(qsqrt(q), qsqrt(q), qsqrt(q))))
def test_field_axioms(xyz):
    x, y, z = xyz
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x and x * y == y * x
    assert x - x == 0
    if x:
        assert x * x.inv() == 1
        assert y / x * x == y


@given(qsqrt())
def test_json_round_trip(x):
    assert QSqrt.from_json(x.to_json(), x.q) == x
    assert hash(QSqrt.from_json(x.to_json(), x.q)) == hash(x)


def test_mixed_fields_raise():
    with pytest.raises(ContextError):
        QSqrt(1, 1, 2) + QSqrt(1, 1, 3)
    with pytest.raises(ContextError):
        vpow(1, 2) * vpow(1, 3)


def test_perfect_square_folds_surd():
    x = QSqrt(1, 1, 4)
    assert x.is_rational() and x == 3
    assert vpow(1, 4) == 2


def test_zero_inverse_raises():
    with pytest.raises(ZeroDivisionError):
        QSqrt.zero(2).inv()


def test_rational_equality_and_hash():
    assert QSqrt(3, 0, 2) == 3
    assert hash(QSqrt(3, 0, 2)) == hash(3)
    assert QSqrt(3, 1, 2) != 3


@given(st.lists(st.tuples(fracs, st.integers(-8, 8)), max_size=10), primes)
def test_laurent_matches_direct_sum(terms, q):
    acc = Laurent()
    direct = QSqrt.zero(q)
    for c, n in terms:
        acc.add(c, n)
        direct = direct + QSqrt.scaled_vpow(c, n, q)
    assert acc.value(q) == direct
