from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from wreathrep.exactnum import (
    Cyclotomic,
    OrderMismatchError,
    arith,
    as_cyclotomic,
    conjugate,
    cyclotomic_from_json,
    cyclotomic_polynomial,
    cyclotomic_to_json,
    euler_phi,
    format_cyclotomic,
    zeta,
)

ORDERS = st.sampled_from([1, 2, 3, 4, 5, 6, 8, 12])
small = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def pairs(draw):
    d = draw(ORDERS)
    a = Cyclotomic(d, draw(st.lists(small, min_size=1, max_size=d + 2)))
    b = Cyclotomic(d, draw(st.lists(small, min_size=1, max_size=d + 2)))
    c = Cyclotomic(d, draw(st.lists(small, min_size=1, max_size=d + 2)))
    return a, b, c


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    assert [euler_phi(d) for d in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5, 6, 7, 8, 9, 12])
def test_roots_of_unity(d):
    z = zeta(d)
    assert z ** d == 1
    assert sum((zeta(d, k) for k in range(d)), Cyclotomic.rational(d, 0)) == (1 if d == 1 else 0)
    for k in range(1, d):
        assert z ** k != 1


def test_zeta_values():
    assert zeta(2) == -1
    assert zeta(4) ** 2 == -1
    assert zeta(3) + zeta(3, 2) == -1
    assert zeta(6) ** 2 == zeta(6, 2)
    assert zeta(6) ** 3 == -1


@given(pairs())
@settings(max_examples=60, deadline=None)
def test_field_axioms(abc):
    a, b, c = abc
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == 0
    if b:
        assert (a / b) * b == a
        assert b * b.inverse() == 1
    assert conjugate(conjugate(a)) == a
    assert conjugate(a * b) == conjugate(a) * conjugate(b)
    assert (a * conjugate(a)).conjugate() == a * conjugate(a)


def test_rational_interop_and_hash():
    half = Cyclotomic.rational(3, Fraction(1, 2))
    assert half == Fraction(1, 2)
    assert hash(half) == hash(Fraction(1, 2))
    assert half.is_rational() and not half.is_integer()
    assert Cyclotomic.rational(5, 3).is_integer()
    assert zeta(3) + Cyclotomic.rational(4, 1) == zeta(3) + 1


def test_order_mismatch():
    with pytest.raises(OrderMismatchError):
        zeta(3) + zeta(4)
    with pytest.raises(OrderMismatchError):
        as_cyclotomic(zeta(3), 4)
    with pytest.raises(ZeroDivisionError):
        zeta(3) / Cyclotomic.rational(3, 0)


def test_arith_helper():
    assert arith(Fraction(1, 2), Fraction(1, 3), "add") == Fraction(5, 6)
    assert arith(zeta(4), zeta(4), "mul") == -1


def test_format_and_json_roundtrip():
    assert format_cyclotomic(zeta(3)) == "z"
    assert format_cyclotomic(zeta(3, 2)) == "-1 - z"
    assert format_cyclotomic(Fraction(-3, 2)) == "-3/2"
    for x in [zeta(5, 3) * Fraction(2, 7), Cyclotomic.rational(4, -1), zeta(12, 5)]:
        assert cyclotomic_from_json(cyclotomic_to_json(x)) == x
    with pytest.raises(ValueError):
        cyclotomic_from_json({"d": 3, "coeffs": [[1, 1]]})
