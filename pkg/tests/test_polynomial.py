"""Tests for src/algebra/polynomial.py."""

import pytest

from src.algebra.monomial import Monomial
from src.algebra.polynomial import ONE, ZERO, Polynomial, normalize, parse_polynomial
from src.errors import ParseError

X = Polynomial.from_monomial(Monomial.variable(0))
Y = Polynomial.from_monomial(Monomial.variable(1))


def test_like_terms_collect_and_cancel():
    assert (X - X).is_zero()
    assert X + X == X.scale(2)
    assert normalize([(1, Monomial.one()), (-1, Monomial.one())]) == ZERO


def test_product_difference_of_squares():
    assert ((X - Y) * (X + Y)).format() == "x1^2 - x2^2"


def test_multiplication_by_zero_and_one():
    assert (X * ZERO).is_zero()
    assert X * ONE == X


def test_term_accessors():
    p = X.scale(3) + ONE
    assert not p.is_term()
    assert p.coefficient(Monomial.variable(0)) == 3
    assert p.coefficient(Monomial.variable(1)) == 0
    assert X.is_term()


def test_parse_polynomial_signs_and_coefficients():
    p = parse_polynomial("2*x^2*y - 3*z + 1", ["x", "y", "z"])
    assert p.coefficient(Monomial.from_dict({0: 2, 1: 1})) == 2
    assert p.coefficient(Monomial.variable(2)) == -3
    assert p.coefficient(Monomial.one()) == 1


def test_parse_polynomial_leading_minus():
    assert parse_polynomial("-x + x", ["x"]).is_zero()


def test_parse_polynomial_rejects_dangling_sign():
    with pytest.raises(ParseError):
        parse_polynomial("x +", ["x"])
    with pytest.raises(ParseError):
        parse_polynomial("", ["x"])
