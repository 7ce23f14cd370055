# -*- coding: utf-8 -*-
"""Test Laurent polynomial and rational function arithmetic."""
import math

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from setcross.exceptions import DivisibilityError
from setcross.qpoly import (
    LaurentPoly,
    RationalFn,
    exact_div,
    gaussian_binomial,
    poly_gcd,
    q_factorial,
    q_integer,
)

laurent_polys = st.builds(
    LaurentPoly,
    st.lists(st.integers(min_value=-6, max_value=6), max_size=5),
    st.integers(min_value=-3, max_value=3),
)
nonzero_laurent_polys = laurent_polys.filter(lambda p: not p.is_zero())


@given(a=laurent_polys, b=laurent_polys, c=laurent_polys)
def test_ring_axioms_hold(a, b, c):
    """Verify associativity, commutativity and distributivity."""
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == LaurentPoly.zero()


@settings(max_examples=200)
@given(a=laurent_polys, b=nonzero_laurent_polys)
def test_exact_div_inverts_multiplication(a, b):
    """Verify exact_div(a * b, b) returns a."""
    quotient = exact_div(a * b, b)
    msg = "`exact_div` did not undo a multiplication.\n"
    msg += f"Expected {a}, but returned {quotient}."
    assert quotient == a, msg


@given(a=laurent_polys, x=st.integers(min_value=-3, max_value=3))
def test_evaluate_is_ring_homomorphism(a, x):
    """Verify evaluation at a nonzero point respects products and sums."""
    if x == 0:
        return
    b = LaurentPoly([1, x, -2], min_exp=-1)
    assert (a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x)
    assert (a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x)


def test_zero_has_unique_representation():
    """Verify trimming gives the zero polynomial a single form."""
    zero = LaurentPoly([0, 0, 0], min_exp=-4)
    assert zero == LaurentPoly.zero()
    assert zero.min_exp == 0 and zero.coeffs == ()
    assert zero.degree is None
    assert LaurentPoly([0, 2, 0], min_exp=-1) == LaurentPoly.constant(2)


@pytest.mark.parametrize(
    "j,expected",
    [(0, LaurentPoly.zero()), (1, LaurentPoly.one()), (3, LaurentPoly([1, 1, 1]))],
)
def test_q_integer(j, expected):
    """Verify q-integers are 1 + q + ... + q^(j-1)."""
    assert q_integer(j) == expected


@pytest.mark.parametrize(
    "j,expected",
    [
        (0, LaurentPoly.one()),
        (2, LaurentPoly([1, 1])),
        (3, LaurentPoly([1, 2, 2, 1])),
    ],
)
def test_q_factorial(j, expected):
    """Verify q-factorials are products of q-integers."""
    assert q_factorial(j) == expected


def test_gaussian_binomial_examples():
    """Verify known Gaussian binomial coefficients and boundary values."""
    assert gaussian_binomial(4, 2) == LaurentPoly([1, 1, 2, 1, 1])
    assert gaussian_binomial(7, 0) == LaurentPoly.one()
    assert gaussian_binomial(3, 5).is_zero()
    assert gaussian_binomial(3, -1).is_zero()


@pytest.mark.parametrize("i", range(21))
def test_gaussian_binomial_at_one_is_binomial(i):
    """Verify Gaussian binomials specialize to ordinary binomials at q = 1."""
    values = [gaussian_binomial(i, j).evaluate(1) for j in range(i + 1)]
    expected = [math.comb(i, j) for j in range(i + 1)]
    msg = f"Gaussian binomials of row {i} do not specialize at q = 1.\n"
    msg += f"Expected {expected}, but returned {values}."
    assert values == expected, msg


@pytest.mark.parametrize("i", range(11))
def test_gaussian_binomial_matches_factorial_quotient(i):
    """Verify the recurrence agrees with the defining quotient."""
    for j in range(i + 1):
        quotient = exact_div(q_factorial(i), q_factorial(j) * q_factorial(i - j))
        assert gaussian_binomial(i, j) == quotient


def test_exact_div_examples():
    """Verify the documented exact quotients."""
    assert exact_div(LaurentPoly([1, 0, -1]), LaurentPoly([1, -1])) == LaurentPoly(
        [1, 1]
    )
    p = LaurentPoly([3, -1, 4], min_exp=-2)
    assert exact_div(p, 1) == p
    assert exact_div(q_factorial(3), q_integer(2)) == q_integer(3)


def test_exact_div_raises_on_remainder():
    """Verify a nonzero remainder raises DivisibilityError."""
    with pytest.raises(DivisibilityError):
        exact_div(LaurentPoly([1, 0, 1]), LaurentPoly([1, 1]))
    with pytest.raises(DivisibilityError):
        exact_div(LaurentPoly([1, 1]), LaurentPoly([1, 2]))
    with pytest.raises(ZeroDivisionError):
        exact_div(LaurentPoly([1, 1]), 0)


def test_poly_gcd_finds_common_factor():
    """Verify the integer gcd of two products with a shared factor."""
    a = LaurentPoly([1, 1]) * LaurentPoly([1, 2])
    b = LaurentPoly([1, 1]) * LaurentPoly([1, -1]) * LaurentPoly.monomial(-3)
    assert poly_gcd(a, b) == LaurentPoly([1, 1])
    assert poly_gcd(LaurentPoly([2, 4]), LaurentPoly([3])) == LaurentPoly.one()


def test_json_form_uses_decimal_strings():
    """Verify the JSON form of a Laurent polynomial."""
    big = 10**30
    p = LaurentPoly([big, 0, -1], min_exp=-2)
    data = p.to_json()
    assert data == {"minExp": -2, "coeffs": [str(big), "0", "-1"]}
    assert LaurentPoly.from_json(data) == p


def test_rational_function_normalization_is_canonical():
    """Verify equal fractions share one representation."""
    one_minus_q = LaurentPoly([1, -1])
    first = RationalFn(LaurentPoly([1, 0, -1]), one_minus_q)
    assert first.is_polynomial()
    assert first.to_laurent() == LaurentPoly([1, 1])

    second = RationalFn(LaurentPoly([2, 2]), LaurentPoly([0, 4, 4]))
    third = RationalFn(LaurentPoly.monomial(-1), 2)
    assert second == third
    assert (second.num, second.den) == (third.num, third.den)

    fourth = RationalFn(LaurentPoly([-3]), LaurentPoly([3, -3]))
    assert fourth.den.coeffs[-1] > 0
    assert fourth == RationalFn(1, LaurentPoly([-1, 1]))


def test_rational_function_arithmetic():
    """Verify sums, differences and quotients of rational functions."""
    one_minus_q = LaurentPoly([1, -1])
    a = RationalFn(1, one_minus_q)
    b = RationalFn(LaurentPoly.monomial(1), one_minus_q)
    assert a + b == RationalFn(LaurentPoly([1, 1]), one_minus_q)
    assert (a - a).num.is_zero()
    assert (a * one_minus_q).to_laurent() == LaurentPoly.one()
    assert (b / a).to_laurent() == LaurentPoly.monomial(1)
    assert RationalFn(q_integer(2) ** 3, q_factorial(2)).to_laurent() == LaurentPoly(
        [1, 2, 1]
    )
    with pytest.raises(ZeroDivisionError):
        a / RationalFn(0)
    with pytest.raises(ValueError):
        a.to_laurent()
