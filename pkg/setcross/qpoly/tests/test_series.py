# -*- coding: utf-8 -*-
"""Test truncated series arithmetic."""
import pytest

from setcross.base import clone
from setcross.config import config_context
from setcross.exceptions import CapacityError, NotInvertibleError, PreconditionError
from setcross.qpoly import LaurentPoly, TruncatedSeries, q_integer, series_ops

Q = LaurentPoly.monomial(1)


def test_geometric_series():
    """Verify the reciprocal of 1 - t is 1 + t + t^2 + t^3 at order 3."""
    ops = series_ops(3)
    inverse = ops.reciprocal(ops.from_terms({(0, 0): 1, (1, 0): -1}))
    expected = ops.from_terms({(m, 0): 1 for m in range(4)})
    msg = "Reciprocal of 1 - t is not the geometric series.\n"
    msg += f"Expected {expected}, but returned {inverse}."
    assert inverse == expected, msg


def test_product_of_linear_factors():
    """Verify (1 + a t)(1 + q t) = 1 + (a + q) t + a q t^2."""
    ops = series_ops(4)
    product = ops.mul(
        ops.from_terms({(0, 0): 1, (1, 1): 1}), ops.from_terms({(0, 0): 1, (1, 0): Q})
    )
    expected = ops.from_terms({(0, 0): 1, (1, 1): 1, (1, 0): Q, (2, 1): Q})
    assert product == expected
    assert product.coefficient(2, 1) == Q
    assert product.coefficient(3, 0).is_zero()


def test_reciprocal_of_q_linear_factor():
    """Verify 1 / (1 - [2]_q t) = 1 + (1 + q) t + (1 + q)^2 t^2 at order 2."""
    ops = series_ops(2)
    two = q_integer(2)
    inverse = ops.reciprocal(ops.from_terms({(0, 0): 1, (1, 0): -two}))
    assert [inverse.coefficient(m) for m in range(3)] == [1, two, two * two]


def test_divide_linear_agrees_with_reciprocal():
    """Verify the (1 - c t) division recurrence matches multiplying by 1/(1 - c t)."""
    ops = series_ops(5)
    c = {0: q_integer(3), 1: LaurentPoly([0, -1], min_exp=-2)}
    x = ops.from_terms({(0, 0): 1, (2, 1): Q, (3, 0): -2})
    denominator = ops.from_terms({(0, 0): 1, (1, 0): -c[0], (1, 1): -c[1]})
    assert ops.divide_linear(x, c) == ops.mul(x, ops.reciprocal(denominator))


def test_reciprocal_times_series_is_one():
    """Verify x * (1 / x) = 1 for a series with unit constant term."""
    ops = series_ops(6)
    x = ops.from_terms({(0, 0): -LaurentPoly.monomial(-2), (1, 1): 3, (4, 0): Q})
    assert ops.mul(x, ops.reciprocal(x)) == ops.one()


@pytest.mark.parametrize("constant", [2, LaurentPoly([1, 1]), 0])
def test_reciprocal_rejects_non_unit_constant_term(constant):
    """Verify only unit monomial constant terms are invertible."""
    ops = series_ops(2)
    with pytest.raises(NotInvertibleError):
        ops.reciprocal(ops.from_terms({(0, 0): constant, (1, 0): 1}))


def test_reciprocal_rejects_constant_term_with_a():
    """Verify a constant term involving a is not invertible."""
    ops = series_ops(2)
    with pytest.raises(NotInvertibleError):
        ops.reciprocal(ops.from_terms({(0, 0): 1, (0, 1): 1}))


def test_a_degree_truncation():
    """Verify a context with max_a_degree drops higher powers of a."""
    ops = series_ops(4, max_a_degree=1)
    x = ops.from_terms({(0, 0): 1, (1, 1): 1})
    square = ops.mul(x, x)
    assert square.coefficient(2, 2).is_zero()
    assert square.coefficient(1, 1) == 2


def test_results_are_truncated_at_order():
    """Verify no power of t beyond the order survives."""
    ops = series_ops(2)
    x = ops.from_terms({(0, 0): 1, (1, 0): 1, (5, 0): 7})
    cube = ops.mul(ops.mul(x, x), x)
    assert cube.order == 2
    assert cube.coefficient(3).is_zero()
    assert [cube.coefficient(m) for m in range(3)] == [1, 3, 3]


def test_series_values_support_operators():
    """Verify operator arithmetic on the immutable values."""
    x = TruncatedSeries(3, [{0: 1}, {0: 1}])
    y = TruncatedSeries(2, [{0: 1}, {0: -1}])
    product = x * y
    assert product.order == 2
    assert [product.coefficient(m) for m in range(3)] == [1, 0, -1]
    assert (x - x).is_zero()
    assert (x + 1).coefficient(0) == 2


def test_series_ops_validates_order():
    """Verify negative orders and orders above series_limit are rejected."""
    with pytest.raises(PreconditionError):
        series_ops(-1)
    with config_context(series_limit=3):
        with pytest.raises(CapacityError):
            series_ops(4)


def test_series_context_is_parametric():
    """Verify the context exposes and clones its parameters."""
    ops = series_ops(3, max_a_degree=2)
    assert ops.get_params() == {"max_a_degree": 2, "order": 3}
    assert clone(ops).get_params() == ops.get_params()
