# -*- coding: utf-8 -*-
"""Test the input checks and serialization helpers."""
from fractions import Fraction

import numpy as np
import pytest

from setcross.config import config_context
from setcross.exceptions import CapacityError, PreconditionError
from setcross.utils import (
    STATISTICS,
    check_block_range,
    check_capacity,
    check_nonnegative_int,
    check_positive_int,
    check_statistic,
    rational_to_json,
    to_decimal_strings,
)


@pytest.mark.parametrize("value", [0, 3, np.int64(7)])
def test_check_nonnegative_int_accepts_integers(value):
    """Verify integers, numpy integers included, are returned as ``int``."""
    checked = check_nonnegative_int(value)
    msg = f"Expected {int(value)}, but returned {checked!r}."
    assert checked == int(value) and type(checked) is int, msg


@pytest.mark.parametrize("value", [-1, 2.0, "3", True, None])
def test_check_nonnegative_int_rejects(value):
    """Verify negative numbers, floats, strings and booleans are rejected."""
    with pytest.raises(PreconditionError):
        check_nonnegative_int(value)


def test_check_positive_int():
    """Verify zero is rejected and the parameter name appears in the message."""
    assert check_positive_int(1) == 1
    with pytest.raises(PreconditionError, match="count"):
        check_positive_int(0, "count")


@pytest.mark.parametrize("n, k", [(1, 1), (5, 1), (5, 5)])
def test_check_block_range_accepts(n, k):
    """Verify pairs with 1 <= k <= n pass through."""
    assert check_block_range(n, k) == (n, k)


@pytest.mark.parametrize("n, k", [(3, 4), (3, 0), (0, 0), (4, -1)])
def test_check_block_range_rejects(n, k):
    """Verify pairs outside 1 <= k <= n raise PreconditionError."""
    with pytest.raises(PreconditionError):
        check_block_range(n, k)


def test_check_statistic():
    """Verify only the linear and circular statistics are accepted."""
    assert STATISTICS == ("linear", "circular")
    for stat in STATISTICS:
        assert check_statistic(stat) == stat
    with pytest.raises(PreconditionError):
        check_statistic("global")


def test_precondition_error_is_value_error():
    """Verify callers catching ValueError also see precondition failures."""
    with pytest.raises(ValueError):
        check_positive_int(-2)


def test_check_capacity_follows_config():
    """Verify the limit is read from the active configuration."""
    assert check_capacity(12, "enumeration_limit") == 12
    with pytest.raises(CapacityError, match="enumeration_limit=12"):
        check_capacity(13, "enumeration_limit", "enumeration")
    with config_context(enumeration_limit=20):
        assert check_capacity(13, "enumeration_limit") == 20
    with config_context(series_limit=2):
        with pytest.raises(MemoryError):
            check_capacity(3, "series_limit")


def test_rational_to_json():
    """Verify exact rationals serialize as reduced decimal strings."""
    assert rational_to_json(None) is None
    assert rational_to_json(5) == {"num": "5", "den": "1"}
    assert rational_to_json(Fraction(-4, 6)) == {"num": "-2", "den": "3"}
    big = Fraction(10**40 + 1, 3)
    assert rational_to_json(big)["num"] == str(10**40 + 1)


def test_to_decimal_strings():
    """Verify big integers keep every digit."""
    values = [0, 2**100, np.int64(-3)]
    assert to_decimal_strings(values) == ["0", str(2**100), "-3"]
