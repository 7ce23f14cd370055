# -*- coding: utf-8 -*-
# copyright: setcross developers, BSD-3-Clause License (see LICENSE file)
"""Utility functions to perform input checks."""
from __future__ import annotations

import numbers
from typing import Any, Optional, Tuple

from setcross.config import get_config  # type: ignore
from setcross.exceptions import CapacityError, PreconditionError

__all__ = [
    "STATISTICS",
    "check_block_range",
    "check_capacity",
    "check_nonnegative_int",
    "check_positive_int",
    "check_statistic",
]
__author__ = ["RNKuhns"]

STATISTICS: Tuple[str, str] = ("linear", "circular")


def check_nonnegative_int(value: Any, name: str = "n") -> int:
    """Validate that `value` is an integer greater than or equal to 0.

    Parameters
    ----------
    value : any type
        The value to check. Booleans are rejected.
    name : str, default="n"
        Name used in the error message.

    Returns
    -------
    value : int
        The validated value as a Python ``int``.

    Raises
    ------
    PreconditionError
        If `value` is not a nonnegative integer.

    Examples
    --------
    >>> from setcross.utils import check_nonnegative_int
    >>> check_nonnegative_int(0)
    0
    """
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise PreconditionError(f"{name} must be an integer, got {value!r}.")
    if value < 0:
        raise PreconditionError(f"{name} must be nonnegative, got {value}.")
    return int(value)


def check_positive_int(value: Any, name: str = "n") -> int:
    """Validate that `value` is an integer greater than or equal to 1.

    Parameters
    ----------
    value : any type
        The value to check.
    name : str, default="n"
        Name used in the error message.

    Returns
    -------
    value : int
        The validated value.

    Raises
    ------
    PreconditionError
        If `value` is not a positive integer.
    """
    value = check_nonnegative_int(value, name)
    if value < 1:
        raise PreconditionError(f"{name} must be at least 1, got {value}.")
    return value


def check_block_range(n: Any, k: Any) -> Tuple[int, int]:
    """Validate a ground-set size and a block count with ``1 <= k <= n``.

    Parameters
    ----------
    n : int
        Ground-set size.
    k : int
        Number of blocks.

    Returns
    -------
    n, k : tuple of int
        The validated pair.

    Raises
    ------
    PreconditionError
        If ``k`` is outside ``1..n``.

    Examples
    --------
    >>> from setcross.utils import check_block_range
    >>> check_block_range(4, 2)
    (4, 2)
    """
    n = check_positive_int(n, "n")
    k = check_positive_int(k, "k")
    if k > n:
        raise PreconditionError(f"k must satisfy 1 <= k <= n, got n={n}, k={k}.")
    return n, k


def check_statistic(stat: Any) -> str:
    """Validate a crossing statistic name.

    Parameters
    ----------
    stat : str
        Either "linear" or "circular".

    Returns
    -------
    stat : str
        The validated statistic name.
    """
    if stat not in STATISTICS:
        raise PreconditionError(
            f"stat must be one of {', '.join(STATISTICS)}, got {stat!r}."
        )
    return stat


def check_capacity(value: int, config_key: str, what: Optional[str] = None) -> int:
    """Raise :class:`CapacityError` if `value` exceeds a configured limit.

    Parameters
    ----------
    value : int
        The requested size.
    config_key : str
        Name of the limit in :mod:`setcross.config`.
    what : str, default=None
        Description of the computation used in the error message.

    Returns
    -------
    limit : int
        The limit that was checked against.
    """
    limit = get_config()[config_key]
    if value > limit:
        label = what if what is not None else config_key
        msg = f"{label} requested for size {value}, above the configured "
        msg += f"{config_key}={limit}. Raise it with set_config or a config file."
        raise CapacityError(msg)
    return limit
