# -*- coding: utf-8 -*-
# copyright: setcross developers, BSD-3-Clause License (see LICENSE file)
"""Side-by-side reports of exact values and their asymptotic approximations."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Tuple, Union

import mpmath

from setcross.asymptotics._approx import (
    as_mpf,
    bell_central_diff,
    bell_central_diff_approx,
    bell_consecutive_diff,
    bell_consecutive_diff_approx,
    bell_ratio,
    bell_ratio_approx,
    bell_ratio_shift,
    bell_ratio_shift_approx,
    mean_block_approx,
    mean_global_approx,
    stirling_approx,
    var_block_approx,
    var_global_approx,
)
from setcross.config import get_config
from setcross.exactnum import stirling2
from setcross.exceptions import PreconditionError
from setcross.moments import (
    mean_block_circular,
    mean_block_linear,
    mean_global_circular,
    mean_global_linear,
    moment_report,
    var_block_linear,
    var_global_linear,
)
from setcross.utils._check import check_statistic

__all__: List[str] = [
    "APPROX_CSV_HEADER",
    "FORMULAS",
    "ApproxReport",
    "approx_report",
]
__author__: List[str] = ["RNKuhns"]

APPROX_CSV_HEADER: Tuple[str, ...] = (
    "n",
    "k",
    "stat",
    "exact",
    "approx",
    "absErr",
    "relErr",
    "formulaTag",
)

Exact = Union[int, Fraction, mpmath.mpf]


@dataclass(frozen=True)
class ApproxReport:
    """An exact value next to its leading-term approximation.

    Parameters
    ----------
    n : int
    k : int or None
    stat : str
    exact : int, Fraction or mpf
    approx : mpf
    formula : str
        Tag from :data:`FORMULAS` naming the approximation.
    """

    n: int
    k: Optional[int]
    stat: str
    exact: Exact
    approx: mpmath.mpf
    formula: str

    @property
    def abs_err(self) -> mpmath.mpf:
        """``|approx - exact|``."""
        with mpmath.workdps(get_config()["float_digits"]):
            return abs(self.approx - as_mpf(self.exact))

    @property
    def rel_err(self) -> Optional[mpmath.mpf]:
        """``|approx - exact| / |exact|``; None when the exact value is 0."""
        exact = as_mpf(self.exact)
        if exact == 0:
            return None
        with mpmath.workdps(get_config()["float_digits"]):
            return self.abs_err / abs(exact)

    def to_csv_row(self, digits: int = 12) -> List[str]:
        """Row matching :data:`APPROX_CSV_HEADER` with `digits` significant digits."""
        rel_err = self.rel_err
        return [
            str(self.n),
            "" if self.k is None else str(self.k),
            self.stat,
            mpmath.nstr(as_mpf(self.exact), digits),
            mpmath.nstr(self.approx, digits),
            mpmath.nstr(self.abs_err, digits),
            "" if rel_err is None else mpmath.nstr(rel_err, digits),
            self.formula,
        ]

    def to_json(self) -> Dict[str, Any]:
        """JSON form with 30-digit decimal strings."""
        return dict(zip(APPROX_CSV_HEADER, self.to_csv_row(digits=30)))


def _needs_k(k: Optional[int], tag: str) -> int:
    if k is None:
        raise PreconditionError(f"Formula {tag!r} needs a block count k.")
    return k


def _linear_only(stat: str, tag: str) -> None:
    if stat != "linear":
        raise PreconditionError(f"Formula {tag!r} is only exact for linear crossings.")


def _stirling(n, k, stat, s, t, u):
    k = _needs_k(k, "stirling")
    return stirling2(n, k), stirling_approx(n, k)


def _mean_block(n, k, stat, s, t, u):
    k = _needs_k(k, "mean_block")
    exact = mean_block_linear if stat == "linear" else mean_block_circular
    return exact(n, k), mean_block_approx(n, k, stat)


def _var_block(n, k, stat, s, t, u):
    k = _needs_k(k, "var_block")
    if stat == "linear":
        exact = var_block_linear(n, k)
    else:
        exact = moment_report(n, k, stat, "brute").variance
    return exact, var_block_approx(n, k, stat)


def _mean_global(n, k, stat, s, t, u):
    exact = mean_global_linear if stat == "linear" else mean_global_circular
    return exact(n), mean_global_approx(n)


def _var_global(n, k, stat, s, t, u):
    _linear_only(stat, "var_global")
    return var_global_linear(n), var_global_approx(n)


FORMULAS: Dict[str, Callable[..., Tuple[Exact, mpmath.mpf]]] = {
    "stirling": _stirling,
    "mean_block": _mean_block,
    "var_block": _var_block,
    "mean_global": _mean_global,
    "var_global": _var_global,
    "bell_ratio": lambda n, k, stat, s, t, u: (
        bell_ratio(n, s, t),
        bell_ratio_approx(n, s, t),
    ),
    "bell_ratio_shift": lambda n, k, stat, s, t, u: (
        bell_ratio_shift(n, s, t),
        bell_ratio_shift_approx(n, s, t),
    ),
    "bell_central_diff": lambda n, k, stat, s, t, u: (
        bell_central_diff(n, u),
        bell_central_diff_approx(n, u),
    ),
    "bell_consecutive_diff": lambda n, k, stat, s, t, u: (
        bell_consecutive_diff(n, u),
        bell_consecutive_diff_approx(n, u),
    ),
}


def approx_report(
    formula: str,
    n: int,
    k: Optional[int] = None,
    stat: str = "linear",
    s: int = 1,
    t: int = 1,
    u: int = 0,
) -> ApproxReport:
    """Compare an exact value with its approximation.

    Parameters
    ----------
    formula : str
        Key of :data:`FORMULAS`.
    n : int
        Ground-set size.
    k : int, default=None
        Number of blocks, required by the per-block formulas.
    stat : {"linear", "circular"}, default="linear"
        Crossing statistic for the moment formulas.
    s, t, u : int
        Shifts of the Bell-number formulas.

    Returns
    -------
    report : ApproxReport

    Examples
    --------
    >>> from setcross.asymptotics import approx_report
    >>> report = approx_report("stirling", 4, 2)
    >>> report.exact, float(report.approx), float(report.abs_err)
    (7, 8.0, 1.0)
    >>> report.to_csv_row(digits=4)
    ['4', '2', 'linear', '7.0', '8.0', '1.0', '0.1429', 'stirling']
    """
    if formula not in FORMULAS:
        raise PreconditionError(
            f"formula must be one of {', '.join(FORMULAS)}, got {formula!r}."
        )
    stat = check_statistic(stat)
    exact, approx = FORMULAS[formula](n, k, stat, s, t, u)
    return ApproxReport(n, k, stat, exact, approx, formula)
