# -*- coding: utf-8 -*-
# copyright: setcross developers, BSD-3-Clause License (see LICENSE file)
"""Named cross-method checks run by ``setcross verify``.

Every check compares two independent computations of the same quantity, or a
computed quantity against a proven bound. The ``quick`` level runs every check
on smaller sizes; the ``full`` level runs them on the sizes the library is
released against.
"""
from __future__ import annotations

import logging
import time
from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, List, NamedTuple, Optional, Tuple

import numpy as np
from scipy.stats import chisquare

from setcross.asymptotics import (
    approx_report,
    as_mpf,
    gaussian_distance,
    var_global_approx,
)
from setcross.crossings import cr, cr_circular, cr_linear, z_decompose
from setcross.distribution import (
    Pmf,
    lemma_series_identities,
    t_poly,
    t_poly_brute,
    t_poly_jr,
    t_poly_ksz,
    t_table_series,
)
from setcross.exactnum import bell, catalan, narayana
from setcross.exceptions import FormulaVerificationError, PreconditionError
from setcross.extremal import (
    build_pi,
    g_sequence,
    lambda_star,
    max_block,
    max_global,
    maximizer_count,
    maximizer_count_global,
    maximizer_shapes,
    move_delta,
    nonconsecutive_pairs,
    weight,
    weights_RT,
)
from setcross.moments import (
    mean_diff_circular,
    moment_report,
    var_diff_bound,
    var_global_linear,
)
from setcross.partitions import enumerate_all, integer_partitions
from setcross.sampling import UniformPartitionSampler

__all__: List[str] = [
    "LEVELS",
    "CheckResult",
    "VerificationSummary",
    "list_checks",
    "run_verification",
]
__author__: List[str] = ["RNKuhns"]

logger = logging.getLogger(__name__)

LEVELS: Tuple[str, str] = ("quick", "full")

FIGURE_PARTITION = "1 10/2 3 7 9/4/5 6 12/8 11"

_SIZES: Dict[str, Dict[str, Any]] = {
    "quick": {
        "four_way": 6,
        "noncrossing": 15,
        "enumerated_moments": 7,
        "polynomial_moments": 15,
        "degree": 15,
        "extremal_enumeration": 7,
        "construction": 15,
        "weights": 12,
        "moves": 10,
        "monotone": 200,
        "sandwich": 7,
        "z_property": 6,
        "series_order": 6,
        "bounds": 7,
        "linear_trend": (12, 18, 24, 30),
        "circular_trend": (7, 9),
        "global_trend": (8, 10, 12),
        "sampler_draws": 20_000,
    },
    "full": {
        "four_way": 9,
        "noncrossing": 30,
        "enumerated_moments": 9,
        "polynomial_moments": 30,
        "degree": 30,
        "extremal_enumeration": 10,
        "construction": 30,
        "weights": 25,
        "moves": 15,
        "monotone": 200,
        "sandwich": 9,
        "z_property": 8,
        "series_order": 10,
        "bounds": 9,
        "linear_trend": (12, 18, 24, 30),
        "circular_trend": (7, 9),
        "global_trend": (8, 10, 12),
        "sampler_draws": 1_000_000,
    },
}


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named check.

    Parameters
    ----------
    name : str
    passed : bool
    detail : str
        What was covered, or the first disagreement found.
    """

    name: str
    passed: bool
    detail: str

    def to_json(self) -> Dict[str, Any]:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass(frozen=True)
class VerificationSummary:
    """All check results of one verification run."""

    level: str
    results: Tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    @property
    def failures(self) -> List[CheckResult]:
        return [result for result in self.results if not result.passed]

    def to_json(self) -> Dict[str, Any]:
        return {
            "level": self.level,
            "passed": self.passed,
            "checks": [result.to_json() for result in self.results],
        }


class _Check(NamedTuple):
    name: str
    func: Callable[[Dict[str, Any]], str]


_CHECKS: List[_Check] = []


def _register(name: str) -> Callable:
    def decorator(func: Callable[[Dict[str, Any]], str]):
        _CHECKS.append(_Check(name, func))
        return func

    return decorator


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise FormulaVerificationError(message)


@_register("figure_example")
def _figure_example(sizes: Dict[str, Any]) -> str:
    linear = cr_linear(FIGURE_PARTITION)
    circular = cr_circular(FIGURE_PARTITION)
    _require(
        (linear, circular) == (4, 9),
        f"{FIGURE_PARTITION} has crossings ({linear}, {circular}), expected (4, 9).",
    )
    return f"{FIGURE_PARTITION}: linear 4, circular 9"


@_register("four_way_agreement")
def _four_way_agreement(sizes: Dict[str, Any]) -> str:
    nmax = sizes["four_way"]
    table = t_table_series(nmax)
    for n in range(1, nmax + 1):
        for k in range(1, n + 1):
            reference = t_poly_brute(n, k).poly
            candidates = {
                "ksz": t_poly_ksz(n, k).poly,
                "jr": t_poly_jr(n, k).poly,
                "series": table[(n, k)].poly,
            }
            for method, poly in candidates.items():
                _require(
                    poly == reference,
                    f"T_({n},{k}) by {method} is {poly}, enumeration gives "
                    f"{reference}.",
                )
    return f"ksz, jr, series and enumeration agree for n <= {nmax}"


@_register("noncrossing_counts")
def _noncrossing_counts(sizes: Dict[str, Any]) -> str:
    nmax = sizes["noncrossing"]
    for n in range(1, nmax + 1):
        constants = [t_poly_jr(n, k).poly.coefficient(0) for k in range(1, n + 1)]
        for k, constant in enumerate(constants, start=1):
            _require(
                constant == narayana(n, k),
                f"[q^0] T_({n},{k}) = {constant}, expected N({n},{k}).",
            )
        _require(sum(constants) == catalan(n), f"Noncrossing total of [{n}].")
    return f"Narayana and Catalan constant terms for n <= {nmax}"


def _same_moments(left, right) -> bool:
    if left.mean != right.mean:
        return False
    if left.variance is None or right.variance is None:
        return True
    return (left.variance, left.second_factorial) == (
        right.variance,
        right.second_factorial,
    )


@_register("moment_closed_forms")
def _moment_closed_forms(sizes: Dict[str, Any]) -> str:
    enumerated = sizes["enumerated_moments"]
    for n in range(1, enumerated + 1):
        for k in [None, *range(1, n + 1)]:
            for stat in ("linear", "circular"):
                closed = moment_report(n, k, stat)
                brute = moment_report(n, k, stat, method="brute")
                _require(
                    _same_moments(closed, brute),
                    f"Closed form {closed} disagrees with enumeration {brute}.",
                )
    derived = sizes["polynomial_moments"]
    for n in range(1, derived + 1):
        for k in [None, *range(1, n + 1)]:
            closed = moment_report(n, k)
            from_poly = moment_report(n, k, method="from_poly")
            _require(
                _same_moments(closed, from_poly),
                f"Closed form {closed} disagrees with {from_poly}.",
            )
    return (
        f"enumeration for n <= {enumerated}, polynomial derivatives for "
        f"n <= {derived}"
    )


@_register("worked_rationals")
def _worked_rationals(sizes: Dict[str, Any]) -> str:
    block = moment_report(4, 2)
    whole = moment_report(4)
    expected = [
        (block.mean, Fraction(1, 7)),
        (moment_report(4, 2, "circular").mean, Fraction(1, 7)),
        (block.variance, Fraction(6, 49)),
        (whole.mean, Fraction(1, 15)),
        (whole.variance, Fraction(14, 225)),
    ]
    for value, target in expected:
        _require(value == target, f"Worked value {value} should be {target}.")
    return "E and Var at (4, 2) and over Pi_4"


@_register("degree_law")
def _degree_law(sizes: Dict[str, Any]) -> str:
    nmax = sizes["degree"]
    for n in range(1, nmax + 1):
        for k in range(1, n + 1):
            degree = t_poly(n, k).degree
            _require(
                degree == max_block(n, k),
                f"deg T_({n},{k}) = {degree}, maximum is {max_block(n, k)}.",
            )
    return f"deg T_(n,k) equals the linear maximum for n <= {nmax}"


@_register("extremal_enumeration")
def _extremal_enumeration(sizes: Dict[str, Any]) -> str:
    nmax = sizes["extremal_enumeration"]
    for n in range(1, nmax + 1):
        values = defaultdict(list)
        for p in enumerate_all(n):
            values[p.k].append((cr_linear(p), cr_circular(p)))
        tops = [0, 0]
        linear_counts = {}
        for k, pairs in values.items():
            for index, stat in enumerate(("linear", "circular")):
                top = max(pair[index] for pair in pairs)
                tops[index] = max(tops[index], top)
                _require(
                    top == max_block(n, k, stat),
                    f"Enumerated {stat} maximum of ({n},{k}) is {top}.",
                )
            best = max_block(n, k)
            linear_counts[k] = sum(1 for x, _ in pairs if x == best)
            _require(
                linear_counts[k] == maximizer_count(n, k),
                f"({n},{k}) has {linear_counts[k]} linear maximizers.",
            )
        for index, stat in enumerate(("linear", "circular")):
            _require(
                tops[index] == max_global(n, stat),
                f"Enumerated global {stat} maximum of [{n}] is {tops[index]}.",
            )
        top_count = sum(
            count for k, count in linear_counts.items() if max_block(n, k) == tops[0]
        )
        _require(
            top_count == maximizer_count_global(n),
            f"[{n}] has {top_count} global linear maximizers.",
        )
    return f"maxima and linear maximizer counts for n <= {nmax}"


@_register("construction_optimality")
def _construction_optimality(sizes: Dict[str, Any]) -> str:
    nmax = sizes["construction"]
    for n in range(1, nmax + 1):
        for k in range(1, n + 1):
            linear = cr_linear(build_pi(lambda_star(n, k)))
            _require(
                linear == max_block(n, k),
                f"pi(lambda*_({n},{k})) has {linear} linear crossings.",
            )
            target = max_block(n, k, "circular")
            for shape in maximizer_shapes(n, k, "circular"):
                circular = cr_circular(build_pi(shape))
                _require(
                    circular == target,
                    f"pi({shape}) has {circular} circular crossings, not {target}.",
                )
    return f"Ferrers construction attains both maxima for n <= {nmax}"


@_register("weights_identity")
def _weights_identity(sizes: Dict[str, Any]) -> str:
    nmax = sizes["weights"]
    for n in range(1, nmax + 1):
        for lam in integer_partitions(n):
            r_weight, t_linear, t_circular = weights_RT(lam)
            _require(
                weight(lam, "linear") == r_weight - t_linear
                and weight(lam, "circular") == r_weight - t_circular,
                f"M = R - T fails at {lam}.",
            )
    return f"M = R - T for every shape with n <= {nmax}"


@_register("move_deltas")
def _move_deltas(sizes: Dict[str, Any]) -> str:
    nmax = sizes["moves"]
    moves = 0
    for n in range(1, nmax + 1):
        for lam in integer_partitions(n):
            before = weights_RT(lam)
            for u, v in nonconsecutive_pairs(lam):
                move = move_delta(lam, u, v)
                after = weights_RT(move.partition)
                _require(
                    (move.delta_R, move.delta_T_linear, move.delta_T_circular)
                    == (
                        after.R - before.R,
                        after.T_linear - before.T_linear,
                        after.T_circular - before.T_circular,
                    ),
                    f"Move ({u}, {v}) on {lam} predicts the wrong deltas.",
                )
                moves += 1
    return f"{moves} moves with n <= {nmax}"


@_register("g_monotone")
def _g_monotone(sizes: Dict[str, Any]) -> str:
    nmax = sizes["monotone"]
    for n in range(1, nmax + 1):
        values = g_sequence(n)
        _require(
            all(a < b for a, b in zip(values, values[1:])),
            f"g_{n}(k) is not strictly increasing.",
        )
    return f"g_n strictly increasing for n <= {nmax}"


@_register("sandwich")
def _sandwich(sizes: Dict[str, Any]) -> str:
    nmax = sizes["sandwich"]
    for n in range(1, nmax + 1):
        for p in enumerate_all(n):
            linear, circular = cr_linear(p), cr_circular(p)
            _require(
                linear <= circular <= linear + 2 * p.k * (p.k - 1),
                f"{p} has crossings ({linear}, {circular}).",
            )
    return f"linear <= circular <= linear + 2k(k-1) for n <= {nmax}"


@_register("z_property")
def _z_property(sizes: Dict[str, Any]) -> str:
    nmax = sizes["z_property"]
    for n in range(1, nmax + 1):
        for p in enumerate_all(n):
            for stat in ("linear", "circular"):
                total = sum(z_decompose(p, stat).values())
                _require(
                    total == cr(p, stat),
                    f"Pairwise {stat} crossings of {p} sum to {total}.",
                )
    return f"pairwise decomposition for n <= {nmax}"


@_register("series_identities")
def _series_identities(sizes: Dict[str, Any]) -> str:
    order = sizes["series_order"]
    identities = lemma_series_identities(order)
    failed = [name for name, holds in identities.items() if not holds]
    _require(not failed, f"Series identities {failed} fail to order {order}.")
    return f"{', '.join(sorted(identities))} to order {order}"


@_register("difference_bounds")
def _difference_bounds(sizes: Dict[str, Any]) -> str:
    nmax = sizes["bounds"]
    for n in range(1, nmax + 1):
        overall: Counter = Counter()
        by_k: Dict[int, Counter] = defaultdict(Counter)
        for p in enumerate_all(n):
            diff = cr_circular(p) - cr_linear(p)
            overall[diff] += 1
            by_k[p.k][diff] += 1
        for k, counts in by_k.items():
            mean = Pmf.from_counts(counts).mean()
            _require(
                mean == mean_diff_circular(n, k) and 0 <= mean <= 2 * k * (k - 1),
                f"E(Y - X) at ({n},{k}) is {mean}.",
            )
        variance = Pmf.from_counts(overall).variance()
        _require(
            variance <= var_diff_bound(n),
            f"Var(Y_{n} - X_{n}) = {variance} exceeds {var_diff_bound(n)}.",
        )
    return f"E(Y - X) and Var(Y - X) bounds for n <= {nmax}"


def _decreasing(values: List[float]) -> bool:
    return all(a > b for a, b in zip(values, values[1:]))


@_register("gaussian_trends")
def _gaussian_trends(sizes: Dict[str, Any]) -> str:
    trends = {
        "linear k=3": [
            gaussian_distance(n, 3).kolmogorov_distance
            for n in sizes["linear_trend"]
        ],
        "circular k=3": [
            gaussian_distance(n, 3, "circular").kolmogorov_distance
            for n in sizes["circular_trend"]
        ],
        "global linear": [
            gaussian_distance(n).kolmogorov_distance for n in sizes["global_trend"]
        ],
    }
    for label, distances in trends.items():
        _require(
            _decreasing(distances),
            f"Kolmogorov distances for {label} do not decrease: {distances}.",
        )
    return "Kolmogorov distance to the normal decreases in n"


@_register("asymptotic_sanity")
def _asymptotic_sanity(sizes: Dict[str, Any]) -> str:
    error = approx_report("mean_block", 500, 5).abs_err
    _require(error < 1e-3, f"Mean approximation error at (500, 5) is {error}.")
    errors = [approx_report("stirling", n, 3).rel_err for n in (20, 40, 80)]
    _require(
        _decreasing(errors), f"k^n/k! relative errors do not decrease: {errors}."
    )
    ratios = {
        n: as_mpf(var_global_linear(n)) / var_global_approx(n) for n in (100, 200, 500)
    }
    for n in (200, 500):
        relative = ratios[n] / ratios[100]
        _require(
            0.5 < relative < 2,
            f"Var(X_{n}) left the factor-2 calibration band: {relative}.",
        )
    return "block mean, k^n/k! and Var(X_n) calibration"


@_register("sampler_uniformity")
def _sampler_uniformity(sizes: Dict[str, Any]) -> str:
    draws = sizes["sampler_draws"]
    first = UniformPartitionSampler(n=6, seed=2024)
    second = UniformPartitionSampler(n=6, seed=2024)
    head = [p.rgs for p in first.sample_many(100)]
    _require(
        head == [p.rgs for p in second.sample_many(100)],
        "Equal seeds gave different samples.",
    )
    counts = Counter(p.rgs for p in first.sample_many(draws))
    observed = np.zeros(bell(6))
    observed[: len(counts)] = list(counts.values())
    pvalue = float(chisquare(observed).pvalue)
    _require(pvalue > 1e-6, f"Chi-square p-value {pvalue} over Pi_6.")
    return f"{draws} draws over Pi_6, chi-square p-value {pvalue:.4f}"


def list_checks() -> List[str]:
    """Names of the registered checks, in run order.

    Examples
    --------
    >>> from setcross.verification import list_checks
    >>> list_checks()[:3]
    ['figure_example', 'four_way_agreement', 'noncrossing_counts']
    """
    return [check.name for check in _CHECKS]


def run_verification(
    level: str = "quick", names: Optional[List[str]] = None
) -> VerificationSummary:
    """Run the registered checks at a level.

    Parameters
    ----------
    level : {"quick", "full"}, default="quick"
        Size preset of every check.
    names : list of str, default=None
        Restrict the run to these checks; None runs all of them.

    Returns
    -------
    summary : VerificationSummary
        One result per check, in run order. A check fails on a disagreement
        (``AssertionError``) or an inexact division (``ArithmeticError``);
        capacity and precondition errors propagate.

    Raises
    ------
    PreconditionError
        If `level` or a name is unknown.

    Examples
    --------
    >>> from setcross.verification import run_verification
    >>> summary = run_verification("quick", names=["figure_example"])
    >>> summary.passed, summary.results[0].detail
    (True, '1 10/2 3 7 9/4/5 6 12/8 11: linear 4, circular 9')
    """
    if level not in LEVELS:
        raise PreconditionError(
            f"level must be one of {', '.join(LEVELS)}, got {level!r}."
        )
    selected = _CHECKS
    if names is not None:
        unknown = sorted(set(names) - set(list_checks()))
        if unknown:
            raise PreconditionError(f"Unknown checks: {', '.join(unknown)}.")
        selected = [check for check in _CHECKS if check.name in names]

    sizes = _SIZES[level]
    results = []
    for check in selected:
        start = time.perf_counter()
        try:
            detail = check.func(sizes)
            passed = True
        except (AssertionError, ArithmeticError) as error:
            detail = str(error)
            passed = False
        elapsed = time.perf_counter() - start
        if passed:
            logger.info("Check %s passed in %.2fs: %s", check.name, elapsed, detail)
        else:
            logger.error("Check %s failed in %.2fs: %s", check.name, elapsed, detail)
        results.append(CheckResult(check.name, passed, detail))
    return VerificationSummary(level, tuple(results))
