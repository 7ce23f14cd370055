# -*- coding: utf-8 -*-
"""Test the exact moment closed forms against polynomials and enumeration."""
from fractions import Fraction
from functools import lru_cache

import pytest

from setcross.crossings import cr
from setcross.distribution import Pmf
from setcross.exactnum import bell, stirling2
from setcross.exceptions import PreconditionError
from setcross.moments import (
    mean_block_circular,
    mean_block_linear,
    mean_diff_circular,
    mean_diff_circular_upper,
    mean_global_circular,
    mean_global_linear,
    moment_report,
    second_factorial_block,
    second_factorial_global,
    var_block_linear,
    var_diff_bound,
    var_global_linear,
)
from setcross.partitions import enumerate_all


@lru_cache(maxsize=None)
def _enumerated(n):
    """Counts of (linear, circular) crossing pairs by block count."""
    by_k = {}
    for p in enumerate_all(n):
        key = (cr(p, "linear"), cr(p, "circular"))
        cell = by_k.setdefault(p.k, {})
        cell[key] = cell.get(key, 0) + 1
    return by_k


def _pmf(counts, index):
    values = {}
    for key, count in counts.items():
        values[key[index]] = values.get(key[index], 0) + count
    return Pmf.from_counts(values)


def _merged(n):
    merged = {}
    for cell in _enumerated(n).values():
        for key, count in cell.items():
            merged[key] = merged.get(key, 0) + count
    return merged


@pytest.mark.parametrize("n", range(1, 10))
def test_block_closed_forms_match_enumeration(n):
    """Verify the per-block closed forms equal enumeration moments."""
    for k, cell in _enumerated(n).items():
        linear = _pmf(cell, 0)
        circular = _pmf(cell, 1)
        msg = f"E(X_({n},{k})) disagrees with enumeration. "
        msg += f"Expected {linear.mean()}, but returned {mean_block_linear(n, k)}."
        assert mean_block_linear(n, k) == linear.mean(), msg
        assert var_block_linear(n, k) == linear.variance()
        assert second_factorial_block(n, k) == linear.moment(2) - linear.mean()
        msg = f"E(Y_({n},{k})) disagrees with enumeration. "
        msg += f"Expected {circular.mean()}, but returned {mean_block_circular(n, k)}."
        assert mean_block_circular(n, k) == circular.mean(), msg


@pytest.mark.parametrize("n", range(1, 10))
def test_global_closed_forms_match_enumeration(n):
    """Verify the Bell-ratio closed forms equal enumeration moments."""
    merged = _merged(n)
    linear = _pmf(merged, 0)
    assert mean_global_linear(n) == linear.mean()
    assert second_factorial_global(n) == linear.moment(2) - linear.mean()
    assert var_global_linear(n) == linear.variance()
    assert mean_global_circular(n) == _pmf(merged, 1).mean()


def test_closed_forms_match_polynomial_derivatives():
    """Verify closed forms equal derivatives of the jr polynomials for n <= 30."""
    for n in range(1, 31):
        for k in range(1, n + 1):
            closed = moment_report(n, k)
            derived = moment_report(n, k, method="from_poly")
            assert closed.mean == derived.mean
            assert closed.second_factorial == derived.second_factorial
            assert closed.variance == derived.variance
        assert moment_report(n).mean == moment_report(n, method="from_poly").mean


def test_total_expectation():
    """Verify E(X_n) averages E(X_{n,k}) with Stirling weights for n <= 30."""
    for n in range(1, 31):
        mean = sum(
            (stirling2(n, k) * mean_block_linear(n, k) for k in range(1, n + 1)),
            Fraction(0),
        )
        second = sum(
            (stirling2(n, k) * second_factorial_block(n, k) for k in range(1, n + 1)),
            Fraction(0),
        )
        assert mean / bell(n) == mean_global_linear(n)
        assert second / bell(n) == second_factorial_global(n)


def test_worked_values():
    """Verify small exact moments."""
    assert mean_block_linear(4, 2) == mean_block_circular(4, 2) == Fraction(1, 7)
    assert var_block_linear(4, 2) == Fraction(6, 49)
    assert mean_global_linear(4) == Fraction(1, 15)
    assert var_global_linear(4) == Fraction(14, 225)
    assert second_factorial_global(4) == 0
    assert second_factorial_block(4, 2) == 0
    assert mean_global_linear(1) == mean_global_linear(3) == 0
    assert var_global_linear(1) == 0
    for n in range(1, 15):
        for k in (1, n):
            assert mean_block_linear(n, k) == 0
            assert mean_block_circular(n, k) == 0
            assert var_block_linear(n, k) == 0
            assert second_factorial_block(n, k) == 0


def test_circular_linear_difference():
    """Verify the mean difference lies in [0, 2k(k-1)] and below its upper bound."""
    for n in range(1, 31):
        for k in range(1, n + 1):
            diff = mean_diff_circular(n, k)
            assert diff == mean_block_circular(n, k) - mean_block_linear(n, k)
            assert 0 <= diff <= 2 * k * (k - 1)
            assert diff <= mean_diff_circular_upper(n, k)
    assert mean_diff_circular(4, 2) == 0


@pytest.mark.parametrize("n", range(1, 10))
def test_var_diff_bound_dominates(n):
    """Verify the weighted Bell bound exceeds the enumerated Var(Y_n - X_n)."""
    counts = {}
    for (linear, circular), count in _merged(n).items():
        counts[circular - linear] = counts.get(circular - linear, 0) + count
    variance = Pmf.from_counts(counts).variance()
    msg = f"Var(Y_{n} - X_{n}) exceeds its bound. "
    msg += f"Expected at most {var_diff_bound(n)}, but returned {variance}."
    assert variance <= var_diff_bound(n), msg


def test_moment_report():
    """Verify report contents, JSON and argument checks."""
    report = moment_report(4, 2)
    assert report.to_json() == {
        "n": 4,
        "k": 2,
        "stat": "linear",
        "method": "closed_form",
        "mean": {"num": "1", "den": "7"},
        "variance": {"num": "6", "den": "49"},
        "secondFactorial": {"num": "0", "den": "1"},
    }
    circular = moment_report(5, 3, "circular")
    assert circular.variance is None
    assert circular.mean == moment_report(5, 3, "circular", "brute").mean
    assert moment_report(5, 3, "circular", "from_poly").variance == (
        moment_report(5, 3, "circular", "brute").variance
    )
    with pytest.raises(PreconditionError):
        moment_report(4, 2, method="sampled")
    with pytest.raises(PreconditionError):
        moment_report(4, 5)
