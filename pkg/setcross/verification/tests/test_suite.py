# -*- coding: utf-8 -*-
"""Test the verification runner and its checks."""
import pytest

from setcross.config import config_context
from setcross.exceptions import CapacityError, PreconditionError
from setcross.verification import LEVELS, list_checks, run_verification
from setcross.verification import _suite

CHEAP_CHECKS = [
    "figure_example",
    "worked_rationals",
    "weights_identity",
    "move_deltas",
    "g_monotone",
    "sandwich",
    "z_property",
    "series_identities",
    "difference_bounds",
]


def test_checks_are_registered_once():
    """Verify every check has a unique name and both levels size it."""
    names = list_checks()
    assert len(names) == len(set(names)) == 18
    assert LEVELS == ("quick", "full")
    assert set(_suite._SIZES["quick"]) == set(_suite._SIZES["full"])


def test_cheap_checks_pass():
    """Verify the cheap quick checks pass and report in the requested order."""
    summary = run_verification("quick", names=CHEAP_CHECKS)
    assert summary.passed, [r.detail for r in summary.failures]
    assert [r.name for r in summary.results] == CHEAP_CHECKS
    as_json = summary.to_json()
    assert as_json["level"] == "quick" and as_json["passed"] is True
    assert len(as_json["checks"]) == len(CHEAP_CHECKS)


def test_failing_check_is_reported(monkeypatch):
    """Verify a disagreement fails its check without stopping the run."""
    monkeypatch.setattr(_suite, "FIGURE_PARTITION", "1 3/2 4")
    summary = run_verification("quick", names=["figure_example", "g_monotone"])
    assert not summary.passed
    assert [r.name for r in summary.failures] == ["figure_example"]
    assert "expected (4, 9)" in summary.failures[0].detail
    assert summary.results[1].passed


def test_capacity_errors_propagate():
    """Verify a lowered enumeration limit surfaces as a CapacityError."""
    with config_context(enumeration_limit=4):
        with pytest.raises(CapacityError):
            run_verification("quick", names=["sandwich"])


def test_invalid_arguments_raise():
    """Verify unknown levels and check names are rejected."""
    with pytest.raises(PreconditionError):
        run_verification("thorough")
    with pytest.raises(PreconditionError):
        run_verification("quick", names=["no_such_check"])


@pytest.mark.slow
def test_quick_level_passes():
    """Verify every check passes at the quick level."""
    summary = run_verification("quick")
    assert summary.passed, [r.detail for r in summary.failures]
    assert len(summary.results) == len(list_checks())


def test_gaussian_trends_pass_at_both_levels():
    """Verify the distance trends hold and both levels use the same sizes."""
    for key in ("linear_trend", "circular_trend", "global_trend"):
        assert _suite._SIZES["quick"][key] == _suite._SIZES["full"][key]
    summary = run_verification("quick", names=["gaussian_trends"])
    assert summary.passed, [r.detail for r in summary.failures]
