# -*- coding: utf-8 -*-
"""Test the command line verbs, their output formats and exit codes."""
import csv
import io
import json
import logging
import sys

import pytest

from setcross.asymptotics import APPROX_CSV_HEADER
from setcross.cli import EXIT_CODES, hist_scale, run
from setcross.config import get_config
from setcross.distribution import pmf_global
from setcross.verification import _suite


def _run(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def _csv_rows(text):
    return list(csv.reader(io.StringIO(text)))


def test_dist_json_and_csv():
    """Verify T_(4,2) = 6 + q in both output formats."""
    code, text = _run("dist", "--n", "4", "--k", "2", "--method", "jr")
    assert code == EXIT_CODES["ok"]
    data = json.loads(text)
    assert data["coeffs"] == ["6", "1"]
    assert data["method"] == "jr"
    assert data["pmf"]["probs"] == [
        {"num": "6", "den": "7"},
        {"num": "1", "den": "7"},
    ]

    code, text = _run("dist", "--n", "4", "--k", "2", "--format", "csv")
    assert code == 0
    assert _csv_rows(text) == [
        ["value", "count", "probability"],
        ["0", "6", "6/7"],
        ["1", "1", "1/7"],
    ]


def test_dist_over_all_partitions():
    """Verify the global polynomial of [4] and the circular default method."""
    code, text = _run("dist", "--n", "4")
    assert code == 0
    data = json.loads(text)
    assert data["coeffs"] == ["14", "1"] and data["k"] is None
    code, text = _run("dist", "--n", "4", "--stat", "circular")
    assert json.loads(text)["method"] == "brute"


def test_moments_and_maxima():
    """Verify the moment and maxima reports."""
    code, text = _run("moments", "--n", "4", "--k", "2")
    assert code == 0
    data = json.loads(text)
    assert data["mean"] == {"num": "1", "den": "7"}
    assert data["variance"] == {"num": "6", "den": "49"}

    code, text = _run("moments", "--n", "4", "--method", "brute")
    assert json.loads(text)["variance"] == {"num": "14", "den": "225"}

    code, text = _run("maxima", "--n", "12", "--k", "3")
    assert code == 0
    assert json.loads(text)["max_value"] == "15"


def test_extremal_build():
    """Verify the Ferrers construction of (4, 2, 1)."""
    code, text = _run("extremal", "build", "--parts", "2,4,1")
    assert code == 0
    data = json.loads(text)
    assert data["parts"] == [4, 2, 1]
    assert data["partition"] == "1 4 6 7/2 5/3"
    assert data["linear"] == data["weight_linear"]
    assert data["circular"] == data["weight_circular"]


def test_approx_csv():
    """Verify approx emits one CSV row per grid value."""
    code, text = _run(
        "approx", "--formula", "stirling", "--grid", "4,10", "--k", "2"
    )
    assert code == 0
    rows = _csv_rows(text)
    assert rows[0] == list(APPROX_CSV_HEADER)
    assert [row[0] for row in rows[1:]] == ["4", "10"]
    assert rows[1][3:5] == ["7.0", "8.0"]
    assert all(row[-1] == "stirling" for row in rows[1:])


def test_sample_is_reproducible():
    """Verify seeded samples are byte-identical across runs."""
    argv = ("sample", "--n", "6", "--k", "3", "--count", "5", "--seed", "11")
    code, first = _run(*argv)
    assert code == 0
    assert first == _run(*argv)[1]
    lines = first.splitlines()
    assert len(lines) == 5
    assert all(line.count("/") == 2 for line in lines)


def test_sample_histogram():
    """Verify the histogram counts add up to the number of draws."""
    code, text = _run(
        "sample", "--n", "8", "--count", "300", "--seed", "3", "--histogram"
    )
    assert code == 0
    rows = _csv_rows(text)
    assert rows[0] == ["value", "count"]
    assert sum(int(count) for _, count in rows[1:]) == 300


def test_hist_normalized_support():
    """Verify --normalize divides the support by a_10 = 12."""
    assert hist_scale(10) == 12
    code, text = _run("hist", "--n", "10", "--normalize")
    assert code == 0
    rows = _csv_rows(text)[1:]
    pmf = pmf_global(10)
    assert len(rows) == len(pmf.support)
    for (x, prob), value, exact in zip(rows, pmf.support, pmf.probs):
        assert abs(float(x) - value / 12) < 1e-10
        assert abs(float(prob) - float(exact)) < 1e-10

    code, _ = _run("hist", "--n", "3", "--normalize")
    assert code == EXIT_CODES["usage"]


def test_verify(monkeypatch):
    """Verify passing and failing verification runs."""
    code, text = _run("verify", "--check", "figure_example", "--check", "g_monotone")
    assert code == 0
    assert json.loads(text)["passed"] is True

    monkeypatch.setattr(_suite, "FIGURE_PARTITION", "1 3/2 4")
    code, text = _run("verify", "--check", "figure_example")
    assert code == EXIT_CODES["verification"]
    assert json.loads(text)["passed"] is False


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["dist"],
        ["dist", "--n", "3", "--k", "5"],
        ["dist", "--n", "4", "--method", "fast"],
        ["extremal", "build", "--parts", "2,x"],
        ["sample", "--n", "4", "--seed", "-1"],
        ["approx", "--formula", "stirling", "--grid", "10"],
        ["verify", "--level", "thorough"],
    ],
)
def test_usage_errors_exit_1(argv, capsys):
    """Verify bad command lines and preconditions exit with code 1."""
    code, _ = _run(*argv)
    assert code == EXIT_CODES["usage"]
    assert capsys.readouterr().err


def test_capacity_error_exits_3():
    """Verify exceeding the enumeration limit exits with code 3."""
    code, _ = _run("dist", "--n", "13", "--k", "3", "--method", "brute")
    assert code == EXIT_CODES["capacity"]


def test_config_file(tmp_path):
    """Verify --config settings apply to one run only."""
    before = get_config()["enumeration_limit"]
    config_file = tmp_path / "setcross.toml"
    config_file.write_text("enumeration_limit = 5\n")
    argv = ("dist", "--n", "6", "--k", "3", "--method", "brute")
    code, _ = _run("--config", str(config_file), *argv)
    assert code == EXIT_CODES["capacity"]
    assert get_config()["enumeration_limit"] == before
    assert _run(*argv)[0] == 0

    bad_file = tmp_path / "bad.toml"
    bad_file.write_text("no_such_setting = 1\n")
    code, _ = _run("--config", str(bad_file), *argv)
    assert code == EXIT_CODES["usage"]
    code, _ = _run("--config", str(tmp_path / "missing.toml"), *argv)
    assert code == EXIT_CODES["usage"]


def test_help_exits_0(capsys):
    """Verify --help prints usage and succeeds."""
    assert run(["--help"]) == 0
    assert "usage: setcross" in capsys.readouterr().out


def test_runs_survive_a_closed_stderr(monkeypatch):
    """Verify each run logs to the current stderr and leaves no handler behind."""
    package_logger = logging.getLogger("setcross")
    handlers = list(package_logger.handlers)
    first = io.StringIO()
    monkeypatch.setattr(sys, "stderr", first)
    assert _run("dist", "--n", "4", "--k", "2")[0] == 0
    first.close()

    second = io.StringIO()
    monkeypatch.setattr(sys, "stderr", second)
    code, _ = _run("dist", "--n", "3", "--k", "5")
    assert code == EXIT_CODES["usage"]
    assert second.getvalue()
    assert _run("--log-level", "DEBUG", "dist", "--n", "4", "--k", "2")[0] == 0
    assert package_logger.handlers == handlers
