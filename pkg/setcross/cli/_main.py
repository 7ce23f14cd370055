# -*- coding: utf-8 -*-
# copyright: setcross developers, BSD-3-Clause License (see LICENSE file)
"""The ``setcross`` command line.

Exit codes are 0 on success, 1 for usage and precondition errors, 2 for
failed verifications and internal assertion failures, and 3 when a configured
capacity limit is exceeded.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, TextIO, Tuple

import mpmath

from setcross.asymptotics import APPROX_CSV_HEADER, FORMULAS, approx_report, as_mpf
from setcross.config import config_context, load_config_file
from setcross.crossings import cr_circular, cr_linear
from setcross.distribution import (
    Pmf,
    pmf_block,
    pmf_global,
    t_poly,
    t_poly_global,
)
from setcross.exactnum import binomial
from setcross.exceptions import (
    CapacityError,
    ConfigurationError,
    DegenerateDistributionError,
    DivisibilityError,
    PartitionValidationError,
    PreconditionError,
)
from setcross.extremal import build_pi, maxima_report, weight
from setcross.moments import MOMENT_METHODS, moment_report
from setcross.sampling import SamplerConfig, crossing_histogram
from setcross.utils import STATISTICS, to_decimal_strings
from setcross.verification import LEVELS, list_checks, run_verification

__all__: List[str] = ["EXIT_CODES", "build_parser", "hist_scale", "main", "run"]
__author__: List[str] = ["RNKuhns"]

logger = logging.getLogger(__name__)

EXIT_CODES: Dict[str, int] = {
    "ok": 0,
    "usage": 1,
    "verification": 2,
    "capacity": 3,
}

DIST_METHODS = ("ksz", "jr", "series", "brute")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


class UsageError(Exception):
    """Raised by the parser instead of exiting on a bad command line."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def _int_list(text: str) -> List[int]:
    try:
        return [int(item) for item in text.split(",") if item.strip()]
    except ValueError:
        msg = f"expected integers separated by commas: {text!r}"
        raise argparse.ArgumentTypeError(msg)


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with one sub-command per verb."""
    parser = _Parser(
        prog="setcross",
        description="Exact crossing statistics of set partitions.",
    )
    parser.add_argument("--config", help="TOML file of key = value settings.")
    parser.add_argument(
        "--log-level", default="WARNING", choices=LOG_LEVELS, dest="log_level"
    )
    verbs = parser.add_subparsers(dest="verb", required=True)

    def add_size(sub: argparse.ArgumentParser, k_help: str) -> None:
        sub.add_argument("--n", type=int, required=True, help="Ground-set size.")
        sub.add_argument("--k", type=int, default=None, help=k_help)
        sub.add_argument("--stat", default="linear", choices=STATISTICS)

    dist = verbs.add_parser("dist", help="Crossing polynomial and its pmf.")
    add_size(dist, "Number of blocks; omit for all partitions.")
    dist.add_argument("--method", default=None, choices=DIST_METHODS)
    dist.add_argument("--format", default="json", choices=("json", "csv"))
    dist.set_defaults(handler=_dist)

    moments = verbs.add_parser("moments", help="Exact mean and variance.")
    add_size(moments, "Number of blocks; omit for all partitions.")
    moments.add_argument("--method", default="closed_form", choices=MOMENT_METHODS)
    moments.set_defaults(handler=_moments)

    maxima = verbs.add_parser("maxima", help="Maximal crossing number.")
    add_size(maxima, "Number of blocks; omit for all partitions.")
    maxima.set_defaults(handler=_maxima)

    extremal = verbs.add_parser("extremal", help="Ferrers construction.")
    extremal_verbs = extremal.add_subparsers(dest="action", required=True)
    build = extremal_verbs.add_parser("build", help="Build pi(lambda).")
    build.add_argument("--parts", type=_int_list, required=True)
    build.set_defaults(handler=_extremal_build)

    approx = verbs.add_parser("approx", help="Exact against asymptotic values.")
    approx.add_argument("--formula", required=True, choices=sorted(FORMULAS))
    approx.add_argument("--grid", type=_int_list, required=True)
    approx.add_argument("--k", type=int, default=None)
    approx.add_argument("--stat", default="linear", choices=STATISTICS)
    approx.add_argument("--s", type=int, default=1)
    approx.add_argument("--t", type=int, default=1)
    approx.add_argument("--u", type=int, default=0)
    approx.add_argument("--digits", type=int, default=12)
    approx.set_defaults(handler=_approx)

    sample = verbs.add_parser("sample", help="Uniform random partitions.")
    add_size(sample, "Number of blocks; omit for all partitions.")
    sample.add_argument("--count", type=int, default=1)
    sample.add_argument("--seed", type=int, required=True)
    sample.add_argument(
        "--histogram",
        action="store_true",
        help="Emit counts of crossing numbers instead of the partitions.",
    )
    sample.set_defaults(handler=_sample)

    hist = verbs.add_parser("hist", help="Exact pmf as (x, Pr) pairs.")
    add_size(hist, "Number of blocks; omit for all partitions.")
    hist.add_argument("--normalize", action="store_true")
    hist.add_argument("--digits", type=int, default=12)
    hist.set_defaults(handler=_hist)

    verify = verbs.add_parser("verify", help="Run the cross-method checks.")
    verify.add_argument("--level", default="quick", choices=LEVELS)
    verify.add_argument(
        "--check", action="append", default=None, choices=list_checks()
    )
    verify.set_defaults(handler=_verify)
    return parser


def _write_json(data: Any, out: TextIO) -> None:
    out.write(json.dumps(data, indent=2))
    out.write("\n")


def _write_csv(header: Sequence[str], rows: Sequence[Sequence[Any]], out: TextIO):
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def _dist(args: argparse.Namespace, out: TextIO) -> int:
    if args.k is None:
        poly = t_poly_global(args.n, args.stat, args.method)
        coeffs = poly.dense_coeffs()
        pmf = Pmf.from_counts(dict(poly.terms()))
        method = args.method or ("jr" if args.stat == "linear" else "brute")
    else:
        dist_poly = t_poly(args.n, args.k, args.method, args.stat)
        coeffs = dist_poly.coeffs
        pmf = dist_poly.to_pmf()
        method = dist_poly.method
    if args.format == "csv":
        total = sum(coeffs)
        rows = [
            [value, count, str(Fraction(count, total))]
            for value, count in enumerate(coeffs)
            if count
        ]
        _write_csv(("value", "count", "probability"), rows, out)
        return EXIT_CODES["ok"]
    _write_json(
        {
            "n": args.n,
            "k": args.k,
            "stat": args.stat,
            "method": method,
            "coeffs": to_decimal_strings(coeffs),
            "pmf": pmf.to_json(),
        },
        out,
    )
    return EXIT_CODES["ok"]


def _moments(args: argparse.Namespace, out: TextIO) -> int:
    report = moment_report(args.n, args.k, args.stat, args.method)
    _write_json(report.to_json(), out)
    return EXIT_CODES["ok"]


def _maxima(args: argparse.Namespace, out: TextIO) -> int:
    _write_json(maxima_report(args.n, args.k, args.stat).to_json(), out)
    return EXIT_CODES["ok"]


def _extremal_build(args: argparse.Namespace, out: TextIO) -> int:
    parts = sorted(args.parts, reverse=True)
    partition = build_pi(parts)
    _write_json(
        {
            "parts": parts,
            "partition": str(partition),
            "linear": cr_linear(partition),
            "circular": cr_circular(partition),
            "weight_linear": weight(parts, "linear"),
            "weight_circular": weight(parts, "circular"),
        },
        out,
    )
    return EXIT_CODES["ok"]


def _approx(args: argparse.Namespace, out: TextIO) -> int:
    rows = [
        approx_report(
            args.formula, n, args.k, args.stat, s=args.s, t=args.t, u=args.u
        ).to_csv_row(args.digits)
        for n in args.grid
    ]
    _write_csv(APPROX_CSV_HEADER, rows, out)
    return EXIT_CODES["ok"]


def _sample(args: argparse.Namespace, out: TextIO) -> int:
    config = SamplerConfig(n=args.n, k=args.k, seed=args.seed, count=args.count)
    if args.histogram:
        histogram = crossing_histogram(config.build(), config.count, args.stat)
        _write_csv(("value", "count"), sorted(histogram.items()), out)
        return EXIT_CODES["ok"]
    for partition in config.draw():
        out.write(f"{partition}\n")
    return EXIT_CODES["ok"]


def hist_scale(n: int) -> int:
    """Scale ``a_n = floor(C(n-1, 2) / 3)`` of normalized histograms.

    Examples
    --------
    >>> from setcross.cli import hist_scale
    >>> hist_scale(10), hist_scale(4)
    (12, 1)
    """
    return binomial(n - 1, 2) // 3


def _hist(args: argparse.Namespace, out: TextIO) -> int:
    if args.k is None:
        pmf = pmf_global(args.n, args.stat)
    else:
        pmf = pmf_block(args.n, args.k, args.stat)
    scale = 1
    if args.normalize:
        scale = hist_scale(args.n)
        if scale < 1:
            raise PreconditionError(
                f"--normalize needs n >= 4 so that a_n > 0, got n={args.n}."
            )
    rows = [
        [
            mpmath.nstr(as_mpf(Fraction(value, scale)), args.digits),
            mpmath.nstr(as_mpf(prob), args.digits),
        ]
        for value, prob in zip(pmf.support, pmf.probs)
    ]
    _write_csv(("x", "probability"), rows, out)
    return EXIT_CODES["ok"]


def _verify(args: argparse.Namespace, out: TextIO) -> int:
    summary = run_verification(args.level, names=args.check)
    _write_json(summary.to_json(), out)
    return EXIT_CODES["ok"] if summary.passed else EXIT_CODES["verification"]


def _attach_log_handler(level: str) -> logging.Handler:
    package_logger = logging.getLogger("setcross")
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(
        logging.Formatter("%(asctime)s %(name)s %(levelname)s %(message)s")
    )
    package_logger.addHandler(handler)
    package_logger.setLevel(level)
    return handler


def _detach_log_handler(handler: logging.Handler) -> None:
    logging.getLogger("setcross").removeHandler(handler)
    handler.close()


_ERROR_CODES: List[Tuple[Any, int]] = [
    (CapacityError, EXIT_CODES["capacity"]),
    ((AssertionError, DivisibilityError), EXIT_CODES["verification"]),
    (
        (
            PreconditionError,
            PartitionValidationError,
            DegenerateDistributionError,
            ConfigurationError,
            OSError,
        ),
        EXIT_CODES["usage"],
    ),
]


def run(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    """Run one command line and return its exit code.

    Parameters
    ----------
    argv : sequence of str, default=None
        Arguments without the program name; None reads ``sys.argv``.
    out : file-like, default=None
        Stream receiving the command output; None writes to ``sys.stdout``.
        Errors go to ``sys.stderr``.

    Returns
    -------
    exit_code : int
    """
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
    except UsageError as error:
        sys.stderr.write(f"{error}\n")
        return EXIT_CODES["usage"]
    except SystemExit as exit_:
        # --help
        return int(exit_.code or 0)

    log_handler = _attach_log_handler(args.log_level)
    handler: Callable[[argparse.Namespace, TextIO], int] = args.handler
    # settings from --config stay local to this run
    try:
        with config_context():
            if args.config is not None:
                load_config_file(args.config)
            return handler(args, out)
    except Exception as error:
        for error_types, code in _ERROR_CODES:
            if isinstance(error, error_types):
                logger.debug("Command failed", exc_info=True)
                sys.stderr.write(f"setcross: {type(error).__name__}: {error}\n")
                return code
        raise
    finally:
        _detach_log_handler(log_handler)


def main() -> None:
    """Console entry point."""
    sys.exit(run())
