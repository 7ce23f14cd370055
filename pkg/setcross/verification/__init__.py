# -*- coding: utf-8 -*-
# copyright: setcross developers, BSD-3-Clause License (see LICENSE file)
""":mod:`setcross.verification` runs the cross-method invariant suite."""
from typing import List

from setcross.verification._suite import (
    LEVELS,
    CheckResult,
    VerificationSummary,
    list_checks,
    run_verification,
)

__all__: List[str] = [
    "LEVELS",
    "CheckResult",
    "VerificationSummary",
    "list_checks",
    "run_verification",
]
__author__: List[str] = ["RNKuhns"]
