# -*- coding: utf-8 -*-
# copyright: setcross developers, BSD-3-Clause License (see LICENSE file)
""":mod:`setcross.cli` is the ``setcross`` command line."""
from typing import List

from setcross.cli._main import EXIT_CODES, build_parser, hist_scale, main, run

__all__: List[str] = ["EXIT_CODES", "build_parser", "hist_scale", "main", "run"]
__author__: List[str] = ["RNKuhns"]
