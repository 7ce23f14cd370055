# -*- coding: utf-8 -*-
# copyright: setcross developers, BSD-3-Clause License (see LICENSE file)
""":mod:`setcross.base` provides the parametric base class and ``clone``."""
from typing import List

from setcross.base._base import BaseObject
from setcross.base._clone import clone

__all__: List[str] = ["BaseObject", "clone"]
__author__: List[str] = ["RNKuhns"]
