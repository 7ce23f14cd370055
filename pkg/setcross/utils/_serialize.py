# -*- coding: utf-8 -*-
# copyright: setcross developers, BSD-3-Clause License (see LICENSE file)
"""Helpers turning exact values into JSON-safe structures."""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Union

__all__ = ["rational_to_json", "to_decimal_strings"]
__author__ = ["RNKuhns"]


def rational_to_json(
    value: Optional[Union[int, Fraction]]
) -> Optional[Dict[str, str]]:
    """Serialize an exact rational as decimal strings.

    Parameters
    ----------
    value : int, Fraction or None
        The value to serialize. None is passed through.

    Returns
    -------
    json_value : dict or None
        ``{"num": ..., "den": ...}`` with base-10 strings.

    Examples
    --------
    >>> from fractions import Fraction
    >>> from setcross.utils import rational_to_json
    >>> rational_to_json(Fraction(6, 49))
    {'num': '6', 'den': '49'}
    """
    if value is None:
        return None
    value = Fraction(value)
    return {"num": str(value.numerator), "den": str(value.denominator)}


def to_decimal_strings(values: Iterable[int]) -> List[str]:
    """Render big integers as decimal strings."""
    return [str(int(v)) for v in values]
