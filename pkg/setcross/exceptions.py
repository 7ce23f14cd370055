# -*- coding: utf-8 -*-
# copyright: setcross developers, BSD-3-Clause License (see LICENSE file)
"""Custom exceptions used in setcross."""
__all__ = [
    "CapacityError",
    "ConfigurationError",
    "DegenerateDistributionError",
    "DivisibilityError",
    "FormulaVerificationError",
    "NoTagsError",
    "NotInvertibleError",
    "PartitionValidationError",
    "PreconditionError",
]
__author__ = ["RNKuhns"]


class NoTagsError(ValueError, AttributeError):
    """Exception class raised if an object does not have expected tag attribute.

    Notes
    -----
    Follows convention used in scikit-learn when creating custom errors.
    """


class CapacityError(ValueError, MemoryError):
    """Raised when a request exceeds a configured capacity limit.

    The limits live in :mod:`setcross.config` (for example
    ``enumeration_limit`` or ``polynomial_limit``) and can be raised with
    :func:`setcross.config.set_config` at the cost of memory and time.
    """


class DivisibilityError(ArithmeticError):
    """Raised when a polynomial division that must be exact leaves a remainder.

    Notes
    -----
    Every division performed by the distribution formulas is exact in theory, so
    this error signals an implementation bug rather than bad input.
    """


class FormulaVerificationError(AssertionError):
    """Raised when a computed value violates an identity it must satisfy.

    Examples are a distribution formula that does not reduce to a polynomial,
    a polynomial whose value at 1 is not the Stirling number, or two
    overlapping closed-form cases that disagree.
    """


class PartitionValidationError(ValueError):
    """Raised for malformed set partitions, restricted growth strings or labels."""


class PreconditionError(ValueError):
    """Raised when arguments fall outside an operation's documented domain."""


class DegenerateDistributionError(ValueError):
    """Raised when a distribution with zero variance has to be standardized."""


class NotInvertibleError(ZeroDivisionError):
    """Raised when a truncated series without a unit constant term is inverted."""


class ConfigurationError(ValueError, KeyError):
    """Raised for unknown keys or invalid values in a configuration file."""
