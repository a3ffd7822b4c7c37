"""Exception types shared across the package."""

from __future__ import annotations


class EnumerationLimitError(RuntimeError):
    """An operation would enumerate more objects than its guard allows."""


class CodeFileError(ValueError):
    """A code file is malformed or internally inconsistent."""


class ZeroDenominatorError(ArithmeticError):
    """A feasibility expression has a zero denominator at the given point."""


class NotCompletelyRegularError(ValueError):
    """An operation requires a completely regular code and the input is not."""
