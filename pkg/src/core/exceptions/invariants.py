"""
Internal Invariant Exceptions

These signal implementation bugs, never bad input. The CLI maps them to exit code 1.

Author: System Architect
Date: 2026-02-11
"""

from src.core.exceptions.base import KroneckerError


class InternalError(KroneckerError):
    """
    Raised when an internal consistency check fails.

    Examples:
    - class-weighted character sum not divisible by n!
    - the two Littlewood-Richardson methods disagree
    - a truncated alternating-sum term turns out to be nonzero
    """
    pass


class NegativeMultiplicityError(InternalError):
    """Raised when a computed tensor multiplicity is negative."""
    pass
