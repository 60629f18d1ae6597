"""
Partition Exceptions

Raised by partition parsing and the diagram transforms (tilde, bar, dagger).

Author: System Architect
Date: 2026-02-11
"""

from src.core.exceptions.base import KroneckerError


class PartitionError(KroneckerError):
    """Base exception for invalid partition input or transforms."""
    pass


class ParseError(PartitionError):
    """Raised when partition text is neither "-" nor comma-separated positive integers."""
    pass


class NotWeaklyDecreasingError(PartitionError):
    """Raised when the parts of a partition increase somewhere."""
    pass


class BoundViolationError(PartitionError):
    """
    Raised when an integer parameter is below the bound an operation needs.

    Common causes:
    - tilde(lam, n) with n < |lam| + lam_1
    - a stabilization window starting below N
    """
    pass


class SizeMismatchError(PartitionError):
    """Raised when partition sizes do not satisfy an operation's size relation."""
    pass
