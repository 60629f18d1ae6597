"""
Deligne-Category Exceptions

Author: System Architect
Date: 2026-02-11
"""

from src.core.exceptions.base import KroneckerError


class NotMinimalError(KroneckerError):
    """Raised when a chain is requested from a diagram that is not minimal at n."""
    pass
