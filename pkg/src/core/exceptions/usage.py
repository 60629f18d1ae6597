"""
Usage Exceptions

Author: System Architect
Date: 2026-02-11
"""

from src.core.exceptions.base import KroneckerError


class UsageError(KroneckerError):
    """
    Raised for command-line usage problems.

    The details name the offending argument when one is known.
    """
    pass
