"""
Character Oracle Exceptions

Author: System Architect
Date: 2026-02-11
"""

from src.core.exceptions.base import KroneckerError


class OracleLimitError(KroneckerError):
    """
    Raised when the character oracle is asked for S_n beyond the configured cap.

    The cap is KRON_MAX_N (at most 40).
    """
    pass
