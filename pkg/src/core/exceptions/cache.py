"""
Cache-Related Exceptions

All exceptions related to the coefficient cache (in-memory LRU tier and JSON-lines file tier).

Author: System Architect
Date: 2026-02-11
"""

from src.core.exceptions.base import KroneckerError


class CacheError(KroneckerError):
    """Base exception for cache-related errors."""
    pass


class CorruptEntryError(CacheError):
    """
    Raised when a cache line cannot be decoded into an entry.

    Common causes:
    - Truncated write from an interrupted process
    - Hand-edited cache file
    - Value field that is not a decimal integer

    The file tier catches this per line and skips the entry with a warning.
    """
    pass


class CacheIOError(CacheError):
    """
    Raised when the cache file cannot be read or replaced.

    The details always carry the offending path.
    """
    pass
