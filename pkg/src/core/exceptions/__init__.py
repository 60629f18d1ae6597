"""
Exception Module

Structured exception hierarchy for the coefficient toolkit.
All exceptions are organized by theme for better maintainability and debuggability.

Module Structure:
-----------------
- **base.py**: KroneckerError base class + ConfigurationError
- **partition.py**: Parsing and diagram-transform exceptions
- **characters.py**: Character oracle limits
- **deligne.py**: Deligne-category chain exceptions
- **invariants.py**: Internal consistency failures (bugs, exit code 1)
- **cache.py**: Coefficient cache exceptions
- **usage.py**: Command-line usage exceptions

Usage:
------
```python
from src.core.exceptions import BoundViolationError, InternalError
from src.core.exceptions.cache import CorruptEntryError
```

Author: System Architect
Date: 2026-02-11
"""

# Base exception
from src.core.exceptions.base import ConfigurationError, KroneckerError

# Cache exceptions
from src.core.exceptions.cache import CacheError, CacheIOError, CorruptEntryError

# Character oracle exceptions
from src.core.exceptions.characters import OracleLimitError

# Deligne-category exceptions
from src.core.exceptions.deligne import NotMinimalError

# Internal invariant exceptions
from src.core.exceptions.invariants import InternalError, NegativeMultiplicityError

# Partition exceptions
from src.core.exceptions.partition import (
    BoundViolationError,
    NotWeaklyDecreasingError,
    ParseError,
    PartitionError,
    SizeMismatchError,
)

# Usage exceptions
from src.core.exceptions.usage import UsageError

__all__ = [
    # Base
    "KroneckerError",
    "ConfigurationError",
    # Partition
    "PartitionError",
    "ParseError",
    "NotWeaklyDecreasingError",
    "BoundViolationError",
    "SizeMismatchError",
    # Characters
    "OracleLimitError",
    # Deligne
    "NotMinimalError",
    # Invariants
    "InternalError",
    "NegativeMultiplicityError",
    # Cache
    "CacheError",
    "CorruptEntryError",
    "CacheIOError",
    # Usage
    "UsageError",
]
