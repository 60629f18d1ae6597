"""
Core Module

Foundational components: configuration, logging, exceptions, and execution tracking.
"""

from .exceptions import (
    BoundViolationError,
    CacheError,
    ConfigurationError,
    InternalError,
    KroneckerError,
    NotMinimalError,
    OracleLimitError,
    PartitionError,
    UsageError,
)
from .logging import (
    clear_run_id,
    get_logger,
    get_run_id,
    log_stage,
    set_run_id,
    setup_logging,
)
from .observability.execution_tracker import (
    ExecutionTracker,
    StageExecution,
    get_tracker,
)

__all__ = [
    "setup_logging",
    "get_logger",
    "set_run_id",
    "get_run_id",
    "clear_run_id",
    "log_stage",
    "KroneckerError",
    "ConfigurationError",
    "PartitionError",
    "BoundViolationError",
    "OracleLimitError",
    "NotMinimalError",
    "InternalError",
    "CacheError",
    "UsageError",
    "ExecutionTracker",
    "StageExecution",
    "get_tracker",
]
