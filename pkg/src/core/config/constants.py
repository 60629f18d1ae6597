"""
System Constants and Enumerations

This module defines system-wide constants and enumerations used across
the coefficient toolkit.

Architectural Decision: Centralized constants for maintainability
- Single source of truth for magic numbers
- Type-safe enums for stage names, coefficient kinds and exit codes

Author: System Architect
Date: 2026-02-11
"""

from enum import Enum, IntEnum

# ============================================================================
# Stage Identifiers (for execution tracking and logging)
# ============================================================================


class Stage(str, Enum):
    """
    Processing stages for execution tracking.

    Format: {SEQUENCE}_{DESCRIPTIVE_NAME}
    - SEQUENCE: Numeric order (0.0, 1.0, 2.0) or alphabetic prefix (CT, DC)
    - DESCRIPTIVE_NAME: Clear, uppercase description with underscores

    Examples:
        log_stage(logger, Stage.CACHE_LOOKUP, "L1 cache hit", key=key)
    """

    # Main invocation lifecycle (Sequential 0.0 - 6.0)
    INITIALIZATION = "0.0_INITIALIZATION"
    ARGUMENT_PARSING = "1.0_ARGUMENT_PARSING"
    CACHE_LOOKUP = "2.0_CACHE_LOOKUP"
    COEFFICIENT_EVALUATION = "3.0_COEFFICIENT_EVALUATION"
    VERIFICATION = "4.0_VERIFICATION"
    TABLE_EXPORT = "5.0_TABLE_EXPORT"
    CLEANUP = "6.0_CLEANUP"

    # Cross-cutting concerns (alphabetic prefixes)
    CHARACTER_TABLE = "CT_CHARACTER_TABLE"
    DELIGNE_CLASS = "DC_DELIGNE_CLASS"
    CACHE_PERSISTENCE = "CP_CACHE_PERSISTENCE"


# ============================================================================
# Coefficient kinds (cache keys, CLI documents)
# ============================================================================


class CoefficientKind(str, Enum):
    """
    Coefficient families stored in records and the cache.

    KRONECKER: g at a fixed n (all partitions of n)
    REDUCED: reduced Kronecker coefficient
    LITTLEWOOD_RICHARDSON: c with |lam| = |mu| + |tau|
    MULTIPLICITY: tensor multiplicity at integer parameter n
    """

    KRONECKER = "g"
    REDUCED = "gbar"
    LITTLEWOOD_RICHARDSON = "lr"
    MULTIPLICITY = "mult"


# ============================================================================
# Process exit codes
# ============================================================================


class ExitCode(IntEnum):
    """CLI exit codes."""

    SUCCESS = 0
    FAILURE = 1  # internal assertion failure or verification violations
    USAGE = 2  # usage error or precondition violation


# ============================================================================
# Partition text encoding
# ============================================================================

EMPTY_PARTITION_TOKEN = "-"
PART_SEPARATOR = ","

# ============================================================================
# Table export
# ============================================================================

CSV_HEADER = ("lambda", "mu", "tau", "value")

# ============================================================================
# Identity suite defaults
# ============================================================================

SUITE_DEFAULT_MAX_SIZE = 3
SUITE_DEFAULT_N_MAX = 8
# n_range windows are offsets from the triple's N
SUITE_DEFAULT_N_WINDOW = (0, 4)
SUITE_DEFAULT_DAGGER_N = 4
# semisimple parameters checked past 2M - 2, where M bounds the degrees involved
SUITE_SEMISIMPLE_SPAN = 4

ACCEPTANCE_MAX_SIZE = 5
ACCEPTANCE_N_MAX = 14
