"""
Symmetric Characters

Brute-force character oracle for S_n via the Murnaghan-Nakayama rule.

Characters are computed on beta-numbers (first-column hook lengths): removing
a border strip of size r moves one bead from b to b - r onto a free position,
with sign (-1)^(beads strictly between). Cycles are consumed largest-first and
the recursion is memoized on (remaining shape, remaining cycle type).

Class data (cycle types and class sizes) is built once per n under a lock;
character rows are added to the per-n table on first use and never change
afterwards, so concurrent readers see either no row or the finished row.

Author: System Architect
Date: 2026-02-11
"""

import threading
from collections import Counter
from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod

from src.core.config.constants import Stage
from src.core.config.settings import ORACLE_HARD_CAP, get_settings
from src.core.exceptions import InternalError, OracleLimitError, SizeMismatchError
from src.core.logging import get_logger, log_stage
from src.kronecker.models.partition import Partition

logger = get_logger(__name__)


# ============================================================================
# Enumeration
# ============================================================================


def _partitions_bounded(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first, *rest)


def iter_partitions(n: int) -> Iterator[Partition]:
    """Partitions of n in reverse-lexicographic order."""
    if n < 0:
        raise SizeMismatchError(
            "Cannot enumerate partitions of a negative integer",
            operation="partitions_of",
            details={"n": n},
        )
    for parts in _partitions_bounded(n, n):
        yield Partition(parts)


@lru_cache(maxsize=64)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """
    All partitions of n, each once, reverse-lexicographic.

    Example:
        >>> [p.encode() for p in partitions_of(4)]
        ['4', '3,1', '2,2', '2,1,1', '1,1,1,1']
    """
    return tuple(iter_partitions(n))


def partitions_up_to(max_size: int) -> tuple[Partition, ...]:
    """Partitions of every size 0..max_size, by size then reverse-lexicographic."""
    return tuple(p for k in range(max_size + 1) for p in partitions_of(k))


# ============================================================================
# Class data
# ============================================================================


def z_value(rho: Partition) -> int:
    """z_rho = prod i^{m_i} m_i!, the centralizer order of a permutation of cycle type rho."""
    return prod(i**m * factorial(m) for i, m in Counter(rho.parts).items())


@dataclass(frozen=True)
class ConjugacyClass:
    """Conjugacy class of S_n: cycle type and number of elements n!/z_rho."""

    cycle_type: Partition
    size: int


@dataclass(frozen=True)
class CharacterVector:
    """Row chi^lam of the character table, keyed by cycle type."""

    lam: Partition
    values: Mapping[Partition, int]

    def __getitem__(self, rho: Partition) -> int:
        return self.values[rho]


class CharacterTable:
    """
    Classes of S_n and the character rows computed so far.

    Build through ``character_table(n)``; never mutate rows after insertion.
    """

    def __init__(self, n: int):
        self.n = n
        self.classes: tuple[ConjugacyClass, ...] = tuple(
            ConjugacyClass(cycle_type=rho, size=factorial(n) // z_value(rho))
            for rho in partitions_of(n)
        )
        self._rows: dict[Partition, CharacterVector] = {}
        self._lock = threading.Lock()

    @property
    def order(self) -> int:
        return factorial(self.n)

    def row(self, lam: Partition) -> CharacterVector:
        existing = self._rows.get(lam)
        if existing is not None:
            return existing
        if lam.size != self.n:
            raise SizeMismatchError(
                "Character row requested for a partition of the wrong size",
                operation="character_row",
                details={"lam": lam.encode(), "n": self.n},
            )
        vector = CharacterVector(
            lam=lam, values={c.cycle_type: mn_character(lam, c.cycle_type) for c in self.classes}
        )
        with self._lock:
            return self._rows.setdefault(lam, vector)


_tables: dict[int, CharacterTable] = {}
_tables_lock = threading.Lock()


def _check_oracle_limit(n: int, operation: str) -> None:
    cap = min(get_settings().KRON_MAX_N, ORACLE_HARD_CAP)
    if n > cap:
        raise OracleLimitError(
            f"Character oracle is capped at n = {cap}",
            operation=operation,
            details={"n": n, "cap": cap},
        ).with_suggestion("raise KRON_MAX_N (at most 40) or use smaller partitions")


def character_table(n: int) -> CharacterTable:
    """Class data for S_n, built once per n."""
    table = _tables.get(n)
    if table is not None:
        return table
    _check_oracle_limit(n, "character_table")
    with _tables_lock:
        table = _tables.get(n)
        if table is None:
            table = CharacterTable(n)
            _tables[n] = table
            log_stage(
                logger,
                Stage.CHARACTER_TABLE,
                "Built class data",
                level="debug",
                n=n,
                classes=len(table.classes),
            )
    return table


def clear_character_tables() -> None:
    """Drop every cached table and memoized character value."""
    with _tables_lock:
        _tables.clear()
    _mn_recursive.cache_clear()


# ============================================================================
# Murnaghan-Nakayama
# ============================================================================


def _to_beta(parts: tuple[int, ...]) -> tuple[int, ...]:
    length = len(parts)
    return tuple(p + length - 1 - i for i, p in enumerate(parts))


def _from_beta(beta: list[int]) -> tuple[int, ...]:
    beta = sorted(beta, reverse=True)
    length = len(beta)
    parts = [b - (length - 1 - i) for i, b in enumerate(beta)]
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


@lru_cache(maxsize=None)
def _mn_recursive(shape: tuple[int, ...], cycles: tuple[int, ...]) -> int:
    if not cycles:
        return 1 if not shape else 0
    r, rest = cycles[0], cycles[1:]
    beta = _to_beta(shape)
    occupied = set(beta)
    total = 0
    for bead in beta:
        target = bead - r
        if target < 0 or target in occupied:
            continue
        crossed = sum(1 for b in beta if target < b < bead)
        moved = [target if b == bead else b for b in beta]
        value = _mn_recursive(_from_beta(moved), rest)
        total += -value if crossed % 2 else value
    return total


def mn_character(lam: Partition, rho: Partition) -> int:
    """
    chi^lam(rho) by the Murnaghan-Nakayama rule.

    Raises:
        SizeMismatchError: |lam| != |rho|
        OracleLimitError: n beyond the configured cap
    """
    if lam.size != rho.size:
        raise SizeMismatchError(
            "Character needs |lam| = |rho|",
            operation="mn_character",
            details={"lam": lam.encode(), "rho": rho.encode()},
        )
    _check_oracle_limit(lam.size, "mn_character")
    return _mn_recursive(lam.parts, rho.parts)


def character(lam: Partition) -> CharacterVector:
    """Full character row of lam."""
    return character_table(lam.size).row(lam)


def inner_product(lam: Partition, mu: Partition) -> int:
    """<chi^lam, chi^mu>, exact."""
    if lam.size != mu.size:
        raise SizeMismatchError(
            "Inner product needs equal sizes",
            operation="inner_product",
            details={"lam": lam.encode(), "mu": mu.encode()},
        )
    table = character_table(lam.size)
    a, b = table.row(lam), table.row(mu)
    total = sum(c.size * a[c.cycle_type] * b[c.cycle_type] for c in table.classes)
    return _exact_quotient(total, table.order, "inner_product")


def triple_inner(lam: Partition, mu: Partition, tau: Partition) -> int:
    """
    (1/n!) sum_rho |C_rho| chi^lam(rho) chi^mu(rho) chi^tau(rho), the Kronecker coefficient.

    Raises:
        SizeMismatchError: sizes differ
        InternalError: the class-weighted sum is not divisible by n!
    """
    if not lam.size == mu.size == tau.size:
        raise SizeMismatchError(
            "Kronecker coefficient needs |lam| = |mu| = |tau|",
            operation="triple_inner",
            details={"lam": lam.encode(), "mu": mu.encode(), "tau": tau.encode()},
        )
    table = character_table(lam.size)
    a, b, c = table.row(lam), table.row(mu), table.row(tau)
    total = sum(
        cls.size * a[cls.cycle_type] * b[cls.cycle_type] * c[cls.cycle_type]
        for cls in table.classes
    )
    return _exact_quotient(total, table.order, "triple_inner")


def _exact_quotient(total: int, order: int, operation: str) -> int:
    quotient, remainder = divmod(total, order)
    if remainder:
        raise InternalError(
            "Class-weighted character sum is not divisible by the group order",
            operation=operation,
            details={"sum": str(total), "order": str(order)},
        )
    return quotient
