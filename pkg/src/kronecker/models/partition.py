"""
Partition and MuSequence value types.

A Partition is stored without trailing zeros, so structural equality, hashing
and multiset comparison never see two spellings of the same diagram.

Author: System Architect
Date: 2026-02-11
"""

from collections import Counter
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from src.core.config.constants import EMPTY_PARTITION_TOKEN, PART_SEPARATOR
from src.core.exceptions import NotWeaklyDecreasingError, PartitionError


class Partition:
    """
    Immutable Young diagram (English notation).

    Attributes:
        parts: weakly decreasing positive parts
        size: |lam|
        length: number of nonzero rows

    Rows are 1-indexed through ``row(i)``, which returns 0 past the last row.
    Ordering is by size, then reverse-lexicographic within a size, which is the
    order ``partitions_of`` enumerates in.
    """

    __slots__ = ("_parts", "_size")

    def __init__(self, parts: Iterable[int] = ()):
        values = [int(p) for p in parts]
        while values and values[-1] == 0:
            values.pop()
        if any(p < 0 for p in values):
            raise PartitionError(
                "Partition parts must be nonnegative",
                operation="Partition",
                details={"parts": values},
            )
        for i in range(len(values) - 1):
            if values[i] < values[i + 1]:
                raise NotWeaklyDecreasingError(
                    "Partition parts must be weakly decreasing",
                    operation="Partition",
                    details={"parts": values, "index": i + 1},
                )
        self._parts = tuple(values)
        self._size = sum(values)

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    @property
    def size(self) -> int:
        return self._size

    @property
    def length(self) -> int:
        return len(self._parts)

    @property
    def first(self) -> int:
        """lam_1, or 0 for the empty partition."""
        return self._parts[0] if self._parts else 0

    def row(self, i: int) -> int:
        """lam_i for i >= 1; zero beyond the last row."""
        if i < 1:
            raise IndexError(f"rows are 1-indexed, got {i}")
        return self._parts[i - 1] if i <= len(self._parts) else 0

    def contains(self, other: "Partition") -> bool:
        """True when other's diagram is a subdiagram of this one."""
        return other.length <= self.length and all(
            b <= a for a, b in zip(self._parts, other._parts, strict=False)
        )

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (self._size, tuple(-p for p in self._parts))

    def encode(self) -> str:
        """Text encoding: comma-separated parts, "-" for the empty partition."""
        if not self._parts:
            return EMPTY_PARTITION_TOKEN
        return PART_SEPARATOR.join(str(p) for p in self._parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __len__(self) -> int:
        return len(self._parts)

    def __bool__(self) -> bool:
        return bool(self._parts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self._parts == other._parts

    def __hash__(self) -> int:
        return hash(self._parts)

    def __lt__(self, other: "Partition") -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def __le__(self, other: "Partition") -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.sort_key() <= other.sort_key()

    def __repr__(self) -> str:
        return f"Partition({', '.join(str(p) for p in self._parts)})"

    def __str__(self) -> str:
        return self.encode()


EMPTY = Partition()


@dataclass(frozen=True)
class MuSequence:
    """
    Length-K prefix of (t - |lam|, lam_1 - 1, lam_2 - 2, ...).

    Beyond max(length, |t - |lam||) every entry is the forced tail value -i.
    """

    prefix: tuple[int, ...]
    t: int
    source: Partition

    @property
    def length(self) -> int:
        return len(self.prefix)

    def multiset(self) -> Counter:
        return Counter(self.prefix)

    def has_repeats(self) -> bool:
        return len(set(self.prefix)) != len(self.prefix)
