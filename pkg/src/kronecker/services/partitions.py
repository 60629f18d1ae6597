"""
Partition Core

Exact Young-diagram arithmetic: parsing, the stretch/shrink transforms
(tilde, bar, dagger), mu-sequences and the hook-length dimension.

All functions are pure and safe for unrestricted concurrent use.

Author: System Architect
Date: 2026-02-11
"""

import re
from functools import lru_cache
from math import factorial, prod

from src.core.config.constants import EMPTY_PARTITION_TOKEN
from src.core.exceptions import BoundViolationError, NotWeaklyDecreasingError, ParseError
from src.kronecker.models.partition import MuSequence, Partition

_PARTITION_TEXT = re.compile(r"^[1-9][0-9]*(,[1-9][0-9]*)*$")


def parse_partition(text: str) -> Partition:
    """
    Parse "-" or comma-separated positive integers into a Partition.

    Raises:
        ParseError: malformed text
        NotWeaklyDecreasingError: parts increase somewhere

    Example:
        >>> parse_partition("6,5,4,1")
        Partition(6, 5, 4, 1)
    """
    stripped = text.strip()
    if stripped == EMPTY_PARTITION_TOKEN:
        return Partition()
    if not _PARTITION_TEXT.match(stripped):
        raise ParseError(
            f"Cannot parse partition {text!r}",
            operation="parse_partition",
            details={"text": text},
        ).with_suggestion('use comma-separated positive integers, or "-" for the empty partition')
    parts = [int(p) for p in stripped.split(",")]
    try:
        return Partition(parts)
    except NotWeaklyDecreasingError as exc:
        raise exc.with_context(text=text)


def tilde(lam: Partition, n: int) -> Partition:
    """
    Prepend a row of length n - |lam|.

    Raises:
        BoundViolationError: n < |lam| + lam_1, where the result is not a diagram
    """
    if n < lam.size + lam.first:
        raise BoundViolationError(
            "tilde(lam, n) needs n >= |lam| + lam_1",
            operation="tilde",
            details={"lam": lam.encode(), "n": n, "minimum": lam.size + lam.first},
        )
    return Partition((n - lam.size, *lam.parts))


def bar(lam: Partition) -> Partition:
    """Remove the top row; bar of the empty partition is empty."""
    return Partition(lam.parts[1:])


def dagger(u: Partition, i: int) -> Partition:
    """
    Remove the i-th part and add 1 to each of the parts above it.

    i may exceed the length of u, in which case u_i is taken to be 0.
    """
    if i < 1:
        raise BoundViolationError(
            "dagger index must be at least 1", operation="dagger", details={"i": i}
        )
    upper = [u.row(j) + 1 for j in range(1, i)]
    return Partition(upper + list(u.parts[i:]))


def mu_sequence(lam: Partition, t: int, K: int) -> MuSequence:
    """
    First K entries of (t - |lam|, lam_1 - 1, lam_2 - 2, ...).

    Example:
        >>> mu_sequence(Partition((2, 1)), 5, 4).prefix
        (2, 1, -1, -3)
    """
    if K < 1:
        raise BoundViolationError(
            "mu-sequence prefix length must be at least 1",
            operation="mu_sequence",
            details={"K": K},
        )
    prefix = (t - lam.size, *(lam.row(i) - i for i in range(1, K)))
    return MuSequence(prefix=prefix, t=t, source=lam)


@lru_cache(maxsize=None)
def dim_irrep(lam: Partition) -> int:
    """Dimension of the S_|lam| irreducible indexed by lam (hook length formula)."""
    conjugate = [sum(1 for p in lam.parts if p > j) for j in range(lam.first)]
    hooks = prod(
        lam.parts[i] - j + conjugate[j] - i - 1
        for i in range(lam.length)
        for j in range(lam.parts[i])
    )
    return factorial(lam.size) // hooks
