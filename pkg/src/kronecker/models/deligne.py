"""
Deligne-category value types at an integer parameter n.

Author: System Architect
Date: 2026-02-11
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any

import sympy

from src.core.exceptions import NotMinimalError
from src.kronecker.models.partition import Partition


class ObjectStatus(str, Enum):
    """Classification of an indecomposable X_lam in the abelian envelope at t = n."""

    SIMPLE_PROJECTIVE = "SimpleProjective"
    SIMPLE_NON_PROJECTIVE = "SimpleNonProjective"
    PROJECTIVE = "Projective"


class ClassChain:
    """
    The chain lam^(0) < lam^(1) < ... of a nontrivial n-equivalence class.

    lam^(1) adds a strip of length n - |lam| - lam_1 + 1 to row 1 and
    lam^(i+1) adds lam_i - lam_{i+1} + 1 to row i + 1, where lam = lam^(0) is
    the minimal diagram. Elements are materialized on demand and memoized;
    a chain instance is not meant to be shared between threads.
    """

    def __init__(self, minimal: Partition, n: int):
        if n < 0:
            raise NotMinimalError(
                "Integer parameter must be nonnegative",
                operation="class_chain",
                details={"n": n},
            )
        if n < minimal.size + minimal.first:
            raise NotMinimalError(
                "Diagram is not minimal at this parameter",
                operation="class_chain",
                details={
                    "minimal": minimal.encode(),
                    "n": n,
                    "required": minimal.size + minimal.first,
                },
            )
        self.minimal = minimal
        self.n = n
        self._elements: list[Partition] = [minimal]

    def _build(self, i: int) -> Partition:
        # closed form of the strip recursion
        m = self.minimal
        rows = [self.n - m.size + 1]
        rows.extend(m.row(j - 1) + 1 for j in range(2, i + 1))
        rows.extend(m.parts[i:])
        return Partition(rows)

    def element(self, i: int) -> Partition:
        if i < 0:
            raise IndexError(f"chain index must be nonnegative, got {i}")
        while len(self._elements) <= i:
            self._elements.append(self._build(len(self._elements)))
        return self._elements[i]

    def extend_to(self, depth: int) -> list[Partition]:
        """Materialize elements 0..depth and return them."""
        self.element(depth)
        return self._elements[: depth + 1]

    def up_to_size(self, max_size: int) -> list[Partition]:
        """Leading elements with size <= max_size (sizes strictly increase)."""
        out: list[Partition] = []
        i = 0
        while (elem := self.element(i)).size <= max_size:
            out.append(elem)
            i += 1
        return out

    def index_of(self, lam: Partition) -> int | None:
        i = 0
        while (elem := self.element(i)).size <= lam.size:
            if elem == lam:
                return i
            i += 1
        return None

    @property
    def elements(self) -> tuple[Partition, ...]:
        """Elements materialized so far."""
        return tuple(self._elements)

    def __getitem__(self, i: int) -> Partition:
        return self.element(i)

    def __repr__(self) -> str:
        return f"ClassChain(minimal={self.minimal!r}, n={self.n}, built={len(self._elements)})"


@dataclass(frozen=True)
class ClassPosition:
    """Either Trivial, or NonTrivial(minimal, index)."""

    minimal: Partition | None = None
    index: int | None = None

    @classmethod
    def trivial(cls) -> "ClassPosition":
        return cls()

    @classmethod
    def nontrivial(cls, minimal: Partition, index: int) -> "ClassPosition":
        return cls(minimal=minimal, index=index)

    @property
    def is_trivial(self) -> bool:
        return self.minimal is None

    def to_document(self) -> dict[str, Any]:
        if self.is_trivial:
            return {"class": "Trivial"}
        return {"class": "NonTrivial", "minimal": self.minimal.encode(), "index": self.index}


@dataclass(frozen=True)
class DimensionPolynomial:
    """
    P_lam(T) with exact rational coefficients, lowest degree first.

    P_lam(n) = dim of the S_n irreducible tilde(lam, n) for n >= |lam| + lam_1.
    """

    lam: Partition
    coeffs: tuple[Fraction, ...] = field(default=(Fraction(1),))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, t: int | Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def to_sympy(self, symbol: sympy.Symbol | None = None) -> sympy.Expr:
        T = symbol or sympy.Symbol("T")
        return sympy.expand(
            sum(
                sympy.Rational(c.numerator, c.denominator) * T**k
                for k, c in enumerate(self.coeffs)
            )
        )

    def to_document(self) -> dict[str, Any]:
        return {
            "lam": self.lam.encode(),
            "degree": self.degree,
            "coefficients": [str(c) for c in self.coeffs],
            "polynomial": str(self.to_sympy()),
        }

    def __str__(self) -> str:
        return str(self.to_sympy())
