"""
Coefficient records and stabilization windows.

Both are frozen pydantic models. Partitions travel as Partition objects inside
the library and serialize to their text encoding; values serialize to decimal
strings so no consumer has to assume an integer width.
"""

from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_serializer, model_validator

from src.core.config.constants import CoefficientKind
from src.kronecker.models.partition import Partition


class CoefficientRecord(BaseModel):
    """One computed coefficient: kind, partition key, optional parameter n, value."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: CoefficientKind
    lam: Partition
    mu: Partition
    tau: Partition
    n: int | None = Field(default=None, description="Parameter for kinds g and mult")
    value: int = Field(..., ge=0)

    @model_validator(mode="after")
    def check_sizes(self) -> "CoefficientRecord":
        if self.kind is CoefficientKind.KRONECKER and not (
            self.lam.size == self.mu.size == self.tau.size
        ):
            raise ValueError("kind g requires |lam| = |mu| = |tau|")
        if (
            self.kind is CoefficientKind.LITTLEWOOD_RICHARDSON
            and self.lam.size != self.mu.size + self.tau.size
        ):
            raise ValueError("kind lr requires |lam| = |mu| + |tau|")
        if self.kind is CoefficientKind.MULTIPLICITY and self.n is None:
            raise ValueError("kind mult requires n")
        return self

    @field_serializer("lam", "mu", "tau")
    def _encode_partition(self, value: Partition) -> str:
        return value.encode()

    @field_serializer("value")
    def _encode_value(self, value: int) -> str:
        return str(value)

    @field_serializer("kind")
    def _encode_kind(self, value: CoefficientKind) -> str:
        return value.value

    def to_document(self) -> dict[str, Any]:
        return self.model_dump()


class StabilizationWindow(BaseModel):
    """
    Sampled values g(n) of the stretched Kronecker coefficient for consecutive n.

    n_start is the smallest n where all three stretched diagrams exist; from
    n_stable on, the sequence is constant.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    lam: Partition
    mu: Partition
    tau: Partition
    n_start: int
    n_stable: int
    samples: tuple[tuple[int, int], ...] = ()

    @model_validator(mode="after")
    def check_consecutive(self) -> "StabilizationWindow":
        ns = [n for n, _ in self.samples]
        if ns and (ns[0] < self.n_start or ns != list(range(ns[0], ns[0] + len(ns)))):
            raise ValueError("samples must be indexed by consecutive n >= n_start")
        return self

    @property
    def values(self) -> list[int]:
        return [v for _, v in self.samples]

    def is_weakly_increasing(self) -> bool:
        values = self.values
        return all(a <= b for a, b in zip(values, values[1:], strict=False))

    def stable_tail(self) -> list[int]:
        """Sample values at n >= n_stable."""
        return [v for n, v in self.samples if n >= self.n_stable]

    @field_serializer("lam", "mu", "tau")
    def _encode_partition(self, value: Partition) -> str:
        return value.encode()

    @field_serializer("samples")
    def _encode_samples(self, value: tuple[tuple[int, int], ...]) -> list[list]:
        return [[n, str(v)] for n, v in value]
