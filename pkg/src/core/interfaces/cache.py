"""
Coefficient Store Protocol

This module defines the protocol for coefficient store implementations,
enabling dependency injection and testability.

Architectural Decision: Protocol-based abstraction
- CacheStrategy accepts any store as its second tier
- Tests swap the JSON-lines file for InMemoryStore

Author: System Architect
Date: 2026-02-11
"""

from collections.abc import Iterable
from typing import Protocol, runtime_checkable


@runtime_checkable
class CoefficientStore(Protocol):
    """
    Protocol defining the interface for coefficient store tiers.

    Keys are the canonical cache-key strings (``kind|lam|mu|tau|n``) and
    values are decimal strings, so a store never interprets integer widths.

    Implementations:
    - JsonLinesStorage: persistent JSON-lines file
    - InMemoryStore: unbounded dict, for tests

    Usage:
        def lookup(store: CoefficientStore, key: str) -> int | None:
            raw = store.get(key)
            return None if raw is None else int(raw)
    """

    def get(self, key: str) -> str | None:
        """Return the stored decimal string, or None when absent."""
        ...

    def set(self, key: str, value: str) -> bool:
        """
        Store a value.

        Returns:
            bool: False when the key was already present (first occurrence wins)
        """
        ...

    def set_many(self, items: Iterable[tuple[str, str]]) -> int:
        """Store every new key in one write; returns how many were new."""
        ...

    def keys(self) -> list[str]:
        """All stored keys."""
        ...


class InMemoryStore:
    """
    Unbounded dict-backed store for tests.

    Implements the CoefficientStore protocol without touching the filesystem.
    """

    def __init__(self):
        self._store: dict[str, str] = {}

    def get(self, key: str) -> str | None:
        return self._store.get(key)

    def set(self, key: str, value: str) -> bool:
        if key in self._store:
            return False
        self._store[key] = value
        return True

    def set_many(self, items: Iterable[tuple[str, str]]) -> int:
        return sum(self.set(key, value) for key, value in items)

    def keys(self) -> list[str]:
        return list(self._store)
