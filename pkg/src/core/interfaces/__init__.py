"""
Core Interfaces Module

Protocols for core components, enabling dependency injection and testability.

Components:
-----------
- **cache.py**: CoefficientStore protocol for cache tiers

Usage:
------
```python
from src.core.interfaces import CoefficientStore

def warm(store: CoefficientStore, entries: dict[str, str]) -> None:
    for key, value in entries.items():
        store.set(key, value)
```

Author: System Architect
Date: 2026-02-11
"""

from src.core.interfaces.cache import CoefficientStore, InMemoryStore

__all__ = [
    "CoefficientStore",
    "InMemoryStore",
]
