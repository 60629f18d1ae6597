"""
Cache Module

Provides multi-tier coefficient caching (L1 in-memory LRU + L2 JSON-lines file).
"""

from .cache_manager import (
    CacheStrategy,
    CoefficientCache,
    JsonLinesStorage,
    L1Storage,
    decode_entry,
    encode_entry,
    make_key,
)

__all__ = [
    "CoefficientCache",
    "CacheStrategy",
    "L1Storage",
    "JsonLinesStorage",
    "make_key",
    "encode_entry",
    "decode_entry",
]
