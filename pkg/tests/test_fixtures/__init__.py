"""
Test Fixtures Package

Shared test utilities and helpers for consistent testing across all modules.
"""

from .cache_factory import CacheTestFactory
from .partition_factory import PartitionTestFactory, partition_triples, partitions

__all__ = ["CacheTestFactory", "PartitionTestFactory", "partitions", "partition_triples"]
