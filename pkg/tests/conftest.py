"""
Pytest Configuration and Shared Test Fixtures

This module provides pytest configuration and reusable fixtures for all tests.
All fixtures defined here are automatically available to all test files.
"""

import os
import sys

import pytest

# Add project root to sys.path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))


# ============================================================================
# Isolation
# ============================================================================


@pytest.fixture(autouse=True)
def isolated_settings(monkeypatch):
    """
    Every test starts from default settings and cold library caches.

    Environment variables a developer may have exported are removed so a
    local KRON_CACHE or KRON_VERIFY never leaks into a test.
    """
    for var in (
        "KRON_CACHE",
        "KRON_VERIFY",
        "KRON_WORKERS",
        "KRON_MAX_N",
        "KRON_L1_CACHE_SIZE",
        "KRON_VERIFY_TRUNCATION_MAX_N",
        "LOG_FILE",
    ):
        monkeypatch.delenv(var, raising=False)

    from src.core.config.settings import reload_settings

    reload_settings()
    yield
    reload_settings()


@pytest.fixture
def clear_library_caches():
    """Drop memoized character tables and coefficients before and after a test."""
    from src.kronecker.services.characters import clear_character_tables
    from src.kronecker.services.coefficients import clear_coefficient_caches
    from src.kronecker.services.deligne import clear_deligne_caches

    def clear():
        clear_character_tables()
        clear_coefficient_caches()
        clear_deligne_caches()

    clear()
    yield
    clear()


@pytest.fixture
def verify_mode(monkeypatch, clear_library_caches):
    """Enable the verification-build cross-checks for one test."""
    from src.core.config.settings import reload_settings

    monkeypatch.setenv("KRON_VERIFY", "true")
    reload_settings()
    yield
    monkeypatch.delenv("KRON_VERIFY", raising=False)
    reload_settings()


# ============================================================================
# Sample Data Fixtures
# ============================================================================


@pytest.fixture
def P():
    """Shorthand partition constructor: P(2, 1), P() for the empty partition."""
    from src.kronecker.models.partition import Partition

    def make(*parts: int) -> Partition:
        return Partition(parts)

    return make


@pytest.fixture
def cache_path(tmp_path):
    """Path for a JSON-lines cache file inside the test's temp directory."""
    return tmp_path / "coefficients.jsonl"


@pytest.fixture
def execution_tracker():
    """A fresh ExecutionTracker, independent of the process-wide one."""
    from src.core.observability.execution_tracker import ExecutionTracker

    return ExecutionTracker()
