"""
Unit Tests for the Character Oracle

Tests partition enumeration, Murnaghan-Nakayama values, orthogonality and
the exact triple inner product.
"""

import os
import threading
from itertools import permutations, product
from math import factorial
from unittest.mock import patch

import pytest

from src.core.config.settings import reload_settings
from src.core.exceptions import OracleLimitError, SizeMismatchError
from src.kronecker.models.partition import EMPTY, Partition
from src.kronecker.services.characters import (
    character,
    character_table,
    inner_product,
    mn_character,
    partitions_of,
    partitions_up_to,
    triple_inner,
    z_value,
)
from src.kronecker.services.partitions import dim_irrep


@pytest.mark.unit
class TestEnumeration:
    """Test partition enumeration."""

    def test_partitions_of_zero(self):
        assert partitions_of(0) == (EMPTY,)

    def test_partitions_of_four_in_order(self):
        assert [p.encode() for p in partitions_of(4)] == ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]

    @pytest.mark.parametrize("n,count", [(1, 1), (5, 7), (10, 42)])
    def test_partition_counts(self, n, count):
        assert len(partitions_of(n)) == count

    def test_negative_size_is_rejected(self):
        with pytest.raises(SizeMismatchError):
            partitions_of(-1)

    def test_partitions_up_to_is_sorted(self):
        pool = partitions_up_to(3)
        assert list(pool) == sorted(pool)
        assert len(pool) == 1 + 1 + 2 + 3

    def test_class_sizes_sum_to_group_order(self):
        assert sum(factorial(5) // z_value(rho) for rho in partitions_of(5)) == factorial(5)


@pytest.mark.unit
class TestMurnaghanNakayama:
    """Test individual character values."""

    @pytest.mark.parametrize("rho", partitions_of(4))
    def test_trivial_character(self, rho):
        assert mn_character(Partition((4,)), rho) == 1

    @pytest.mark.parametrize("rho", partitions_of(4))
    def test_sign_character(self, rho):
        sign = (-1) ** (rho.size - rho.length)
        assert mn_character(Partition((1, 1, 1, 1)), rho) == sign

    def test_three_cycle_on_standard(self):
        assert mn_character(Partition((2, 1)), Partition((3,))) == -1

    def test_identity_class_gives_dimension(self):
        assert mn_character(Partition((2, 2)), Partition((1, 1, 1, 1))) == 2

    @pytest.mark.parametrize("lam", partitions_of(6))
    def test_identity_class_matches_hook_length(self, lam):
        assert mn_character(lam, Partition((1,) * 6)) == dim_irrep(lam)

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatchError):
            mn_character(Partition((2,)), Partition((1,)))

    def test_empty_character(self):
        assert mn_character(EMPTY, EMPTY) == 1


@pytest.mark.unit
class TestOrthogonality:
    """Column and row orthogonality of the computed tables."""

    @pytest.mark.parametrize("n", range(0, 7))
    def test_rows_are_orthonormal(self, n):
        pool = partitions_of(n)
        for a in pool:
            for b in pool:
                assert inner_product(a, b) == (1 if a == b else 0)

    @pytest.mark.parametrize("n", range(0, 9))
    def test_columns_are_orthogonal(self, n):
        pool = partitions_of(n)
        for rho in pool:
            for sigma in pool:
                total = sum(mn_character(lam, rho) * mn_character(lam, sigma) for lam in pool)
                assert total == (z_value(rho) if rho == sigma else 0)

    def test_character_row_is_memoized(self):
        lam = Partition((3, 1))
        assert character(lam) is character(lam)

    def test_table_is_built_once_under_concurrency(self, clear_library_caches):
        tables = []

        def build():
            tables.append(character_table(6))

        threads = [threading.Thread(target=build) for _ in range(8)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()

        assert all(t is tables[0] for t in tables)


@pytest.mark.unit
class TestTripleInner:
    """Test the Kronecker oracle."""

    def test_worked_values(self):
        assert triple_inner(Partition((3,)), Partition((2, 1)), Partition((2, 1))) == 1
        assert triple_inner(Partition((1, 1, 1)), Partition((2, 1)), Partition((2, 1))) == 1

    @pytest.mark.parametrize("n", range(0, 9))
    def test_trivial_row_is_delta(self, n):
        pool = partitions_of(n)
        trivial = pool[0]
        for lam in pool:
            for mu in pool:
                assert triple_inner(lam, mu, trivial) == (1 if lam == mu else 0)

    @pytest.mark.parametrize("n", range(0, 7))
    def test_invariant_under_permuting_arguments(self, n):
        pool = partitions_of(n)
        for triple in product(pool, repeat=3):
            values = {triple_inner(*order) for order in permutations(triple)}
            assert len(values) == 1

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatchError):
            triple_inner(Partition((2,)), Partition((2,)), Partition((1,)))


@pytest.mark.unit
class TestOracleLimit:
    """Test the configurable oracle cap."""

    def test_cap_is_enforced(self, clear_library_caches):
        with patch.dict(os.environ, {"KRON_MAX_N": "5"}):
            reload_settings()
            with pytest.raises(OracleLimitError) as exc_info:
                character_table(6)

        assert exc_info.value.details == {
            "n": 6,
            "cap": 5,
            "suggestion": "raise KRON_MAX_N (at most 40) or use smaller partitions",
        }

    def test_below_cap_is_allowed(self, clear_library_caches):
        with patch.dict(os.environ, {"KRON_MAX_N": "5"}):
            reload_settings()
            assert character_table(5).n == 5
