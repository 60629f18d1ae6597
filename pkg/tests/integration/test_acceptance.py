"""
Acceptance Tests

Runs every identity suite at its documented acceptance sizes, plus the worked
instances each suite must contain. Exact integers throughout; a single
violation fails the test and the report names the offending input.
"""

from math import factorial

import pytest

from src.application.services import TableService
from src.kronecker.services import identities
from src.kronecker.services.characters import character_table, partitions_of
from src.kronecker.services.coefficients import littlewood_richardson, reduced_kronecker
from src.kronecker.services.deligne import (
    alternating_chain_sum,
    dimension_polynomial,
    multiplicity_at_integer,
)
from src.kronecker.services.partitions import bar, dim_irrep, tilde
from tests.test_fixtures import CacheTestFactory

pytestmark = [pytest.mark.integration, pytest.mark.slow]


def assert_clean(report):
    assert report.cases > 0
    assert report.passed, report.to_document()["violations"][:5]


class TestWorkedInstances:
    """Worked values every implementation has to reproduce."""

    def test_stretch_and_strip(self, P):
        stretched = tilde(P(6, 5, 4, 1), 23)

        assert stretched == P(7, 6, 5, 4, 1)
        assert bar(stretched) == P(6, 5, 4, 1)

    @pytest.mark.parametrize("n", range(1, 11))
    def test_dimension_squares_sum_to_order(self, n):
        assert sum(dim_irrep(lam) ** 2 for lam in partitions_of(n)) == factorial(n)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_character_orthogonality(self, n):
        table = character_table(n)
        for a in partitions_of(n):
            for b in partitions_of(n):
                total = sum(
                    cls.size * table.row(a)[cls.cycle_type] * table.row(b)[cls.cycle_type]
                    for cls in table.classes
                )
                assert total == (table.order if a == b else 0)

    @pytest.mark.parametrize("n,expected", [(2, 0), (3, 1)])
    def test_box_alternating_sum(self, n, expected, P):
        assert alternating_chain_sum(P(1), n, P(1), P(1)) == expected

    def test_trivial_class_instance(self, P):
        assert alternating_chain_sum(P(1), 3, P(2), P(1)) == 0

    def test_lr_instance(self, P):
        assert littlewood_richardson(P(3, 2, 1), P(2, 1), P(2, 1)) == 2
        assert reduced_kronecker(P(3, 2, 1), P(2, 1), P(2, 1)) == 2

    def test_dimension_polynomial_of_row(self, P):
        poly = dimension_polynomial(P(2))

        assert [poly(d) for d in (0, 3, 5)] == [0, 0, 5]
        assert [d for d in range(0, 7) if poly(d) == 0] == [0, 3]

    def test_multiplicities_are_non_negative(self, P):
        for n in range(2, 8):
            for lam in partitions_of(2):
                assert multiplicity_at_integer(P(1), P(1), lam, n) >= 0


class TestSuitesAtAcceptanceSizes:
    """Each suite at its acceptance configuration reports zero violations."""

    def test_symmetry(self):
        assert_clean(identities.check_symmetry(max_size=4))

    def test_murnaghan_littlewood(self):
        assert_clean(identities.check_murnaghan_littlewood(max_size=5))

    def test_stabilization(self):
        assert_clean(identities.check_stabilization(max_size=4, span=8))

    def test_alternating_sum(self):
        assert_clean(identities.check_alternating_sum(max_size=3, n_window=(0, 4)))

    def test_maximum_and_sandwich(self):
        assert_clean(identities.check_maximum_and_sandwich(max_size=3, n_window=(0, 4)))

    def test_dagger(self):
        assert_clean(identities.run_suite("dagger", dagger_n=6))

    def test_trivial_class_vanishing(self):
        assert_clean(identities.check_trivial_class_vanishing(max_size=3, n_max=8))

    def test_projective_pairing(self):
        assert_clean(identities.check_projective_pairing(max_size=3, n_max=8))

    def test_lr_boundary(self):
        assert_clean(identities.check_lr_boundary(max_size=5))

    def test_dimension_roots(self):
        assert_clean(identities.check_dimension_roots(max_size=5))

    def test_integer_multiplicities(self):
        assert_clean(identities.check_integer_multiplicities(max_size=3, n_window=(0, 4)))

    def test_class_structure(self):
        assert_clean(identities.check_class_structure(max_size=3, n_max=8))

    def test_hom_lift_consistency(self):
        assert_clean(identities.check_hom_lift_consistency(max_size=3, n_max=8))

    def test_global(self):
        assert_clean(identities.check_global(max_size=3))

    def test_top_degree(self):
        assert_clean(identities.check_top_degree(max_size=3))


class TestTableDeterminism:
    """A warm-cache table run reproduces the cold run byte for byte."""

    def test_warm_rerun(self, tmp_path, cache_path):
        cold, warm = tmp_path / "cold.csv", tmp_path / "warm.csv"
        TableService(CacheTestFactory.cache(cache_path), workers=2).write_table(3, cold)
        summary = TableService(CacheTestFactory.cache(cache_path)).write_table(3, warm)

        assert warm.read_bytes() == cold.read_bytes()
        assert summary["cache"]["misses"] == 0
