"""
Unit Tests for Partition Core

Tests the Partition value type, parsing and the diagram transforms.
"""

from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.exceptions import (
    BoundViolationError,
    NotWeaklyDecreasingError,
    ParseError,
    PartitionError,
)
from src.kronecker.models.partition import EMPTY, Partition
from src.kronecker.services.characters import partitions_of
from src.kronecker.services.partitions import (
    bar,
    dagger,
    dim_irrep,
    mu_sequence,
    parse_partition,
    tilde,
)
from tests.test_fixtures.partition_factory import partitions


@pytest.mark.unit
class TestPartitionModel:
    """Test the Partition value type."""

    def test_trailing_zeros_are_dropped(self):
        assert Partition((2, 1, 0, 0)) == Partition((2, 1))
        assert hash(Partition((2, 1, 0))) == hash(Partition((2, 1)))

    def test_increasing_parts_are_rejected(self):
        with pytest.raises(NotWeaklyDecreasingError):
            Partition((1, 2))

    def test_negative_parts_are_rejected(self):
        with pytest.raises(PartitionError):
            Partition((2, -1))

    def test_basic_attributes(self, P):
        lam = P(4, 2, 1)

        assert lam.size == 7
        assert lam.length == 3
        assert lam.first == 4
        assert lam.row(1) == 4
        assert lam.row(3) == 1
        assert lam.row(4) == 0

    def test_empty_partition(self):
        assert EMPTY.size == 0
        assert EMPTY.first == 0
        assert not EMPTY
        assert EMPTY.encode() == "-"

    def test_row_is_one_indexed(self, P):
        with pytest.raises(IndexError):
            P(1).row(0)

    def test_contains(self, P):
        assert P(3, 2, 1).contains(P(2, 1))
        assert not P(2, 1).contains(P(3))
        assert P(2).contains(EMPTY)

    def test_ordering_is_size_then_reverse_lex(self, P):
        shuffled = [P(1, 1), P(3), EMPTY, P(2, 1), P(2), P(1), P(1, 1, 1)]
        assert sorted(shuffled) == [EMPTY, P(1), P(2), P(1, 1), P(3), P(2, 1), P(1, 1, 1)]

    def test_repr_and_str(self, P):
        assert repr(P(2, 1)) == "Partition(2, 1)"
        assert str(P(2, 1)) == "2,1"


@pytest.mark.unit
class TestParsePartition:
    """Test the text encoding parser."""

    def test_parses_parts(self, P):
        assert parse_partition("6,5,4,1") == P(6, 5, 4, 1)

    def test_parses_empty_token(self):
        assert parse_partition("-") == EMPTY

    def test_rejects_increasing(self):
        with pytest.raises(NotWeaklyDecreasingError):
            parse_partition("1,2")

    @pytest.mark.parametrize("text", ["", "0", "2,0", "a", "2,,1", "2;1", "-1", "2, 1x"])
    def test_rejects_malformed(self, text):
        with pytest.raises(ParseError) as exc_info:
            parse_partition(text)
        assert "suggestion" in exc_info.value.details

    @given(partitions(max_size=12))
    def test_encoding_parses_back(self, lam):
        assert parse_partition(lam.encode()) == lam


@pytest.mark.unit
class TestTransforms:
    """Test tilde, bar and dagger."""

    @pytest.mark.parametrize(
        "lam,n,expected",
        [((6, 5, 4, 1), 23, (7, 6, 5, 4, 1)), ((), 3, (3,)), ((2, 1), 5, (2, 2, 1))],
    )
    def test_tilde(self, lam, n, expected):
        assert tilde(Partition(lam), n) == Partition(expected)

    def test_tilde_below_bound(self, P):
        with pytest.raises(BoundViolationError) as exc_info:
            tilde(P(2, 1), 4)
        assert exc_info.value.details["minimum"] == 5

    @pytest.mark.parametrize(
        "lam,expected", [((7, 6, 5, 4, 1), (6, 5, 4, 1)), ((4,), ()), ((3, 3, 2), (3, 2)), ((), ())]
    )
    def test_bar(self, lam, expected):
        assert bar(Partition(lam)) == Partition(expected)

    @pytest.mark.parametrize("i,expected", [(1, (2, 1)), (2, (4, 1)), (3, (4, 3)), (4, (4, 3, 2))])
    def test_dagger(self, i, expected):
        assert dagger(Partition((3, 2, 1)), i) == Partition(expected)

    def test_dagger_index_must_be_positive(self, P):
        with pytest.raises(BoundViolationError):
            dagger(P(1), 0)

    @given(partitions(max_size=10))
    def test_first_dagger_is_bar(self, u):
        assert dagger(u, 1) == bar(u)

    @given(partitions(max_size=10), st.integers(min_value=1, max_value=12))
    def test_dagger_is_a_diagram_of_known_size(self, u, i):
        result = dagger(u, i)

        assert list(result.parts) == sorted(result.parts, reverse=True)
        assert result.size == u.size - u.row(i) + (i - 1)

    @given(partitions(max_size=8), st.integers(min_value=0, max_value=10))
    def test_bar_inverts_tilde(self, lam, extra):
        n = lam.size + lam.first + extra
        assert bar(tilde(lam, n)) == lam
        assert tilde(lam, n).size == n


@pytest.mark.unit
class TestMuSequence:
    """Test mu-sequence prefixes."""

    @pytest.mark.parametrize(
        "lam,t,K,expected",
        [
            ((2, 1), 5, 4, (2, 1, -1, -3)),
            ((), 0, 3, (0, -1, -2)),
            ((3, 1), 5, 4, (1, 2, -1, -3)),
        ],
    )
    def test_prefix(self, lam, t, K, expected):
        seq = mu_sequence(Partition(lam), t, K)
        assert seq.prefix == expected
        assert seq.length == K

    def test_repeats(self, P):
        assert mu_sequence(P(2, 1), 6, 4).has_repeats() is False
        assert mu_sequence(P(1), 1, 3).has_repeats() is True

    @given(partitions(max_size=10), st.integers(min_value=0, max_value=20), st.integers(1, 12))
    def test_entries_after_the_first_strictly_decrease(self, lam, t, K):
        tail = mu_sequence(lam, t, K).prefix[1:]
        assert all(a > b for a, b in zip(tail, tail[1:]))

    def test_prefix_length_must_be_positive(self, P):
        with pytest.raises(BoundViolationError):
            mu_sequence(P(1), 2, 0)


@pytest.mark.unit
class TestDimIrrep:
    """Test the hook-length dimension."""

    @pytest.mark.parametrize("lam,expected", [((5,), 1), ((2, 1), 2), ((4, 2), 9), ((), 1)])
    def test_values(self, lam, expected):
        assert dim_irrep(Partition(lam)) == expected

    @pytest.mark.parametrize("n", range(0, 8))
    def test_sum_of_squares_is_group_order(self, n):
        assert sum(dim_irrep(p) ** 2 for p in partitions_of(n)) == factorial(n)

    @pytest.mark.parametrize("k", range(0, 13))
    def test_single_column_is_one_dimensional(self, k):
        assert dim_irrep(Partition((1,) * k)) == 1

    @settings(max_examples=30)
    @given(partitions(min_size=1, max_size=10))
    def test_conjugate_has_same_dimension(self, lam):
        conjugate = Partition(sum(1 for p in lam.parts if p > j) for j in range(lam.first))
        assert dim_irrep(conjugate) == dim_irrep(lam)
