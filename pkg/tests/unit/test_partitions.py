"""Unit tests for shapes.partitions module."""

import math

import pytest
from hypothesis import given, settings, strategies as st

from utils.constants import FAMILY_ALL, FAMILY_INVALID_ONLY, FAMILY_THREE_ROW, FAMILY_TWO_COLUMN
from utils.data_structures import Composition, Partition
from utils.errors import InvalidShapeError, ParseError, RankMismatchError, ShapeFamilyError
from shapes.partitions import (
    conjugate,
    dominance_leq,
    family_of,
    hook_length_count,
    in_family,
    is_valid_family,
    multinomial_count,
    parse_partition,
    partitions_of,
    sorted_shape,
)


class TestParsePartition:
    """Tests for parse_partition()."""

    def test_parse_simple(self):
        assert parse_partition("2,2,1") == Partition((2, 2, 1))

    def test_parse_with_spaces(self):
        assert parse_partition(" 3, 1 ") == Partition((3, 1))

    @pytest.mark.parametrize("text", ["", "   ", "2,a", "1,2", "2,0", "2,,1"])
    def test_parse_rejects_malformed(self, text):
        """Test empty, non-integer, increasing and zero parts."""
        with pytest.raises(ParseError):
            parse_partition(text)


class TestPartitionsOf:
    """Tests for partitions_of()."""

    def test_reverse_lexicographic_order(self):
        """Test partitions of 5 start with (5) and end with (1^5)."""
        rows = [p.rows for p in partitions_of(5)]

        assert rows == [(5,), (4, 1), (3, 2), (3, 1, 1), (2, 2, 1), (2, 1, 1, 1), (1, 1, 1, 1, 1)]

    @pytest.mark.parametrize("n,count", [(1, 1), (4, 5), (6, 11), (8, 22), (9, 30)])
    def test_partition_counts(self, n, count):
        assert len(partitions_of(n)) == count

    def test_rejects_nonpositive(self):
        with pytest.raises(InvalidShapeError):
            partitions_of(0)


class TestShapeOperations:
    """Tests for sorted_shape, conjugate and dominance."""

    def test_sorted_shape_drops_zeros(self):
        """Test a truncated composition sorts into a partition."""
        assert sorted_shape(Composition((1, 0, 2, 1))) == Partition((2, 1, 1))

    def test_sorted_shape_of_zero_composition(self):
        with pytest.raises(InvalidShapeError):
            sorted_shape(Composition((0, 0)))

    def test_conjugate(self):
        assert conjugate(Partition((3, 1, 1, 1))) == Partition((4, 1, 1))
        assert conjugate(Partition((2, 2, 1))) == Partition((3, 2))

    @given(st.integers(min_value=1, max_value=9).flatmap(
        lambda n: st.sampled_from(partitions_of(n))))
    @settings(derandomize=True, max_examples=60)
    def test_conjugate_is_involution(self, shape):
        assert conjugate(conjugate(shape)) == shape

    @pytest.mark.parametrize("mu,lam,expected", [
        ((2, 2, 1), (3, 2), True),
        ((3, 2), (2, 2, 1), False),
        ((3, 3), (4, 1, 1), False),
        ((2, 2, 2), (3, 1, 1, 1), False),
        ((1, 1, 1), (2, 1), True),
        ((2, 2, 1), (2, 2, 1), True),
    ])
    def test_dominance(self, mu, lam, expected):
        """Test prefix-sum comparison, including incomparable pairs."""
        assert dominance_leq(Partition(mu), Partition(lam)) is expected

    def test_dominance_different_sizes(self):
        with pytest.raises(RankMismatchError):
            dominance_leq(Partition((2,)), Partition((2, 1)))


class TestFamilies:
    """Tests for the valid-family predicates."""

    @pytest.mark.parametrize("rows,valid", [
        ((2, 2, 1), True),
        ((5, 3, 1), True),
        ((2, 2, 2, 1, 1), True),
        ((3, 1, 1, 1), False),
        ((4, 2, 1, 1), False),
    ])
    def test_is_valid_family(self, rows, valid):
        assert is_valid_family(Partition(rows)) is valid

    def test_in_family(self):
        shape = Partition((2, 2, 1))

        assert in_family(shape, FAMILY_THREE_ROW)
        assert in_family(shape, FAMILY_TWO_COLUMN)
        assert in_family(shape, FAMILY_ALL)
        assert not in_family(shape, FAMILY_INVALID_ONLY)
        assert in_family(Partition((3, 1, 1, 1)), FAMILY_INVALID_ONLY)

    def test_in_family_unknown(self):
        with pytest.raises(ShapeFamilyError):
            in_family(Partition((1,)), 'four-row')

    def test_family_of_prefers_three_row(self):
        """Test shapes in both families are classified once."""
        assert family_of(Partition((2, 2, 1))) == FAMILY_THREE_ROW
        assert family_of(Partition((2, 1, 1, 1))) == FAMILY_TWO_COLUMN
        assert family_of(Partition((3, 1, 1, 1))) == FAMILY_INVALID_ONLY


class TestCounts:
    """Tests for the multinomial and hook-length counts."""

    def test_multinomial(self):
        assert multinomial_count(Partition((2, 2, 1))) == 30
        assert multinomial_count(Partition((3, 1, 1, 1))) == 120

    def test_hook_length(self):
        assert hook_length_count(Partition((2, 2, 1))) == 5
        assert hook_length_count(Partition((3, 2))) == 5
        assert hook_length_count(Partition((1, 1, 1, 1))) == 1

    def test_hook_lengths_sum_of_squares(self):
        """Test sum of f_lambda^2 over partitions of n is n!."""
        for n in range(1, 8):
            assert sum(hook_length_count(p) ** 2 for p in partitions_of(n)) == math.factorial(n)
