"""
Tests for data_structures.py.

Tests the immutable value types shared by every package.
"""

import numpy as np
import pytest
import sympy

from utils.data_structures import (
    VERDICT_FAILS,
    VERDICT_HOLDS,
    CommuteOutcome,
    DimensionPair,
    EllVector,
    Monomial,
    MonotoneFactorization,
    NilpotentMatrix,
    PartialTableau,
    Partition,
    Permutation,
    PoincarePolynomial,
    RewriteState,
    RowStrictTableau,
    StandardTableau,
    StarString,
    VerificationReport,
    Witness,
    Word,
)
from utils.errors import (
    InvalidEllVectorError,
    InvalidPermutationError,
    InvalidShapeError,
    RewriteError,
    SchubertPointsError,
)


class TestPartition:
    """Tests for Partition dataclass."""

    def test_partition_properties(self):
        """Test size, row and column counts."""
        # Act
        shape = Partition((3, 2, 2))

        # Assert
        assert shape.n == 7
        assert shape.num_rows == 3
        assert shape.num_columns == 3
        assert str(shape) == "3,2,2"

    def test_partition_coerces_lists_to_tuples(self):
        """Test that list input is stored as a hashable tuple."""
        shape = Partition([2, 1])

        assert shape.rows == (2, 1)
        assert hash(shape) == hash(Partition((2, 1)))

    def test_partition_boxes_row_major(self):
        """Test boxes are listed row by row, 1-indexed."""
        assert list(Partition((2, 1)).boxes()) == [(1, 1), (1, 2), (2, 1)]

    @pytest.mark.parametrize("rows", [(), (2, 0), (1, 2), (3, -1)])
    def test_partition_rejects_invalid_rows(self, rows):
        """Test empty, zero, increasing and negative rows are rejected."""
        with pytest.raises(InvalidShapeError):
            Partition(rows)


class TestTableaux:
    """Tests for the tableau hierarchy."""

    def test_row_strict_tableau_shape(self):
        """Test shape and size of a row-strict tableau."""
        # Act
        tableau = RowStrictTableau(((1, 3, 5), (2,), (4,), (6,)))

        # Assert
        assert tableau.shape == Partition((3, 1, 1, 1))
        assert tableau.n == 6
        assert str(tableau) == "1,3,5/2/4/6"

    def test_row_strict_rejects_decreasing_row(self):
        """Test that a row that does not increase is rejected."""
        with pytest.raises(InvalidShapeError):
            RowStrictTableau(((2, 1), (3,)))

    def test_row_strict_rejects_gaps_in_entries(self):
        """Test that entries must be exactly 1..n."""
        with pytest.raises(InvalidShapeError):
            RowStrictTableau(((1, 2), (4,)))

    def test_standard_rejects_decreasing_column(self):
        """Test that a standard tableau needs increasing columns."""
        with pytest.raises(InvalidShapeError):
            StandardTableau(((2, 3), (1,)))

    def test_standard_equals_row_strict_with_same_rows(self):
        """Test equality only looks at the filling."""
        rows = ((1, 2), (3,))

        assert StandardTableau(rows) == RowStrictTableau(rows)
        assert len({StandardTableau(rows), RowStrictTableau(rows)}) == 1

    def test_partial_tableau_keeps_empty_rows(self):
        """Test truncated tableaux keep row positions."""
        partial = PartialTableau(((1,), (), (2,)))

        assert partial.composition.rows == (1, 0, 1)
        assert partial.size == 2

    def test_position_and_entries(self):
        """Test box lookup in both directions."""
        tableau = RowStrictTableau(((1, 3), (2,)))

        assert tableau.position(3) == (1, 2)
        assert tableau.entries[(2, 1)] == 2
        with pytest.raises(KeyError):
            tableau.position(9)

    def test_to_dict(self):
        """Test serialisation layout."""
        tableau = RowStrictTableau(((1, 2), (3, 4), (5,)))

        assert tableau.to_dict() == {'shape': [2, 2, 1], 'rows': [[1, 2], [3, 4], [5]]}


class TestPermutationAndWord:
    """Tests for Permutation and Word."""

    def test_permutation_call_is_one_indexed(self):
        """Test w(i) reads the one-line notation."""
        w = Permutation((3, 5, 2, 4, 1))

        assert w(1) == 3
        assert w(5) == 1
        assert w.n == 5
        assert str(w) == "[3,5,2,4,1]"

    @pytest.mark.parametrize("one_line", [(), (1, 1), (0, 1), (1, 3)])
    def test_permutation_rejects_non_bijections(self, one_line):
        """Test invalid one-line notations."""
        with pytest.raises(InvalidPermutationError):
            Permutation(one_line)

    def test_permutations_order_lexicographically(self):
        """Test sorting uses the one-line notation."""
        assert sorted([Permutation((2, 1)), Permutation((1, 2))])[0] == Permutation((1, 2))

    def test_word_str(self):
        """Test word rendering and the empty word."""
        assert str(Word((3, 4, 3))) == "s3 s4 s3"
        assert str(Word(())) == "e"
        assert len(Word((1, 2))) == 2

    def test_word_rejects_zero(self):
        """Test simple reflections start at s1."""
        with pytest.raises(InvalidPermutationError):
            Word((0,))


class TestMonotoneFactorization:
    """Tests for MonotoneFactorization."""

    def test_strings_and_word(self):
        """Test the factorization (s5)(e)(s2 s3)(s2)(s1)."""
        # Arrange
        factorization = MonotoneFactorization(6, (1, 1, 2, 0, 1))

        # Act & Assert
        assert str(factorization) == "(s5)(e)(s2 s3)(s2)(s1)"
        assert factorization.word() == Word((5, 2, 3, 2, 1))
        assert factorization.total_length == 5
        assert factorization.strings == ((1, 1), (2, 2), (2, 3), None, (5, 5))
        assert factorization.string_letters(3) == (2, 3)

    def test_rejects_too_long_string(self):
        """Test w_i has at most i letters."""
        with pytest.raises(InvalidPermutationError):
            MonotoneFactorization(3, (2, 0))

    def test_rejects_wrong_number_of_strings(self):
        """Test the number of strings is n - 1."""
        with pytest.raises(InvalidPermutationError):
            MonotoneFactorization(4, (1, 1))


class TestPoincarePolynomial:
    """Tests for PoincarePolynomial."""

    def test_str_highest_degree_first(self):
        """Test the textual rendering."""
        poly = PoincarePolynomial((1, 4, 9, 11, 5))

        assert str(poly) == "5t^4 + 11t^3 + 9t^2 + 4t + 1"
        assert poly.degree == 4
        assert poly.evaluate(1) == 30

    def test_trailing_zeros_stripped(self):
        """Test equal polynomials compare equal regardless of padding."""
        assert PoincarePolynomial((1, 2, 0, 0)) == PoincarePolynomial((1, 2))
        assert str(PoincarePolynomial(())) == "0"

    def test_from_degrees(self):
        """Test counting degrees."""
        assert PoincarePolynomial.from_degrees([0, 1, 1, 3]).coefficients == (1, 2, 0, 1)

    def test_addition(self):
        """Test coefficient-wise addition."""
        assert PoincarePolynomial((1, 1)) + PoincarePolynomial((0, 0, 2)) == PoincarePolynomial((1, 1, 2))

    def test_sympy_round_trip(self):
        """Test conversion through a sympy expression."""
        t = sympy.Symbol('t')
        poly = PoincarePolynomial.from_expr(sympy.expand((1 + t) * (1 + t + t ** 2)))

        assert poly.coefficients == (1, 2, 2, 1)
        assert sympy.expand(poly.to_expr() - (1 + 2 * t + 2 * t ** 2 + t ** 3)) == 0

    def test_rejects_negative_coefficients(self):
        """Test Betti numbers are nonnegative."""
        with pytest.raises(SchubertPointsError):
            PoincarePolynomial((1, -1))


class TestSmallValueTypes:
    """Tests for NilpotentMatrix, DimensionPair, EllVector, Monomial and StarString."""

    def test_nilpotent_matrix_array(self):
        """Test the dense view and nilpotency."""
        matrix = NilpotentMatrix(3, frozenset({(1, 2), (2, 3)}))

        array = matrix.to_array()

        assert array.shape == (3, 3)
        assert array[0, 1] == 1 and array[1, 2] == 1
        assert int(np.sum(array)) == 2
        assert matrix.is_nilpotent()

    def test_nilpotent_matrix_rejects_diagonal(self):
        with pytest.raises(InvalidShapeError):
            NilpotentMatrix(2, frozenset({(1, 1)}))

    def test_dimension_pair_needs_increasing(self):
        """Test p < q."""
        assert DimensionPair(1, 2) < DimensionPair(1, 3)
        with pytest.raises(InvalidShapeError):
            DimensionPair(3, 3)

    def test_ell_vector_range(self):
        """Test l_{q-1} must lie in 0..q-1."""
        assert EllVector((1, 2, 3)).n == 4
        with pytest.raises(InvalidEllVectorError):
            EllVector((2,))

    def test_monomial_rendering(self):
        """Test x5^2 x4 x3 and the constant monomial."""
        assert str(Monomial((0, 1, 1, 2))) == "x5^2 x4 x3"
        assert str(Monomial((0, 0))) == "1"
        assert Monomial((0, 1, 1, 2)).degree == 4
        assert Monomial((0, 1, 1, 2)).exponent(5) == 2
        assert Monomial((0, 1, 1, 2)).to_expr() == sympy.Symbol('x5') ** 2 * sympy.Symbol('x4') * sympy.Symbol('x3')

    def test_star_string(self):
        """Test letters, length and the empty star."""
        star = StarString(6, 8)

        assert star.letters == (6, 7, 8)
        assert len(star) == 3
        assert StarString.empty().is_empty
        assert len(StarString.empty()) == 0
        with pytest.raises(RewriteError):
            StarString(0, 2)

    def test_commute_outcome_flags(self):
        """Test glue and dissolve detection."""
        assert CommuteOutcome(2, 3, StarString.empty()).glued
        assert CommuteOutcome(3, 0, StarString.empty()).dissolved
        assert not CommuteOutcome(3, 1, StarString(1, 1)).terminated

    def test_rewrite_state_word_places_star(self):
        """Test the star sits between the processed and remaining strings."""
        state = RewriteState(4, 3, (1, 0, 1), StarString(1, 1))

        # w'_3 = s3, star s1, then w_2 = e and w_1 = s1
        assert state.word() == Word((3, 1, 1))


class TestVerificationReport:
    """Tests for VerificationReport."""

    def test_failing_report_needs_witness(self):
        """Test the fails-implies-witness invariant."""
        with pytest.raises(SchubertPointsError):
            VerificationReport(Partition((2,)), 'closure', VERDICT_FAILS)

    def test_unknown_verdict_rejected(self):
        with pytest.raises(SchubertPointsError):
            VerificationReport(Partition((2,)), 'closure', 'maybe')

    def test_to_dict_key_order(self):
        """Test the serialised field order is stable."""
        # Arrange
        witness = Witness('kind', Permutation((2, 1)), Word((1,)), (1,))
        report = VerificationReport(
            shape=Partition((1, 1)),
            claim='closure',
            verdict=VERDICT_FAILS,
            polynomials={'springer': PoincarePolynomial((1, 1))},
            witnesses=[witness],
            versus=Partition((1, 1)),
        )

        # Act
        data = report.to_dict()

        # Assert
        assert list(data) == ['shape', 'versus', 'claim', 'verdict', 'polynomials', 'witnesses']
        assert data['polynomials'] == {'springer': [1, 1]}
        assert data['witnesses'][0]['permutation'] == [2, 1]
        assert data['witnesses'][0]['missing_ell_vector'] == [1]
        assert not report.holds

    def test_holding_report_without_versus(self):
        report = VerificationReport(Partition((2,)), 'closure', VERDICT_HOLDS)

        assert report.holds
        assert 'versus' not in report.to_dict()
