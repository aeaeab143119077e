"""Unit tests for weyl.bruhat module."""

from itertools import combinations, permutations
from typing import Set

import pytest

from utils.data_structures import Permutation, PoincarePolynomial, Word
from utils.errors import RankMismatchError
from weyl.bruhat import (
    bruhat_covers_below,
    bruhat_leq,
    deletion_chain,
    flag_poincare,
    lower_ideal,
    rank_matrix,
    union_ideal,
    union_levels,
    union_poincare,
)
from weyl.factorization import reduced_word
from weyl.permutations import identity, length, longest_element, parse_word, word_to_permutation


def _w(word: str, n: int) -> Permutation:
    return word_to_permutation(parse_word(word), n)


def _subwords(w: Permutation) -> Set[Permutation]:
    """Everything below w by the subword criterion on one reduced word of w."""
    letters = reduced_word(w).letters
    return {word_to_permutation(Word(sub), w.n)
            for size in range(len(letters) + 1)
            for sub in combinations(letters, size)}


IDEALS_221 = [
    ("s3 s4 s3 s2", "s3 s4 s3 s2, s3 s4 s3, s3 s4 s2, s4 s3 s2, s3 s4, s4 s3, s4 s2, s3 s2, s4, s3, s2, e"),
    ("s4 s2 s3 s2", "s4 s2 s3 s2, s4 s2 s3, s2 s3 s2, s4 s3 s2, s4 s2, s4 s3, s3 s2, s2 s3, s4, s3, s2, e"),
    ("s3 s4 s3 s1", "s3 s4 s3 s1, s3 s4 s3, s3 s4 s1, s4 s3 s1, s3 s4, s4 s3, s3 s1, s4 s1, s4, s3, s1, e"),
    ("s4 s2 s3 s1", "s4 s2 s3 s1, s4 s2 s3, s4 s2 s1, s4 s3 s1, s2 s3 s1, s4 s2, s4 s3, s2 s3, s4 s1, s3 s1, "
                    "s2 s1, s4, s3, s2, s1, e"),
    ("s4 s1 s2 s1", "s4 s1 s2 s1, s4 s1 s2, s4 s2 s1, s1 s2 s1, s4 s2, s4 s1, s2 s1, s1 s2, s4, s2, s1, e"),
]


class TestBruhatLeq:
    """Tests for bruhat_leq()."""

    def test_identity_below_everything(self):
        for one_line in permutations(range(1, 5)):
            assert bruhat_leq(identity(4), Permutation(one_line))
            assert bruhat_leq(Permutation(one_line), longest_element(4))

    def test_simple_reflections_incomparable(self):
        assert not bruhat_leq(_w("s1", 3), _w("s2", 3))
        assert not bruhat_leq(_w("s2", 3), _w("s1", 3))

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_matches_subword_criterion(self, n):
        """Test the rank-matrix criterion against the subword property on all pairs of S_n."""
        elements = [Permutation(p) for p in permutations(range(1, n + 1))]
        for w in elements:
            below = _subwords(w)
            for v in elements:
                assert bruhat_leq(v, w) == (v in below)

    def test_rank_mismatch(self):
        with pytest.raises(RankMismatchError):
            bruhat_leq(identity(2), identity(3))

    def test_rank_matrix_is_read_only(self):
        ranks = rank_matrix((2, 1))

        assert ranks.tolist() == [[1, 1], [2, 1]]
        with pytest.raises(ValueError):
            ranks[0, 0] = 5


class TestCovers:
    """Tests for bruhat_covers_below() and deletion_chain()."""

    def test_covers_of_s1s2(self):
        assert bruhat_covers_below(_w("s1 s2", 3)) == [_w("s2", 3), _w("s1", 3)]

    def test_covers_drop_length_by_one(self):
        for one_line in permutations(range(1, 6)):
            w = Permutation(one_line)
            for v in bruhat_covers_below(w):
                assert length(v) == length(w) - 1
                assert bruhat_leq(v, w)

    def test_identity_has_no_covers(self):
        assert bruhat_covers_below(identity(4)) == []

    def test_deletion_chain_is_saturated(self):
        w = longest_element(4)
        v = _w("s2", 4)

        chain = deletion_chain(v, w)

        assert chain[0] == w and chain[-1] == v
        assert [length(u) for u in chain] == [6, 5, 4, 3, 2, 1]
        assert all(bruhat_leq(b, a) for a, b in zip(chain, chain[1:]))

    def test_deletion_chain_empty_when_not_below(self):
        assert deletion_chain(_w("s1", 3), _w("s2", 3)) == ()


class TestIdeals:
    """Tests for lower ideals and their Poincare polynomials."""

    def test_golden_ideal_sizes(self):
        """Test the ideals of two Schubert points of (2,2,1)."""
        assert len(lower_ideal(_w("s4 s2 s3 s1", 5))) == 16
        assert len(lower_ideal(_w("s3 s4 s3 s2", 5))) == 12

    @pytest.mark.parametrize("word,listed", IDEALS_221)
    def test_golden_ideal_elements(self, word, listed):
        expected = {_w(element.strip(), 5) for element in listed.split(',')}

        assert lower_ideal(_w(word, 5)) == expected

    @pytest.mark.parametrize("word", ["s4 s2 s3 s1", "s3 s4 s5 s2 s3 s1", "s1 s2 s3 s4 s1 s2"])
    def test_ideal_is_downward_closed(self, word):
        ideal = lower_ideal(_w(word, 6))

        for v in ideal:
            assert set(bruhat_covers_below(v)) <= ideal
        for one_line in permutations(range(1, 7)):
            u = Permutation(one_line)
            if any(bruhat_leq(u, v) for v in ideal):
                assert u in ideal

    @pytest.mark.parametrize("words", [
        ["s3 s4 s3 s2", "s4 s1 s2 s1"],
        ["s5 s2 s3 s2 s1", "s3 s4 s5 s2 s3 s1"],
        ["s1", "s5", "s2 s3 s4"],
    ])
    def test_union_poincare_at_one_is_union_size(self, words):
        points = [_w(word, 6) for word in words]

        assert union_poincare(points).evaluate(1) == len(union_ideal(points))

    def test_ideal_contains_endpoints(self):
        w = _w("s3 s4 s3 s2", 5)
        ideal = lower_ideal(w)

        assert w in ideal
        assert identity(5) in ideal

    def test_union_of_221_points(self):
        """Test the union over the five standard points of (2,2,1)."""
        points = [_w(word, 5) for word in
                  ("s3 s4 s3 s2", "s4 s2 s3 s2", "s3 s4 s3 s1", "s4 s2 s3 s1", "s4 s1 s2 s1")]

        poly = union_poincare(points)

        assert poly == PoincarePolynomial((1, 4, 9, 11, 5))
        assert len(union_ideal(points)) == 30

    def test_union_counts_shared_elements_once(self):
        assert union_poincare([_w("s1", 3), _w("s2", 3)]) == PoincarePolynomial((1, 2))

    def test_union_levels_by_length(self):
        levels = union_levels([longest_element(3).one_line])

        assert [len(level) for level in levels] == [1, 2, 2, 1]

    def test_union_of_nothing(self):
        assert union_poincare([]) == PoincarePolynomial(())

    def test_union_rank_mismatch(self):
        with pytest.raises(RankMismatchError):
            union_levels([(1, 2), (1, 2, 3)])

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_flag_poincare_matches_longest_element(self, n):
        assert flag_poincare(n) == union_poincare([longest_element(n)])

    def test_flag_poincare_s4(self):
        assert flag_poincare(4).coefficients == (1, 3, 5, 6, 5, 3, 1)
