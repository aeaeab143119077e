"""Canonical factorization w = w_{n-1} ... w_1 into monotone increasing strings."""

from typing import Sequence, Tuple

from utils.data_structures import MonotoneFactorization, Permutation, Word


def lengths_of_one_line(one_line: Sequence[int]) -> Tuple[int, ...]:
    """String lengths l_1..l_{n-1} of the canonical factorization.

    Peels strings top-down: l_i = (i+1) - w(i+1) in the current S_{i+1},
    after which the value at position i+1 is dropped and the rest relabelled.
    """
    values = list(one_line)
    lengths = [0] * (len(values) - 1)
    for i in range(len(values) - 1, 0, -1):
        k = values[i]
        lengths[i - 1] = i + 1 - k
        values = [v - 1 if v > k else v for v in values[:i]]
    return tuple(lengths)


def one_line_of_lengths(lengths: Sequence[int]) -> Tuple[int, ...]:
    """Inverse of lengths_of_one_line."""
    n = len(lengths) + 1
    current = list(range(1, n + 1))
    for i in range(n - 1, 0, -1):
        length = lengths[i - 1]
        if length:
            # s_a s_a+1 ... s_i moves the entry at position a to position i+1
            current.insert(i, current.pop(i - length))
    return tuple(current)


def canonical_factorization(w: Permutation) -> MonotoneFactorization:
    return MonotoneFactorization(w.n, lengths_of_one_line(w.one_line))


def factorization_to_permutation(factorization: MonotoneFactorization) -> Permutation:
    return Permutation(one_line_of_lengths(factorization.lengths))


def reduced_word(w: Permutation) -> Word:
    """The reduced word read off the canonical factorization."""
    return canonical_factorization(w).word()
