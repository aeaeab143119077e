"""Permutations of S_n and words in simple reflections.

A word s_a1 s_a2 ... s_ak is evaluated left to right starting from the
identity; each letter s_a swaps the entries in positions a and a+1 of the
one-line notation (right multiplication).
"""
import re
from typing import Iterable, List, Sequence, Tuple

from utils.data_structures import Permutation, Word
from utils.errors import InvalidPermutationError, ParseError, RankMismatchError

_LETTER = re.compile(r'^s?_?(\d+)$')


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def longest_element(n: int) -> Permutation:
    return Permutation(tuple(range(n, 0, -1)))


def apply_letters(one_line: List[int], letters: Iterable[int]) -> List[int]:
    """Right-multiply a one-line list by simple reflections, in place."""
    for a in letters:
        one_line[a - 1], one_line[a] = one_line[a], one_line[a - 1]
    return one_line


def word_to_permutation(word: Word, n: int) -> Permutation:
    """Evaluate a (not necessarily reduced) word in S_n.

    Raises:
        InvalidPermutationError: A letter is not below n
    """
    if any(a >= n for a in word.letters):
        raise InvalidPermutationError(f"word {word} has a letter outside s_1..s_{n - 1}")
    return Permutation(tuple(apply_letters(list(range(1, n + 1)), word.letters)))


def inversion_count(one_line: Sequence[int]) -> int:
    n = len(one_line)
    return sum(1 for a in range(n) for b in range(a + 1, n) if one_line[a] > one_line[b])


def length(w: Permutation) -> int:
    """Coxeter length, the number of inversions."""
    return inversion_count(w.one_line)


def inverse(w: Permutation) -> Permutation:
    result = [0] * w.n
    for position, value in enumerate(w.one_line, start=1):
        result[value - 1] = position
    return Permutation(tuple(result))


def multiply(u: Permutation, v: Permutation) -> Permutation:
    """The product uv, i.e. a word for u followed by a word for v."""
    if u.n != v.n:
        raise RankMismatchError(f"cannot multiply elements of S_{u.n} and S_{v.n}")
    return Permutation(tuple(u.one_line[v.one_line[a] - 1] for a in range(u.n)))


def parse_word(text: str) -> Word:
    """Parse "3 4 3 2", "s3 s4 s3 s2" or "s_3 s_4"; "e" is the empty word."""
    tokens = text.replace(',', ' ').split() if text else []
    if tokens == ['e']:
        return Word(())
    letters = []
    for token in tokens:
        match = _LETTER.match(token)
        if not match:
            raise ParseError(f"cannot read simple reflection {token!r}")
        letters.append(int(match.group(1)))
    try:
        return Word(tuple(letters))
    except InvalidPermutationError as e:
        raise ParseError(str(e))


def parse_one_line(text: str) -> Permutation:
    """Parse "[3,5,2,4,1]" (brackets optional)."""
    body = text.strip().lstrip('[').rstrip(']') if text else ''
    try:
        values: Tuple[int, ...] = tuple(int(v) for v in body.replace(' ', '').split(','))
    except ValueError:
        raise ParseError(f"one-line notation must be comma-separated integers: {text!r}")
    try:
        return Permutation(values)
    except InvalidPermutationError as e:
        raise ParseError(str(e))


def format_word(word: Word) -> str:
    return str(word)
