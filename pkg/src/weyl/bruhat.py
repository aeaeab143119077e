"""Bruhat order, lower order ideals and Poincare polynomials of Schubert unions.

Comparisons use the rank-matrix criterion: v <= w iff for every i, j the
number of a <= i with v(a) >= j is at most the same count for w. Ideals are
generated level by level through Bruhat covers, so every level holds the
elements of one fixed length.
"""
from collections import defaultdict
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Set, Tuple

import numpy as np
import sympy

from utils.data_structures import Permutation, PoincarePolynomial
from utils.errors import RankMismatchError
from utils.logging_config import get_logger
from weyl.permutations import inversion_count

logger = get_logger(__name__)

OneLine = Tuple[int, ...]


@lru_cache(maxsize=65536)
def rank_matrix(one_line: OneLine) -> np.ndarray:
    """r[i, j] = #{a <= i : w(a) >= j + 1}, 0-based indices."""
    n = len(one_line)
    matrix = np.zeros((n, n), dtype=np.int32)
    matrix[np.arange(n), np.asarray(one_line) - 1] = 1
    ranks = np.cumsum(np.cumsum(matrix[:, ::-1], axis=1)[:, ::-1], axis=0)
    ranks.setflags(write=False)
    return ranks


def leq_one_line(v: OneLine, w: OneLine) -> bool:
    return bool(np.all(rank_matrix(v) <= rank_matrix(w)))


def bruhat_leq(v: Permutation, w: Permutation) -> bool:
    """True iff v <= w in Bruhat order.

    Raises:
        RankMismatchError: v and w live in different symmetric groups
    """
    if v.n != w.n:
        raise RankMismatchError(f"cannot compare elements of S_{v.n} and S_{w.n}")
    return leq_one_line(v.one_line, w.one_line)


def covers_below(one_line: OneLine) -> List[OneLine]:
    """Elements covered by w: swap a < b positions with w(a) > w(b) and no
    value strictly between them in the positions between."""
    n = len(one_line)
    covers = []
    for a in range(n - 1):
        high = one_line[a]
        best = 0
        for b in range(a + 1, n):
            low = one_line[b]
            if best < low < high:
                swapped = list(one_line)
                swapped[a], swapped[b] = low, high
                covers.append(tuple(swapped))
                best = low
    return covers


def bruhat_covers_below(w: Permutation) -> List[Permutation]:
    return sorted(Permutation(c) for c in covers_below(w.one_line))


def union_levels(sources: Iterable[OneLine]) -> List[Set[OneLine]]:
    """Union of the lower ideals of the sources, split by length.

    levels[d] holds every element of length d below some source.
    """
    by_length: Dict[int, Set[OneLine]] = defaultdict(set)
    ranks = set()
    for source in sources:
        by_length[inversion_count(source)].add(source)
        ranks.add(len(source))
    if len(ranks) > 1:
        raise RankMismatchError(f"ideal generators live in different ranks: {sorted(ranks)}")
    if not by_length:
        return []
    top = max(by_length)
    levels: List[Set[OneLine]] = [set() for _ in range(top + 1)]
    current: Set[OneLine] = set()
    for d in range(top, -1, -1):
        current |= by_length.get(d, set())
        levels[d] = current
        below: Set[OneLine] = set()
        for element in current:
            below.update(covers_below(element))
        current = below
    logger.debug(f"union of {sum(len(s) for s in by_length.values())} ideals has "
                 f"{sum(len(level) for level in levels)} elements")
    return levels


@lru_cache(maxsize=256)
def ideal_one_lines(one_line: OneLine) -> FrozenSet[OneLine]:
    """Memoized lower ideal of a single element, as raw one-line tuples."""
    return frozenset().union(*union_levels([one_line]))


def lower_ideal(w: Permutation) -> FrozenSet[Permutation]:
    """All v <= w, including the identity and w itself."""
    return frozenset(Permutation(v) for v in ideal_one_lines(w.one_line))


def union_ideal(ws: Iterable[Permutation]) -> Set[OneLine]:
    return set().union(*union_levels(w.one_line for w in ws))


def union_poincare(ws: Iterable[Permutation]) -> PoincarePolynomial:
    """Sum of t^length over the union of the lower ideals, each element once."""
    return PoincarePolynomial(tuple(len(level) for level in union_levels(w.one_line for w in ws)))


def deletion_chain(v: Permutation, w: Permutation) -> Tuple[Permutation, ...]:
    """A saturated chain w = u_0 > u_1 > ... > u_k = v through Bruhat covers.

    Each step drops the length by one, i.e. deletes one letter from a
    reduced word. Empty when v is not below w.
    """
    if not bruhat_leq(v, w):
        return ()
    chain = [w.one_line]
    while chain[-1] != v.one_line:
        chain.append(next(c for c in covers_below(chain[-1]) if leq_one_line(v.one_line, c)))
    return tuple(Permutation(u) for u in chain)


def flag_poincare(n: int) -> PoincarePolynomial:
    """prod_{i=1}^{n} (1 + t + ... + t^{i-1}), the Poincare polynomial of S_n."""
    t = sympy.Symbol('t')
    product = sympy.prod([sum(t ** k for k in range(i)) for i in range(1, n + 1)])
    return PoincarePolynomial.from_expr(sympy.expand(product))
