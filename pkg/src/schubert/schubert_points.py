"""Schubert points: the permutation w_T built from the ell-vector of a tableau.

w_T = w_{n-1} ... w_1 where w_{q-1} = s_{q-l} ... s_{q-1} has length
l = l_{q-1}(T). Its length equals the dimension of the cell of T.
"""
from functools import lru_cache
from itertools import product
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple, Union

from utils.data_structures import EllVector, Monomial, Partition, Permutation, RowStrictTableau, Word
from utils.errors import InvalidEllVectorError, InvalidShapeError, RankMismatchError
from utils.logging_config import get_logger
from shapes.tableaux import is_standard, iter_row_strict_rows, iter_standard_rows
from springer.springer_fiber import ell_values
from weyl.factorization import lengths_of_one_line, one_line_of_lengths
from weyl.permutations import word_to_permutation

logger = get_logger(__name__)

Rows = Tuple[Tuple[int, ...], ...]


def schubert_point_from_ell(ell: Union[EllVector, Sequence[int]], n: int) -> Permutation:
    """Build the Schubert point of an ell-vector.

    Raises:
        InvalidEllVectorError: Wrong number of entries or l_{q-1} outside 0..q-1
    """
    values = ell.values if isinstance(ell, EllVector) else tuple(ell)
    if len(values) != n - 1:
        raise InvalidEllVectorError(f"S_{n} needs {n - 1} ell entries, got {len(values)}")
    EllVector(values)  # range check
    return Permutation(one_line_of_lengths(values))


def schubert_point(tableau: RowStrictTableau) -> Permutation:
    return Permutation(one_line_of_lengths(ell_values(tableau.rows)))


def standard_shortcut(tableau: RowStrictTableau) -> Permutation:
    """If i sits in row k, w_{i-1} = s_{i-k+1} ... s_{i-1} (e when k = 1).

    Raises:
        InvalidShapeError: The tableau is not standard
    """
    if not is_standard(tableau):
        raise InvalidShapeError(f"the standard shortcut needs a standard tableau, got {tableau}")
    letters: List[int] = []
    for i in range(tableau.n, 1, -1):
        k = tableau.position(i)[0]
        letters.extend(range(i - k + 1, i))
    return word_to_permutation(Word(tuple(letters)), tableau.n)


def monomial(tableau: RowStrictTableau) -> Monomial:
    """prod_{i=2}^{n} x_i^{l_{i-1}}."""
    return Monomial(ell_values(tableau.rows))


@lru_cache(maxsize=16)
def point_index(shape_rows: Tuple[int, ...]) -> Dict[Tuple[int, ...], Rows]:
    """ell-vector -> rows of the unique row-strict tableau with that ell-vector."""
    index: Dict[Tuple[int, ...], Rows] = {}
    for rows in iter_row_strict_rows(shape_rows):
        index[ell_values(rows)] = rows
    logger.debug(f"indexed {len(index)} Schubert points of ({','.join(map(str, shape_rows))})")
    return index


@lru_cache(maxsize=16)
def point_one_lines(shape_rows: Tuple[int, ...]) -> FrozenSet[Tuple[int, ...]]:
    return frozenset(one_line_of_lengths(ell) for ell in point_index(shape_rows))


def standard_point_one_lines(shape_rows: Tuple[int, ...]) -> List[Tuple[int, ...]]:
    """Schubert points of the standard tableaux, in tableau enumeration order."""
    return [one_line_of_lengths(ell_values(rows)) for rows in iter_standard_rows(shape_rows)]


def schubert_point_set(shape: Partition) -> Dict[Permutation, RowStrictTableau]:
    """Every Schubert point of the shape with its tableau, sorted by one-line notation."""
    entries = [(Permutation(one_line_of_lengths(ell)), rows) for ell, rows in point_index(shape.rows).items()]
    entries.sort()
    return {w: RowStrictTableau(rows) for w, rows in entries}


def is_schubert_point(w: Permutation, shape: Partition) -> Optional[RowStrictTableau]:
    """The tableau whose Schubert point is w, or None.

    Raises:
        RankMismatchError: w is not in S_n for n = |shape|
    """
    if w.n != shape.n:
        raise RankMismatchError(f"permutation of S_{w.n} cannot be a point of a shape of size {shape.n}")
    rows = point_index(shape.rows).get(lengths_of_one_line(w.one_line))
    return RowStrictTableau(rows) if rows is not None else None


def monomial_set(shape: Partition) -> Set[Monomial]:
    return {Monomial(ell) for ell in point_index(shape.rows)}


def dissolving_reductions(w: Permutation) -> Set[Permutation]:
    """Replace each string w_i by any string below it in Bruhat order.

    Monotone strings ending at s_i that lie below s_k ... s_i are exactly its
    suffixes, so every length vector bounded entrywise by that of w occurs.
    """
    lengths = lengths_of_one_line(w.one_line)
    return {Permutation(one_line_of_lengths(reduced))
            for reduced in product(*(range(length + 1) for length in lengths))}
