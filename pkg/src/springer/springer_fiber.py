"""Springer permutations, dimension pairs and the Springer-fiber Poincare polynomial.

The fiber itself is never built: each affine cell is represented by its
row-strict tableau and its dimension, which is all the Betti numbers need.
"""
from typing import List, Optional, Sequence, Set, Tuple

from utils.data_structures import (
    DimensionPair,
    EllVector,
    NilpotentMatrix,
    Partition,
    Permutation,
    PoincarePolynomial,
    RowStrictTableau,
)
from utils.errors import InvalidShapeError, RankMismatchError
from utils.logging_config import get_logger
from shapes.tableaux import base_filling, is_standard, iter_row_strict_rows
from weyl.permutations import inverse

logger = get_logger(__name__)


def nilpotent_matrix(shape: Partition) -> NilpotentMatrix:
    """X_kj = 1 when j sits directly right of k in the base filling."""
    filling = base_filling(shape)
    ones = {(k, j) for row in filling.rows for k, j in zip(row, row[1:])}
    return NilpotentMatrix(shape.n, frozenset(ones))


def springer_permutation(tableau: RowStrictTableau) -> Permutation:
    """The w with w^{-1}(i) equal to the entry of T in the box labelled i."""
    filling = base_filling(tableau.shape)
    w_inverse = [0] * tableau.n
    for r, c in tableau.shape.boxes():
        w_inverse[filling.label((r, c)) - 1] = tableau.rows[r - 1][c - 1]
    return inverse(Permutation(tuple(w_inverse)))


def tableau_from_springer_permutation(w: Permutation, shape: Partition) -> Optional[RowStrictTableau]:
    """Fill the box labelled i by w^{-1}(i); None when that filling is not row-strict.

    Raises:
        RankMismatchError: w is not in S_n for n = |shape|
    """
    if w.n != shape.n:
        raise RankMismatchError(f"permutation of S_{w.n} cannot index a tableau of size {shape.n}")
    filling = base_filling(shape)
    w_inverse = inverse(w)
    rows = tuple(tuple(w_inverse(label) for label in row) for row in filling.rows)
    if any(a >= b for row in rows for a, b in zip(row, row[1:])):
        return None
    return RowStrictTableau(rows)


def dimension_pairs(tableau: RowStrictTableau) -> Set[DimensionPair]:
    """Pairs p < q with q below p in p's column or in any column left of p,
    and q smaller than the entry right of p when there is one."""
    positions = {v: box for box, v in tableau.entries.items()}
    pairs = set()
    for p in range(1, tableau.n + 1):
        rp, cp = positions[p]
        row = tableau.rows[rp - 1]
        right = row[cp] if cp < len(row) else None
        for q in range(p + 1, tableau.n + 1):
            rq, cq = positions[q]
            if ((rq > rp and cq == cp) or cq < cp) and (right is None or q < right):
                pairs.add(DimensionPair(p, q))
    return pairs


def ell_values(rows: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    """Row count of the ell-vector on raw rows.

    l_{q-1} = rows of T[q] above q's row with the same length, plus rows of
    T[q] strictly longer than q's row.
    """
    n = sum(len(row) for row in rows)
    row_of = [0] * (n + 1)
    for r, row in enumerate(rows):
        for v in row:
            row_of[v] = r
    lengths = [0] * len(rows)
    values = []
    for q in range(1, n + 1):
        r = row_of[q]
        lengths[r] += 1
        size = lengths[r]
        if q == 1:
            continue
        values.append(sum(1 for s in range(r) if lengths[s] == size)
                      + sum(1 for other in lengths if other > size))
    return tuple(values)


def ell_vector(tableau: RowStrictTableau) -> EllVector:
    return EllVector(ell_values(tableau.rows))


def standard_ell_vector(tableau: RowStrictTableau) -> EllVector:
    """For standard T: l_{q-1} is the number of rows above q.

    Raises:
        InvalidShapeError: T is not standard
    """
    if not is_standard(tableau):
        raise InvalidShapeError(f"tableau {tableau} is not standard")
    return EllVector(tuple(tableau.position(q)[0] - 1 for q in range(2, tableau.n + 1)))


def springer_cells(shape: Partition) -> List[Tuple[RowStrictTableau, Permutation, int]]:
    """(tableau, Springer permutation, cell dimension) for every cell of the paving."""
    cells = []
    for rows in iter_row_strict_rows(shape.rows):
        tableau = RowStrictTableau(rows)
        cells.append((tableau, springer_permutation(tableau), sum(ell_values(rows))))
    return cells


def springer_poincare(shape: Partition) -> PoincarePolynomial:
    """Sum of t^dim over all row-strict tableaux of the shape."""
    poly = PoincarePolynomial.from_degrees(sum(ell_values(rows)) for rows in iter_row_strict_rows(shape.rows))
    logger.debug(f"P(B^{shape}, t) = {poly}")
    return poly


def top_degree_count(shape: Partition) -> int:
    """Number of top-dimensional cells."""
    return springer_poincare(shape).coefficients[-1]
