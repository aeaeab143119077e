"""Row-strict and standard tableaux, base fillings, truncation and standardization."""

from itertools import combinations
from typing import Iterator, List, Optional, Tuple

from utils.data_structures import (
    BaseFilling,
    Composition,
    PartialTableau,
    Partition,
    RowStrictTableau,
    StandardTableau,
)
from utils.errors import InvalidShapeError, ParseError
from utils.logging_config import get_logger
from shapes.partitions import conjugate

logger = get_logger(__name__)

Rows = Tuple[Tuple[int, ...], ...]


def parse_tableau(text: str, shape: Optional[Partition] = None) -> RowStrictTableau:
    """Parse "1,2/3,4/5" into a row-strict tableau.

    Args:
        text: Rows separated by "/", entries by ","
        shape: Expected shape, checked when given

    Returns:
        RowStrictTableau (a StandardTableau when the columns also increase)

    Raises:
        ParseError: Malformed text, not row-strict, or wrong shape
    """
    if text is None or not text.strip():
        raise ParseError("empty tableau")
    try:
        rows = tuple(tuple(int(v) for v in row.split(',') if v.strip())
                     for row in text.replace(' ', '').split('/'))
    except ValueError:
        raise ParseError(f"tableau entries must be integers: {text!r}")
    try:
        tableau = RowStrictTableau(rows)
    except InvalidShapeError as e:
        raise ParseError(f"invalid tableau {text!r}: {e}")
    if shape is not None and tableau.shape != shape:
        raise ParseError(f"tableau {text!r} has shape {tableau.shape}, expected {shape}")
    if is_standard(tableau):
        return StandardTableau(rows)
    return tableau


def format_tableau(tableau: PartialTableau) -> str:
    return str(tableau)


def base_filling(shape: Partition) -> BaseFilling:
    """Fill each column bottom to top, columns left to right."""
    heights = conjugate(shape).rows
    rows = [[0] * length for length in shape.rows]
    label = 1
    for c, height in enumerate(heights):
        for r in range(height - 1, -1, -1):
            rows[r][c] = label
            label += 1
    return BaseFilling(shape, tuple(tuple(row) for row in rows))


def iter_row_strict_rows(shape_rows: Tuple[int, ...]) -> Iterator[Rows]:
    """Raw row tuples of every row-strict filling, lexicographic by reading word."""

    def fill(remaining: Tuple[int, ...], index: int) -> Iterator[Rows]:
        if index == len(shape_rows):
            yield ()
            return
        for row in combinations(remaining, shape_rows[index]):
            chosen = set(row)
            rest = tuple(v for v in remaining if v not in chosen)
            for tail in fill(rest, index + 1):
                yield (row,) + tail

    return fill(tuple(range(1, sum(shape_rows) + 1)), 0)


def enumerate_row_strict(shape: Partition) -> List[RowStrictTableau]:
    """All row-strict tableaux of the shape, lexicographic by row-reading word."""
    return [RowStrictTableau(rows) for rows in iter_row_strict_rows(shape.rows)]


def iter_standard_rows(shape_rows: Tuple[int, ...]) -> List[Rows]:
    """Raw row tuples of every standard filling, lexicographic by reading word."""
    found: List[Rows] = []
    n = sum(shape_rows)
    current: List[List[int]] = [[] for _ in shape_rows]

    def place(value: int):
        if value > n:
            found.append(tuple(tuple(row) for row in current))
            return
        for r, length in enumerate(shape_rows):
            size = len(current[r])
            if size < length and (r == 0 or len(current[r - 1]) > size):
                current[r].append(value)
                place(value + 1)
                current[r].pop()

    place(1)
    found.sort(key=lambda rows: tuple(v for row in rows for v in row))
    return found


def enumerate_standard(shape: Partition) -> List[StandardTableau]:
    """All standard tableaux of the shape, lexicographic by row-reading word."""
    return [StandardTableau(rows) for rows in iter_standard_rows(shape.rows)]


def truncate(tableau: PartialTableau, i: int) -> Tuple[PartialTableau, Composition]:
    """Delete the boxes holding i+1, ..., n.

    Rows keep their positions, so emptied rows stay as zero parts of the
    composition.
    """
    if not 1 <= i <= tableau.size:
        raise InvalidShapeError(f"truncation index {i} outside 1..{tableau.size}")
    rows = tuple(tuple(v for v in row if v <= i) for row in tableau.rows)
    partial = PartialTableau(rows)
    return partial, partial.composition


def is_standard(tableau: PartialTableau) -> bool:
    for column in tableau.columns():
        if any(a >= b for a, b in zip(column, column[1:])):
            return False
    return True


def standardize(tableau: RowStrictTableau) -> StandardTableau:
    """Sort every column increasing top to bottom."""
    columns = [sorted(column) for column in tableau.columns()]
    rows = tuple(tuple(columns[c][r] for c in range(len(row)))
                 for r, row in enumerate(tableau.rows))
    return StandardTableau(rows)
