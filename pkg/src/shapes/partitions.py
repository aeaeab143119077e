"""Partitions, compositions and dominance order."""

import math
from functools import lru_cache
from itertools import accumulate
from typing import List, Tuple

from utils.constants import (
    FAMILY_ALL,
    FAMILY_INVALID_ONLY,
    FAMILY_THREE_ROW,
    FAMILY_TWO_COLUMN,
    MAX_COLUMNS_VALID,
    MAX_ROWS_VALID,
)
from utils.data_structures import Composition, Partition
from utils.errors import InvalidShapeError, ParseError, RankMismatchError, ShapeFamilyError
from utils.logging_config import get_logger

logger = get_logger(__name__)


def parse_partition(text: str) -> Partition:
    """Parse "3,2,2" into a Partition.

    Args:
        text: Comma-separated positive integers, weakly decreasing

    Returns:
        Validated Partition

    Raises:
        ParseError: Empty text, non-integers, nonpositive or increasing parts
    """
    if text is None or not text.strip():
        raise ParseError("empty partition")
    try:
        rows = tuple(int(part) for part in text.replace(' ', '').split(','))
    except ValueError:
        raise ParseError(f"partition must be comma-separated integers: {text!r}")
    try:
        return Partition(rows)
    except InvalidShapeError as e:
        raise ParseError(f"invalid partition {text!r}: {e}")


def _partitions(n: int, largest: int):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partition_rows(n: int) -> Tuple[Tuple[int, ...], ...]:
    return tuple(_partitions(n, n))


def partitions_of(n: int) -> List[Partition]:
    """All partitions of n in reverse lexicographic order, (n) first."""
    if n < 1:
        raise InvalidShapeError(f"cannot partition {n}")
    return [Partition(rows) for rows in _partition_rows(n)]


def sorted_shape(composition: Composition) -> Partition:
    """Sort the parts decreasingly and drop zeros."""
    rows = tuple(sorted((r for r in composition.rows if r > 0), reverse=True))
    if not rows:
        raise InvalidShapeError("cannot sort the zero composition into a partition")
    return Partition(rows)


def conjugate(shape: Partition) -> Partition:
    """Column lengths of the diagram, left to right."""
    return Partition(tuple(sum(1 for r in shape.rows if r > c) for c in range(shape.num_columns)))


def dominance_leq(mu: Partition, lam: Partition) -> bool:
    """True iff mu <= lam in dominance order.

    Raises:
        RankMismatchError: The partitions have different sizes
    """
    if mu.n != lam.n:
        raise RankMismatchError(f"cannot compare partitions of {mu.n} and {lam.n}")
    mu_sums = list(accumulate(mu.rows))
    lam_sums = list(accumulate(lam.rows))
    size = max(len(mu_sums), len(lam_sums))
    mu_sums += [mu.n] * (size - len(mu_sums))
    lam_sums += [lam.n] * (size - len(lam_sums))
    return all(m <= l for m, l in zip(mu_sums, lam_sums))


def is_three_row(shape: Partition) -> bool:
    return shape.num_rows <= MAX_ROWS_VALID


def is_two_column(shape: Partition) -> bool:
    return shape.num_columns <= MAX_COLUMNS_VALID


def is_valid_family(shape: Partition) -> bool:
    """At most three rows or at most two columns."""
    return is_three_row(shape) or is_two_column(shape)


def in_family(shape: Partition, family: str) -> bool:
    if family == FAMILY_THREE_ROW:
        return is_three_row(shape)
    if family == FAMILY_TWO_COLUMN:
        return is_two_column(shape)
    if family == FAMILY_INVALID_ONLY:
        return not is_valid_family(shape)
    if family == FAMILY_ALL:
        return True
    raise ShapeFamilyError(f"unknown family: {family}")


def multinomial_count(shape: Partition) -> int:
    """n! / prod(lambda_i!), the number of row-strict fillings."""
    count = math.factorial(shape.n)
    for r in shape.rows:
        count //= math.factorial(r)
    return count


def hook_length_count(shape: Partition) -> int:
    """Number of standard tableaux by the hook-length formula."""
    columns = conjugate(shape).rows
    hooks = 1
    for r, length in enumerate(shape.rows):
        for c in range(length):
            hooks *= (length - c - 1) + (columns[c] - r - 1) + 1
    return math.factorial(shape.n) // hooks


def family_of(shape: Partition) -> str:
    """Narrowest scan family the shape belongs to; shapes in both valid families count as three-row."""
    if is_three_row(shape):
        return FAMILY_THREE_ROW
    if is_two_column(shape):
        return FAMILY_TWO_COLUMN
    return FAMILY_INVALID_ONLY
