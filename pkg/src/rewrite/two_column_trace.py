"""Box-level trace of a deletion for tableaux with at most two columns.

lambda[i] is the sorted shape of T[i]. Row r of lambda[i] stands for the
letter s_{i-r+1}, so the box of i sits in row l_{i-1} + 1 and a star
s_p' ... s_p at step i shades rows i-p+1 .. i-p'+1. lambda'[i] is the shape
the rewritten tableau must have: lambda'[j+1] = lambda[j+1], then one box is
taken from row l'_{i-1} + 1 at every step.
"""
from typing import List, Tuple

from utils.data_structures import MonotoneFactorization, Partition, RowStrictTableau, TwoColumnTraceStep
from utils.errors import ShapeFamilyError
from utils.logging_config import get_logger
from shapes.partitions import is_two_column, sorted_shape
from shapes.tableaux import truncate
from springer.springer_fiber import ell_values
from rewrite.star_rewriter import delete_and_normalize_run

logger = get_logger(__name__)


def _remove_box(rows: Tuple[int, ...], row: int) -> Tuple[int, ...]:
    """Take one box from the given row and re-sort."""
    shrunk = list(rows)
    shrunk[row - 1] -= 1
    return tuple(sorted((r for r in shrunk if r > 0), reverse=True))


def _second_column(rows: Tuple[int, ...]) -> int:
    return sum(1 for r in rows if r >= 2)


def _top_single_row(rows: Tuple[int, ...]) -> int:
    """1-based index of the first row of length one, 0 when there is none."""
    for r, length in enumerate(rows, start=1):
        if length == 1:
            return r
    return 0


def two_column_trace(tableau: RowStrictTableau, j: int, k: int) -> List[TwoColumnTraceStep]:
    """One step per string the star passes, from w_{j-1} down to termination.

    Args:
        tableau: Row-strict tableau with at most two columns
        j: String index of the deletion in the Schubert point of the tableau
        k: Position of the deleted letter inside w_j

    Raises:
        ShapeFamilyError: The shape has more than two columns
        RewriteError: The deletion site is out of range
    """
    if not is_two_column(tableau.shape):
        raise ShapeFamilyError(f"two-column trace needs at most two columns, got {tableau.shape}")
    n = tableau.n
    run = delete_and_normalize_run(MonotoneFactorization(n, ell_values(tableau.rows)), j, k)

    shapes = {i: sorted_shape(truncate(tableau, i)[1]).rows for i in range(1, n + 1)}
    rewritten = _remove_box(shapes[j + 1], run.result.length(j) + 1)

    steps = []
    for step in run.steps:
        i = step.index
        shape = shapes[i]
        lo, hi = step.star_before.lo, step.star_before.hi
        shaded = tuple(range(i - hi + 1, i - lo + 2))
        top_single = _top_single_row(shape)
        steps.append(TwoColumnTraceStep(
            index=i,
            shape=Partition(shape),
            shaded_rows=shaded,
            box_row=step.length_before + 1,
            c=_second_column(shape),
            c_prime=_second_column(rewritten),
            case=step.case,
            rewritten_shape=Partition(rewritten),
            rewritten_box_row=step.length_after + 1,
            top_single_row_shaded=bool(top_single) and top_single in shaded,
        ))
        rewritten = _remove_box(rewritten, step.length_after + 1)
    logger.debug(f"two-column trace of {tableau} at (w_{j}, {k}): cases "
                 f"{[s.case for s in steps]}")
    return steps


def predicted_gap(step: TwoColumnTraceStep) -> int:
    """c_{i-1} - c'_{i-1} according to the shaded-box case table.

    Only meaningful for non-gluing steps with c - c' in {0, 1}.
    """
    length = step.box_row - 1
    rewritten_length = step.rewritten_box_row - 1
    if step.c == step.c_prime:
        if step.case == 3 and rewritten_length == step.c - 1:
            return 1
        return 0
    if step.case in (1, 4) and length == step.c - 1:
        return 0
    return 1
