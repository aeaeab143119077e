"""Star propagation after deleting one letter from a canonical factorization.

Deleting s_m from w_j = s_start ... s_j leaves the suffix s_{m+1} ... s_j as
the new w'_j and a star s_start ... s_{m-1} in front of w_{j-1}. The star is
moved past w_{j-1}, w_{j-2}, ... with commute_star until it glues into a
string (case 2) or runs out of letters (case 3 dissolve).
"""
from typing import List, Tuple

from utils.data_structures import (
    CommuteOutcome,
    DeletionRun,
    MonotoneFactorization,
    RewriteState,
    RewriteStep,
    StarString,
    Word,
)
from utils.errors import RewriteError
from utils.logging_config import get_logger

logger = get_logger(__name__)

TERMINATION_GLUE = 'glue'
TERMINATION_DISSOLVE = 'dissolve'
TERMINATION_TRIVIAL = 'trivial'


def commute_star(star: StarString, i: int, length: int) -> CommuteOutcome:
    """Rewrite star_i * w_{i-1} as w'_{i-1} * star_{i-1}.

    Args:
        star: s_p' ... s_p with p <= i - 1
        i: index of the star; the string passed is w_{i-1} = s_{i-l} ... s_{i-1}
        length: l, the length of w_{i-1} (0 for the empty string)

    Returns:
        CommuteOutcome with the case id, the new length of w'_{i-1} and the
        star that continues (empty once glued or dissolved)

    Raises:
        RewriteError: Empty star, p >= i, or a string length outside 0..i-1
    """
    if star.is_empty:
        raise RewriteError("cannot commute an empty star")
    if star.hi > i - 1:
        raise RewriteError(f"star {star} cannot pass w_{i - 1}: needs p <= {i - 1}")
    if not 0 <= length <= i - 1:
        raise RewriteError(f"string w_{i - 1} cannot have length {length}")

    lo, hi = star.lo, star.hi
    start = i - length  # first letter of w_{i-1}; equals i when the string is empty
    if hi < start - 1:
        return CommuteOutcome(1, length, star)
    if hi == start - 1:
        return CommuteOutcome(2, length + hi - lo + 1, StarString.empty())
    if lo <= start:
        return CommuteOutcome(3, length - 1, StarString(lo, hi - 1) if hi - 1 >= lo else StarString.empty())
    return CommuteOutcome(4, length, StarString(lo - 1, hi - 1))


def single_deletions(factorization: MonotoneFactorization) -> List[Tuple[int, int]]:
    """Every (string index j, position k) deletion site, top string first."""
    return [(j, k)
            for j in range(factorization.n - 1, 0, -1)
            for k in range(1, factorization.length(j) + 1)]


def deleted_word(factorization: MonotoneFactorization, j: int, k: int) -> Word:
    """The word of the factorization with the k-th letter of w_j removed."""
    _check_site(factorization, j, k)
    letters = []
    for i in range(factorization.n - 1, 0, -1):
        string = factorization.string_letters(i)
        if i == j:
            string = string[:k - 1] + string[k:]
        letters.extend(string)
    return Word(tuple(letters))


def _check_site(factorization: MonotoneFactorization, j: int, k: int):
    if not 1 <= j <= factorization.n - 1:
        raise RewriteError(f"string index {j} outside 1..{factorization.n - 1}")
    length = factorization.length(j)
    if length == 0:
        raise RewriteError(f"string w_{j} is empty")
    if not 1 <= k <= length:
        raise RewriteError(f"position {k} outside 1..{length} in w_{j}")


def delete_and_normalize_run(factorization: MonotoneFactorization, j: int, k: int) -> DeletionRun:
    """Delete the k-th letter of w_j and renormalise, keeping every step.

    Raises:
        RewriteError: j or k out of range, or w_j empty
    """
    _check_site(factorization, j, k)
    n = factorization.n
    start = j - factorization.length(j) + 1
    letter = start + k - 1

    lengths = list(factorization.lengths)
    lengths[j - 1] = j - letter
    star = StarString(start, letter - 1) if k > 1 else StarString.empty()
    states = [RewriteState(n, j, tuple(lengths), star)]
    steps = []
    termination = TERMINATION_TRIVIAL

    i = j
    while not star.is_empty:
        if i < 2:
            raise RewriteError(f"star {star} left over after the last string")
        before = lengths[i - 2]
        outcome = commute_star(star, i, before)
        lengths[i - 2] = outcome.length
        steps.append(RewriteStep(i, outcome.case, before, outcome.length, star, outcome.star))
        star = outcome.star
        states.append(RewriteState(n, i - 1, tuple(lengths), star))
        if outcome.glued:
            termination = TERMINATION_GLUE
        elif outcome.dissolved:
            termination = TERMINATION_DISSOLVE
        i -= 1

    result = MonotoneFactorization(n, tuple(lengths))
    logger.debug(f"deleted s_{letter} from w_{j} of {factorization}: "
                 f"{termination} after {len(steps)} steps -> {result}")
    return DeletionRun(
        original=factorization,
        string_index=j,
        position=k,
        letter=letter,
        states=tuple(states),
        steps=tuple(steps),
        termination=termination,
        result=result,
    )


def delete_and_normalize(factorization: MonotoneFactorization, j: int, k: int) -> MonotoneFactorization:
    """Canonical factorization of the word with the k-th letter of w_j deleted."""
    return delete_and_normalize_run(factorization, j, k).result
