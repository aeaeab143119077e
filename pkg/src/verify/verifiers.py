"""Theorem-level checks on a single shape.

Failing reports carry at most MAX_WITNESSES witnesses, sorted by one-line
notation.
"""
from collections import Counter, deque
from typing import Dict, Iterable, List, Optional, Set, Tuple

from utils.constants import (
    CLAIM_CLOSURE,
    CLAIM_DELETION,
    CLAIM_DISSOLVING,
    CLAIM_DOMINANCE,
    CLAIM_MAXIMALITY,
    CLAIM_MONOMIALS,
    CLAIM_THEOREM1,
    MAX_WITNESSES,
    POLY_SCHUBERT_ALL,
    POLY_SCHUBERT_STANDARD,
    POLY_SPRINGER,
)
from utils.data_structures import (
    VERDICT_FAILS,
    VERDICT_HOLDS,
    EllVector,
    MonotoneFactorization,
    Partition,
    Permutation,
    PoincarePolynomial,
    RowStrictTableau,
    VerificationReport,
    Witness,
    Word,
)
from utils.errors import IncomparableShapesError, InvalidEllVectorError, ShapeFamilyError
from utils.logging_config import get_logger, get_verdict_logger
from shapes.partitions import dominance_leq, is_valid_family
from shapes.tableaux import iter_row_strict_rows, iter_standard_rows, standardize
from springer.springer_fiber import ell_values, springer_poincare
from schubert.schubert_points import point_index, point_one_lines, standard_point_one_lines
from weyl.bruhat import deletion_chain, leq_one_line, union_levels
from weyl.factorization import lengths_of_one_line, one_line_of_lengths, reduced_word
from weyl.permutations import inversion_count
from rewrite.star_rewriter import delete_and_normalize, single_deletions

logger = get_logger(__name__)
verdict_logger = get_verdict_logger()

OneLine = Tuple[int, ...]

KIND_NOT_A_POINT = 'ideal-element-not-a-point'
KIND_NOT_BELOW_STANDARD = 'point-not-below-standard-points'
KIND_DELETION = 'deletion-not-a-point'
KIND_NOT_BELOW_STANDARDIZATION = 'not-below-standardization'
KIND_STANDARD_NOT_MAXIMAL = 'standard-point-not-maximal'
KIND_MISSING_IN_VERSUS = 'point-missing-in-versus'
KIND_DUPLICATE_ELL = 'duplicate-ell-vector'
KIND_ELL_OUT_OF_RANGE = 'ell-vector-out-of-range'
KIND_DISSOLVING = 'dissolving-reduction-not-a-point'


def _witness(kind: str, missing: OneLine, source: Optional[OneLine] = None,
             site: Optional[Tuple[int, int]] = None) -> Witness:
    w = Permutation(missing)
    chain: Tuple[Permutation, ...] = ()
    source_perm = None
    if source is not None:
        source_perm = Permutation(source)
        chain = deletion_chain(w, source_perm)
    return Witness(
        kind=kind,
        permutation=w,
        word=reduced_word(w),
        ell=lengths_of_one_line(missing),
        source=source_perm,
        site=site,
        chain=chain,
    )


def _source_above(v: OneLine, generators: Iterable[OneLine]) -> Optional[OneLine]:
    """Smallest generator (by one-line notation) lying above v."""
    for g in sorted(generators):
        if leq_one_line(v, g):
            return g
    return None


def _ideal_witnesses(kind: str, missing: Set[OneLine], generators: Iterable[OneLine]) -> List[Witness]:
    generators = list(generators)
    return [_witness(kind, v, _source_above(v, generators))
            for v in sorted(missing)[:MAX_WITNESSES]]


def _report(shape: Partition, claim: str, witnesses: List[Witness],
            polynomials: Optional[Dict[str, PoincarePolynomial]] = None,
            versus: Optional[Partition] = None) -> VerificationReport:
    verdict = VERDICT_FAILS if witnesses else VERDICT_HOLDS
    report = VerificationReport(
        shape=shape,
        claim=claim,
        verdict=verdict,
        polynomials=polynomials or {},
        witnesses=tuple(witnesses[:MAX_WITNESSES]),
        versus=versus,
    )
    subject = f"({shape})" if versus is None else f"({shape}) >= ({versus})"
    verdict_logger.info(f"{claim} {verdict} {subject} witnesses={len(witnesses)}")
    if report.holds:
        logger.info(f"{claim} holds for ({shape})")
    else:
        logger.warning(f"{claim} fails for ({shape}): {len(witnesses)} witnesses, "
                       f"first {report.witnesses[0].permutation}")
    return report


def check_theorem1(shape: Partition, require_valid_family: bool = True) -> VerificationReport:
    """Springer polynomial = Poincare polynomial of the union over all points
    = Poincare polynomial of the union over standard points.

    Args:
        shape: Partition to check
        require_valid_family: Reject shapes with more than three rows and
            more than two columns (the scanner turns this off)

    Raises:
        ShapeFamilyError: Shape outside the family and require_valid_family set
    """
    if require_valid_family and not is_valid_family(shape):
        raise ShapeFamilyError(
            f"({shape}) has more than 3 rows and more than 2 columns; the equality is only "
            f"claimed for shapes with at most 3 rows or at most 2 columns")
    points = point_one_lines(shape.rows)
    standard = set(standard_point_one_lines(shape.rows))
    all_levels = union_levels(points)
    standard_levels = union_levels(standard)

    polynomials = {
        POLY_SPRINGER: springer_poincare(shape),
        POLY_SCHUBERT_ALL: PoincarePolynomial(tuple(len(level) for level in all_levels)),
        POLY_SCHUBERT_STANDARD: PoincarePolynomial(tuple(len(level) for level in standard_levels)),
    }
    witnesses: List[Witness] = []
    if len(set(polynomials.values())) > 1:
        # points are distinct and counted by dimension, so any gap shows up as a set difference
        union_all = set().union(*all_levels)
        union_standard = set().union(*standard_levels)
        witnesses.extend(_ideal_witnesses(KIND_NOT_A_POINT, union_all - points, points))
        witnesses.extend(_ideal_witnesses(KIND_NOT_BELOW_STANDARD, union_all - union_standard, points))
    return _report(shape, CLAIM_THEOREM1, witnesses, polynomials)


def check_closure(shape: Partition) -> VerificationReport:
    """Every element below a Schubert point is itself a Schubert point."""
    points = point_one_lines(shape.rows)
    levels = union_levels(points)
    missing = set().union(*levels) - points if levels else set()
    polynomials = {
        POLY_SPRINGER: springer_poincare(shape),
        POLY_SCHUBERT_ALL: PoincarePolynomial(tuple(len(level) for level in levels)),
    }
    return _report(shape, CLAIM_CLOSURE, _ideal_witnesses(KIND_NOT_A_POINT, missing, points), polynomials)


def check_deletion_closure(shape: Partition) -> VerificationReport:
    """Deleting any single letter of a point's canonical word gives a point."""
    index = point_index(shape.rows)
    found: Dict[OneLine, Tuple[OneLine, Tuple[int, int]]] = {}
    for ell in sorted(index):
        factorization = MonotoneFactorization(shape.n, ell)
        for j, k in single_deletions(factorization):
            result = delete_and_normalize(factorization, j, k)
            if result.lengths not in index:
                found.setdefault(one_line_of_lengths(result.lengths), (one_line_of_lengths(ell), (j, k)))
    witnesses = [_witness(KIND_DELETION, v, *found[v]) for v in sorted(found)[:MAX_WITNESSES]]
    return _report(shape, CLAIM_DELETION, witnesses)


def check_maximality(shape: Partition) -> VerificationReport:
    """w_T <= w_{standardize(T)} for every T, and every standard point has
    the maximal length among all points."""
    witnesses: List[Witness] = []
    top = 0
    for rows in iter_row_strict_rows(shape.rows):
        point = one_line_of_lengths(ell_values(rows))
        top = max(top, inversion_count(point))
        standard = standardize(RowStrictTableau(rows))
        standard_point = one_line_of_lengths(ell_values(standard.rows))
        if not leq_one_line(point, standard_point):
            witnesses.append(_witness(KIND_NOT_BELOW_STANDARDIZATION, point, standard_point))
    for rows in iter_standard_rows(shape.rows):
        point = one_line_of_lengths(ell_values(rows))
        if inversion_count(point) != top:
            witnesses.append(_witness(KIND_STANDARD_NOT_MAXIMAL, point))
    witnesses.sort(key=lambda w: w.permutation)
    return _report(shape, CLAIM_MAXIMALITY, witnesses)


def check_dominance(shape: Partition, versus: Partition) -> VerificationReport:
    """Points of shape are points of versus whenever shape dominates versus.

    Raises:
        RankMismatchError: The shapes have different sizes
        IncomparableShapesError: shape does not dominate versus
    """
    if not dominance_leq(versus, shape):
        raise IncomparableShapesError(f"({shape}) does not dominate ({versus})")
    smaller = point_one_lines(versus.rows)
    missing = point_one_lines(shape.rows) - smaller
    witnesses = [_witness(KIND_MISSING_IN_VERSUS, v) for v in sorted(missing)[:MAX_WITNESSES]]
    return _report(shape, CLAIM_DOMINANCE, witnesses, versus=versus)


def check_monomial_closure(shape: Partition) -> VerificationReport:
    """ell-vectors of distinct row-strict tableaux are distinct and in range."""
    counts = Counter(ell_values(rows) for rows in iter_row_strict_rows(shape.rows))
    witnesses: List[Witness] = []
    for ell in sorted(counts):
        try:
            EllVector(ell)
        except InvalidEllVectorError as e:
            logger.debug(f"ell-vector {ell} of ({shape}) rejected: {e}")
            identity = Permutation(tuple(range(1, shape.n + 1)))
            witnesses.append(Witness(KIND_ELL_OUT_OF_RANGE, identity, Word(()), ell))
            continue
        if counts[ell] > 1:
            witnesses.append(_witness(KIND_DUPLICATE_ELL, one_line_of_lengths(ell)))
    return _report(shape, CLAIM_MONOMIALS, witnesses)


def check_dissolving(shape: Partition) -> VerificationReport:
    """Shortening strings of a point's factorization to suffixes gives a point.

    Walks the entrywise-downward closure of the ell-vectors, remembering
    which point each vector was reached from.
    """
    index = point_index(shape.rows)
    reached: Dict[Tuple[int, ...], Tuple[int, ...]] = {ell: ell for ell in index}
    queue = deque(sorted(index))
    while queue:
        ell = queue.popleft()
        for i, value in enumerate(ell):
            if value:
                lower = ell[:i] + (value - 1,) + ell[i + 1:]
                if lower not in reached:
                    reached[lower] = reached[ell]
                    queue.append(lower)
    missing = sorted((one_line_of_lengths(ell), one_line_of_lengths(src))
                     for ell, src in reached.items() if ell not in index)
    witnesses = [_witness(KIND_DISSOLVING, v, source) for v, source in missing[:MAX_WITNESSES]]
    return _report(shape, CLAIM_DISSOLVING, witnesses)


CHECKS = {
    CLAIM_THEOREM1: check_theorem1,
    CLAIM_CLOSURE: check_closure,
    CLAIM_DELETION: check_deletion_closure,
    CLAIM_MAXIMALITY: check_maximality,
    CLAIM_MONOMIALS: check_monomial_closure,
    CLAIM_DISSOLVING: check_dissolving,
}


def run_check(shape: Partition, claim: str) -> VerificationReport:
    """Dispatch a single-shape claim by its identifier.

    Raises:
        ShapeFamilyError: Unknown claim identifier
    """
    try:
        check = CHECKS[claim]
    except KeyError:
        raise ShapeFamilyError(f"unknown claim: {claim}")
    logger.debug(f"checking {claim} for ({shape})")
    return check(shape)
