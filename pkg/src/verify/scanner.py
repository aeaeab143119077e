"""Scan every partition of a family up to a size bound."""

from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Tuple

from utils.constants import DEFAULT_JOBS, FAMILIES
from utils.data_structures import Partition, VerificationReport
from utils.errors import ShapeFamilyError
from utils.logging_config import get_logger, init_worker_logging, worker_logging_args
from shapes.partitions import in_family, partitions_of
from verify.verifiers import check_closure, check_theorem1

logger = get_logger(__name__)


def family_partitions(family: str, max_n: int) -> List[Partition]:
    """Partitions of 1..max_n in the family, n increasing, reverse lex within n.

    Raises:
        ShapeFamilyError: Unknown family or max_n < 1
    """
    if family not in FAMILIES:
        raise ShapeFamilyError(f"unknown family: {family} (choose from {', '.join(FAMILIES)})")
    if max_n < 1:
        raise ShapeFamilyError(f"max_n must be at least 1, got {max_n}")
    return [shape for n in range(1, max_n + 1) for shape in partitions_of(n) if in_family(shape, family)]


def scan_shape(shape: Partition) -> Tuple[VerificationReport, VerificationReport]:
    """Poincare equality and closure for one shape; runs inside worker processes."""
    return check_theorem1(shape, require_valid_family=False), check_closure(shape)


def scan(family: str, max_n: int, jobs: Optional[int] = None) -> List[VerificationReport]:
    """Reports for every shape of the family, two per shape, in scan order.

    Args:
        family: three-row, two-column, all or invalid-only
        max_n: Largest size to scan
        jobs: Worker processes; 1 runs in this process

    Returns:
        theorem1 and closure report of each shape, shape order preserved
    """
    shapes = family_partitions(family, max_n)
    jobs = jobs or DEFAULT_JOBS
    logger.info(f"scanning {len(shapes)} shapes of family {family} up to n={max_n} with {jobs} jobs")

    if jobs == 1:
        pairs = [scan_shape(shape) for shape in shapes]
    else:
        with ProcessPoolExecutor(max_workers=jobs, initializer=init_worker_logging,
                                 initargs=worker_logging_args()) as executor:
            pairs = list(executor.map(scan_shape, shapes))

    reports = [report for pair in pairs for report in pair]
    failures = sum(1 for report in reports if not report.holds)
    if failures:
        logger.warning(f"scan of {family} up to n={max_n}: {failures} failing reports")
    else:
        logger.info(f"scan of {family} up to n={max_n}: all {len(reports)} reports hold")
    return reports
