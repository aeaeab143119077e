"""Partitions, compositions and tableaux."""

from .partitions import dominance_leq, family_of, is_valid_family, parse_partition, partitions_of, sorted_shape
from .tableaux import (
    base_filling,
    enumerate_row_strict,
    enumerate_standard,
    parse_tableau,
    standardize,
    truncate,
)

__all__ = [
    'base_filling',
    'dominance_leq',
    'family_of',
    'is_valid_family',
    'enumerate_row_strict',
    'enumerate_standard',
    'parse_partition',
    'parse_tableau',
    'partitions_of',
    'sorted_shape',
    'standardize',
    'truncate',
]
