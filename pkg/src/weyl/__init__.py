"""Symmetric group: words, canonical factorization and Bruhat order."""

from .permutations import length, word_to_permutation
from .factorization import canonical_factorization, factorization_to_permutation
from .bruhat import bruhat_leq, lower_ideal, union_poincare

__all__ = [
    'bruhat_leq',
    'canonical_factorization',
    'factorization_to_permutation',
    'length',
    'lower_ideal',
    'union_poincare',
    'word_to_permutation',
]
