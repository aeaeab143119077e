"""Immutable value types shared by every package.

All types are frozen dataclasses; sequences are stored as tuples so values
can be hashed, cached and shipped to worker processes.
"""
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

import numpy as np
import sympy

from utils.errors import (
    InvalidEllVectorError,
    InvalidPermutationError,
    InvalidShapeError,
    RewriteError,
    SchubertPointsError,
)

Box = Tuple[int, int]  # (row, column), 1-indexed, row 1 on top


def _set(instance, name: str, value) -> None:
    object.__setattr__(instance, name, value)


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive row lengths, top to bottom."""
    rows: Tuple[int, ...]

    def __post_init__(self):
        rows = tuple(int(r) for r in self.rows)
        _set(self, 'rows', rows)
        if not rows:
            raise InvalidShapeError("partition must have at least one row")
        if any(r <= 0 for r in rows):
            raise InvalidShapeError(f"partition rows must be positive: {rows}")
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise InvalidShapeError(f"partition rows must be weakly decreasing: {rows}")

    @property
    def n(self) -> int:
        return sum(self.rows)

    @property
    def num_rows(self) -> int:
        return len(self.rows)

    @property
    def num_columns(self) -> int:
        return self.rows[0]

    def boxes(self) -> Iterator[Box]:
        for r, length in enumerate(self.rows, start=1):
            for c in range(1, length + 1):
                yield (r, c)

    def to_list(self) -> List[int]:
        return list(self.rows)

    def __str__(self) -> str:
        return ",".join(str(r) for r in self.rows)


@dataclass(frozen=True)
class Composition:
    """Row lengths of a truncated tableau; empty rows keep their position."""
    rows: Tuple[int, ...]

    def __post_init__(self):
        rows = tuple(int(r) for r in self.rows)
        _set(self, 'rows', rows)
        if any(r < 0 for r in rows):
            raise InvalidShapeError(f"composition parts must be nonnegative: {rows}")

    @property
    def n(self) -> int:
        return sum(self.rows)

    def __str__(self) -> str:
        return ",".join(str(r) for r in self.rows)


@dataclass(frozen=True, eq=False)
class PartialTableau:
    """Rows of distinct positive entries, each row strictly increasing.

    Empty rows are allowed so that truncations keep their row positions.
    Equality and hashing only look at the rows, so a StandardTableau equals
    the RowStrictTableau with the same filling.
    """
    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        _set(self, 'rows', rows)
        values = [v for row in rows for v in row]
        if any(v <= 0 for v in values):
            raise InvalidShapeError(f"tableau entries must be positive: {self}")
        if len(set(values)) != len(values):
            raise InvalidShapeError(f"tableau entries must be distinct: {self}")
        for row in rows:
            if any(a >= b for a, b in zip(row, row[1:])):
                raise InvalidShapeError(f"rows must strictly increase: {self}")

    def __eq__(self, other):
        if not isinstance(other, PartialTableau):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    @property
    def composition(self) -> Composition:
        return Composition(tuple(len(row) for row in self.rows))

    @property
    def entries(self) -> Dict[Box, int]:
        return {(r, c): v
                for r, row in enumerate(self.rows, start=1)
                for c, v in enumerate(row, start=1)}

    def position(self, value: int) -> Box:
        for r, row in enumerate(self.rows, start=1):
            if value in row:
                return (r, row.index(value) + 1)
        raise KeyError(value)

    def columns(self) -> List[Tuple[int, ...]]:
        width = max((len(row) for row in self.rows), default=0)
        return [tuple(row[c] for row in self.rows if len(row) > c) for c in range(width)]

    def to_dict(self) -> dict:
        return {
            'shape': [len(row) for row in self.rows],
            'rows': [list(row) for row in self.rows],
        }

    def __str__(self) -> str:
        return "/".join(",".join(str(v) for v in row) for row in self.rows)


@dataclass(frozen=True, eq=False)
class RowStrictTableau(PartialTableau):
    """Bijective filling of a partition by 1..n with strictly increasing rows."""

    def __post_init__(self):
        super().__post_init__()
        lengths = tuple(len(row) for row in self.rows)
        if not lengths or 0 in lengths:
            raise InvalidShapeError(f"row-strict tableau cannot have empty rows: {self}")
        if any(a < b for a, b in zip(lengths, lengths[1:])):
            raise InvalidShapeError(f"tableau shape is not a partition: {lengths}")
        values = sorted(v for row in self.rows for v in row)
        if values != list(range(1, len(values) + 1)):
            raise InvalidShapeError(f"entries must be exactly 1..{len(values)}: {self}")

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(row) for row in self.rows))

    @property
    def n(self) -> int:
        return self.size


@dataclass(frozen=True, eq=False)
class StandardTableau(RowStrictTableau):
    """Row-strict tableau whose columns also increase top to bottom."""

    def __post_init__(self):
        super().__post_init__()
        for column in self.columns():
            if any(a >= b for a, b in zip(column, column[1:])):
                raise InvalidShapeError(f"columns must strictly increase: {self}")


@dataclass(frozen=True)
class BaseFilling:
    """Labels 1..n placed bottom-to-top in each column, columns left to right."""
    shape: Partition
    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        _set(self, 'rows', tuple(tuple(row) for row in self.rows))

    def label(self, box: Box) -> int:
        r, c = box
        return self.rows[r - 1][c - 1]

    def box_of(self) -> Dict[int, Box]:
        """Map label -> box."""
        return {v: (r, c)
                for r, row in enumerate(self.rows, start=1)
                for c, v in enumerate(row, start=1)}

    def __str__(self) -> str:
        return "/".join(",".join(str(v) for v in row) for row in self.rows)


@dataclass(frozen=True, order=True)
class Permutation:
    """Element of S_n in one-line notation w(1),...,w(n)."""
    one_line: Tuple[int, ...]

    def __post_init__(self):
        one_line = tuple(int(v) for v in self.one_line)
        _set(self, 'one_line', one_line)
        if sorted(one_line) != list(range(1, len(one_line) + 1)) or not one_line:
            raise InvalidPermutationError(f"not a permutation of 1..{len(one_line)}: {one_line}")

    @property
    def n(self) -> int:
        return len(self.one_line)

    def __call__(self, i: int) -> int:
        return self.one_line[i - 1]

    def to_list(self) -> List[int]:
        return list(self.one_line)

    def __str__(self) -> str:
        return "[" + ",".join(str(v) for v in self.one_line) + "]"


@dataclass(frozen=True)
class Word:
    """Sequence of simple reflection indices s_a1 s_a2 ..."""
    letters: Tuple[int, ...]

    def __post_init__(self):
        letters = tuple(int(a) for a in self.letters)
        _set(self, 'letters', letters)
        if any(a < 1 for a in letters):
            raise InvalidPermutationError(f"simple reflection indices start at 1: {letters}")

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "e"
        return " ".join(f"s{a}" for a in self.letters)


@dataclass(frozen=True)
class MonotoneFactorization:
    """w = w_{n-1} ... w_1 with w_i = s_{i-l_i+1} ... s_i.

    Stored as string lengths; lengths[i - 1] is the length of w_i and the
    string is empty when it is zero. Every tuple with 0 <= l_i <= i is valid.
    """
    n: int
    lengths: Tuple[int, ...]

    def __post_init__(self):
        lengths = tuple(int(v) for v in self.lengths)
        _set(self, 'lengths', lengths)
        if self.n < 1 or len(lengths) != self.n - 1:
            raise InvalidPermutationError(
                f"factorization of S_{self.n} needs {self.n - 1} strings, got {len(lengths)}")
        for i, length in enumerate(lengths, start=1):
            if not 0 <= length <= i:
                raise InvalidPermutationError(f"string w_{i} cannot have length {length}")

    def length(self, i: int) -> int:
        return self.lengths[i - 1]

    @property
    def strings(self) -> Tuple[Optional[Tuple[int, int]], ...]:
        """(k_i, i) for each nonempty w_i = s_{k_i} ... s_i, None for empty strings."""
        return tuple((i - length + 1, i) if length else None
                     for i, length in enumerate(self.lengths, start=1))

    def string_letters(self, i: int) -> Tuple[int, ...]:
        length = self.lengths[i - 1]
        return tuple(range(i - length + 1, i + 1))

    def word(self) -> Word:
        letters: List[int] = []
        for i in range(self.n - 1, 0, -1):
            letters.extend(self.string_letters(i))
        return Word(tuple(letters))

    @property
    def total_length(self) -> int:
        return sum(self.lengths)

    def __str__(self) -> str:
        parts = []
        for i in range(self.n - 1, 0, -1):
            letters = self.string_letters(i)
            parts.append("(" + (" ".join(f"s{a}" for a in letters) if letters else "e") + ")")
        return "".join(parts) if parts else "()"


@dataclass(frozen=True)
class PoincarePolynomial:
    """Polynomial in t with nonnegative integer coefficients, low degree first."""
    coefficients: Tuple[int, ...]

    def __post_init__(self):
        coefficients = [int(c) for c in self.coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        _set(self, 'coefficients', tuple(coefficients))
        if any(c < 0 for c in coefficients):
            raise SchubertPointsError(f"Poincare coefficients must be nonnegative: {coefficients}")

    @classmethod
    def from_degrees(cls, degrees) -> 'PoincarePolynomial':
        """Sum of t^d over an iterable of degrees."""
        counts: List[int] = []
        for d in degrees:
            if d >= len(counts):
                counts.extend([0] * (d + 1 - len(counts)))
            counts[d] += 1
        return cls(tuple(counts))

    @classmethod
    def from_expr(cls, expr) -> 'PoincarePolynomial':
        t = sympy.Symbol('t')
        poly = sympy.Poly(sympy.sympify(expr), t)
        return cls(tuple(int(c) for c in reversed(poly.all_coeffs())))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, d: int) -> int:
        return self.coefficients[d] if 0 <= d < len(self.coefficients) else 0

    def evaluate(self, t: int) -> int:
        return sum(c * t ** d for d, c in enumerate(self.coefficients))

    def __add__(self, other: 'PoincarePolynomial') -> 'PoincarePolynomial':
        size = max(len(self.coefficients), len(other.coefficients))
        return PoincarePolynomial(tuple(self.coefficient(d) + other.coefficient(d) for d in range(size)))

    def to_expr(self):
        t = sympy.Symbol('t')
        return sympy.Add(*[c * t ** d for d, c in enumerate(self.coefficients)])

    def to_list(self) -> List[int]:
        return list(self.coefficients)

    def __str__(self) -> str:
        terms = []
        for d in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[d]
            if c == 0:
                continue
            if d == 0:
                terms.append(str(c))
            else:
                power = "t" if d == 1 else f"t^{d}"
                terms.append(power if c == 1 else f"{c}{power}")
        return " + ".join(terms) if terms else "0"


@dataclass(frozen=True)
class NilpotentMatrix:
    """Sparse 0/1 matrix; (k, j) in ones means X_kj = 1."""
    n: int
    ones: FrozenSet[Tuple[int, int]]

    def __post_init__(self):
        ones = frozenset((int(k), int(j)) for k, j in self.ones)
        _set(self, 'ones', ones)
        sources = [k for k, _ in ones]
        targets = [j for _, j in ones]
        if any(k == j for k, j in ones):
            raise InvalidShapeError("nilpotent matrix cannot have diagonal entries")
        if len(set(sources)) != len(sources) or len(set(targets)) != len(targets):
            raise InvalidShapeError("each index may be a source or a target at most once")

    def to_array(self) -> np.ndarray:
        matrix = np.zeros((self.n, self.n), dtype=np.int64)
        for k, j in self.ones:
            matrix[k - 1, j - 1] = 1
        return matrix

    def is_nilpotent(self) -> bool:
        return not np.linalg.matrix_power(self.to_array(), self.n).any()

    def to_list(self) -> List[List[int]]:
        return [list(pair) for pair in sorted(self.ones)]


@dataclass(frozen=True, order=True)
class DimensionPair:
    p: int
    q: int

    def __post_init__(self):
        if not self.p < self.q:
            raise InvalidShapeError(f"dimension pair needs p < q, got ({self.p}, {self.q})")


@dataclass(frozen=True)
class EllVector:
    """l_1, ..., l_{n-1}; values[q - 2] = l_{q-1} lies in 0..q-1."""
    values: Tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        _set(self, 'values', values)
        for q, value in enumerate(values, start=2):
            if not 0 <= value <= q - 1:
                raise InvalidEllVectorError(f"l_{q - 1} = {value} is outside 0..{q - 1}")

    @property
    def n(self) -> int:
        return len(self.values) + 1

    def to_list(self) -> List[int]:
        return list(self.values)

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.values) + ")"


@dataclass(frozen=True)
class Monomial:
    """prod x_i^{l_{i-1}}; exponents[i - 2] is the exponent of x_i, i = 2..n."""
    exponents: Tuple[int, ...]

    def __post_init__(self):
        exponents = tuple(int(v) for v in self.exponents)
        _set(self, 'exponents', exponents)
        for i, e in enumerate(exponents, start=2):
            if not 0 <= e <= i - 1:
                raise InvalidEllVectorError(f"exponent of x_{i} must lie in 0..{i - 1}, got {e}")

    def exponent(self, i: int) -> int:
        if i == 1:
            return 0
        return self.exponents[i - 2]

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def to_expr(self):
        return sympy.Mul(*[sympy.Symbol(f'x{i}') ** e for i, e in enumerate(self.exponents, start=2)])

    def to_list(self) -> List[int]:
        return list(self.exponents)

    def __str__(self) -> str:
        factors = []
        for i in range(len(self.exponents) + 1, 1, -1):
            e = self.exponents[i - 2]
            if e:
                factors.append(f"x{i}" if e == 1 else f"x{i}^{e}")
        return " ".join(factors) if factors else "1"


@dataclass(frozen=True)
class StarString:
    """s_lo s_lo+1 ... s_hi, empty when hi < lo."""
    lo: int
    hi: int

    def __post_init__(self):
        if not self.is_empty and self.lo < 1:
            raise RewriteError(f"star string must start at s_1 or later, got s_{self.lo}")

    @classmethod
    def empty(cls) -> 'StarString':
        return cls(1, 0)

    @property
    def is_empty(self) -> bool:
        return self.hi < self.lo

    @property
    def letters(self) -> Tuple[int, ...]:
        return tuple(range(self.lo, self.hi + 1))

    def __len__(self) -> int:
        return max(0, self.hi - self.lo + 1)

    def __str__(self) -> str:
        if self.is_empty:
            return "e"
        return " ".join(f"s{a}" for a in self.letters)


@dataclass(frozen=True)
class CommuteOutcome:
    """Result of moving a star past one string.

    case is 1..4; length is the new string length; star is the star that
    continues to the next string (empty after a glue or a dissolve).
    """
    case: int
    length: int
    star: StarString

    @property
    def glued(self) -> bool:
        return self.case == 2

    @property
    def dissolved(self) -> bool:
        return self.case == 3 and self.star.is_empty

    @property
    def terminated(self) -> bool:
        return self.glued or self.dissolved


@dataclass(frozen=True)
class RewriteState:
    """w'_{n-1} ... w'_i (star_i) w_{i-1} ... w_1.

    lengths holds the processed string lengths for indices >= index and the
    untouched ones below it.
    """
    n: int
    index: int
    lengths: Tuple[int, ...]
    star: StarString

    def word(self) -> Word:
        letters: List[int] = []
        for i in range(self.n - 1, 0, -1):
            if i == self.index - 1:
                letters.extend(self.star.letters)
            length = self.lengths[i - 1]
            letters.extend(range(i - length + 1, i + 1))
        if self.index <= 1:
            letters.extend(self.star.letters)
        return Word(tuple(letters))


@dataclass(frozen=True)
class RewriteStep:
    index: int
    case: int
    length_before: int
    length_after: int
    star_before: StarString
    star_after: StarString


@dataclass(frozen=True)
class DeletionRun:
    """Full record of deleting one letter and renormalising."""
    original: MonotoneFactorization
    string_index: int
    position: int
    letter: int
    states: Tuple[RewriteState, ...]
    steps: Tuple[RewriteStep, ...]
    termination: str  # glue / dissolve / trivial
    result: MonotoneFactorization


@dataclass(frozen=True)
class TwoColumnTraceStep:
    """Diagram data for one step of a two-column deletion trace."""
    index: int
    shape: Partition
    shaded_rows: Tuple[int, ...]
    box_row: int  # row of lambda[i] holding the box of i
    c: int
    c_prime: int
    case: int
    rewritten_shape: Partition
    rewritten_box_row: int
    top_single_row_shaded: bool

    def to_dict(self) -> dict:
        return {
            'i': self.index,
            'shape': self.shape.to_list(),
            'shaded_rows': list(self.shaded_rows),
            'box_row': self.box_row,
            'c': self.c,
            'c_prime': self.c_prime,
            'case': self.case,
        }


@dataclass(frozen=True)
class Witness:
    """Counterexample record attached to a failing report."""
    kind: str
    permutation: Permutation
    word: Word
    ell: Tuple[int, ...]
    source: Optional[Permutation] = None
    site: Optional[Tuple[int, int]] = None
    chain: Tuple[Permutation, ...] = ()

    def to_dict(self) -> dict:
        return {
            'kind': self.kind,
            'permutation': self.permutation.to_list(),
            'word': list(self.word.letters),
            'missing_ell_vector': list(self.ell),
            'source': self.source.to_list() if self.source else None,
            'site': list(self.site) if self.site else None,
            'chain': [p.to_list() for p in self.chain],
        }


VERDICT_HOLDS = 'holds'
VERDICT_FAILS = 'fails'


@dataclass(frozen=True)
class VerificationReport:
    shape: Partition
    claim: str
    verdict: str
    polynomials: Dict[str, PoincarePolynomial] = field(default_factory=dict)
    witnesses: Tuple[Witness, ...] = ()
    versus: Optional[Partition] = None

    def __post_init__(self):
        _set(self, 'witnesses', tuple(self.witnesses))
        if self.verdict not in (VERDICT_HOLDS, VERDICT_FAILS):
            raise SchubertPointsError(f"unknown verdict: {self.verdict}")
        if self.verdict == VERDICT_FAILS and not self.witnesses:
            raise SchubertPointsError("a failing report needs at least one witness")

    @property
    def holds(self) -> bool:
        return self.verdict == VERDICT_HOLDS

    def to_dict(self) -> dict:
        data = {'shape': self.shape.to_list()}
        if self.versus is not None:
            data['versus'] = self.versus.to_list()
        data['claim'] = self.claim
        data['verdict'] = self.verdict
        data['polynomials'] = {name: poly.to_list() for name, poly in self.polynomials.items()}
        data['witnesses'] = [w.to_dict() for w in self.witnesses]
        return data
