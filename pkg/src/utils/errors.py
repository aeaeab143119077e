"""Exception hierarchy for schubert-points.

Every error raised by the library derives from SchubertPointsError, which is a
ValueError so callers that only care about bad input can catch that.
"""


class SchubertPointsError(ValueError):
    """Base class for all library errors."""


class ParseError(SchubertPointsError):
    """Malformed partition, tableau, word or one-line text."""


class InvalidShapeError(SchubertPointsError):
    """A partition, composition or tableau violates its invariants."""


class InvalidPermutationError(SchubertPointsError):
    """A one-line sequence or word is not a valid element of S_n."""


class RankMismatchError(SchubertPointsError):
    """Objects of different rank n were combined."""


class InvalidEllVectorError(SchubertPointsError):
    """An ell-vector entry is outside 0..q-1."""


class ShapeFamilyError(SchubertPointsError):
    """The shape is outside the family an operation supports."""


class IncomparableShapesError(SchubertPointsError):
    """Two partitions are not related as required in dominance order."""


class RewriteError(SchubertPointsError):
    """Star propagation precondition violated or deletion site out of range."""
