"""Exception hierarchy.

Every error raised on purpose by the library derives from :class:`TorconeError`.
The three direct families map onto the CLI exit codes: invalid input (2),
unsupported request (3) and verification failure (1).
"""


class TorconeError(Exception):
    """Base class for all library errors."""


class InvalidInput(TorconeError, ValueError):
    """Input is malformed or outside the domain of the operation."""


class Unsupported(TorconeError):
    """Input is well formed but beyond what this build handles."""


class VerificationFailure(TorconeError):
    """An exact check that is expected to succeed did not."""


# lattice
class ZeroVector(InvalidInput):
    pass


class NotPrimitive(InvalidInput):
    pass


# cone
class DimensionCapExceeded(Unsupported):
    pass


class DegenerateInput(InvalidInput):
    pass


class NotApplicable(InvalidInput):
    pass


class NotUnimodular(InvalidInput):
    """Cone is not SL(d,Z)-equivalent to a standard orthant-times-space cone."""


class NotStrictlyConvex(InvalidInput):
    pass


class EmptyFacetSet(InvalidInput):
    pass


class ZeroReeb(InvalidInput):
    pass


# classify
class InvalidAnglePair(InvalidInput):
    pass


class WholeSpaceCone(InvalidInput):
    pass


class UnclassifiableCone(NotUnimodular):
    pass


# forms
class VariableMismatch(InvalidInput):
    pass


class DegreeMismatch(InvalidInput):
    pass


class WeightMismatch(InvalidInput):
    pass


class NoPositiveT(VerificationFailure):
    pass
