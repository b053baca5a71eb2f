"""Exception hierarchy shared by all modules.

The CLI maps these onto stable exit codes; see oqecc.cli.
"""


class OqeccError(Exception):
    """Base class for every error raised by this package."""


class NotPrimeError(OqeccError):
    """The requested field characteristic is not a prime number."""


class FieldTooLargeError(OqeccError):
    """The requested field exceeds the desk-scale size cap."""


class OutOfRangeError(OqeccError):
    """An integer is not a valid element encoding for its field."""


class NotInSubfieldError(OqeccError):
    """An extension-field element expected in the embedded base field is not there.

    This signals a violated algebraic identity upstream, never a user error.
    """


class LayoutMismatchError(OqeccError):
    """An operation received a vector or code in the wrong layout."""


class DimensionMismatchError(OqeccError):
    """Operands disagree on field, block length, or matrix shape."""


class ZeroCodeError(OqeccError):
    """The zero code was passed to an operation that requires a nonzero code."""


class CapExceededError(OqeccError):
    """The instance is larger than the desk-scale enumeration or matrix cap."""


class TheoryViolationError(OqeccError):
    """A numerically certified identity failed; indicates a bug, never expected."""


class NonCommutingLiftError(TheoryViolationError):
    """Lifted hull generators failed to commute as matrices."""


class RankMismatchError(TheoryViolationError):
    """A projector's numeric rank disagrees with the predicted code dimension."""


class ParseError(OqeccError):
    """A code file could not be parsed or validated."""


class InvalidEncodingError(ParseError):
    """A generator entry is not a valid element encoding for the declared field."""
