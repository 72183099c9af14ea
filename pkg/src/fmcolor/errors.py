"""Exception hierarchy for fmcolor.

Input problems (syntax, bad bicharacters, bad gradings, bad indices, scalar
order mismatches) are distinct classes so the CLI can map them to exit codes
and callers can catch precisely what they expect.
"""


class FmcError(Exception):
    """Base class for all fmcolor errors."""


class ScalarOrderError(FmcError):
    """Arithmetic mixed scalars from cyclotomic fields of different order."""


class SpecSyntaxError(FmcError):
    """Malformed input document or scalar literal.

    Carries an optional ``position`` (character offset within the offending
    string) for pinpointing the error.
    """

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class BicharacterViolation(FmcError):
    """Exponent matrix fails the skew or well-definedness congruences."""


class GradingViolation(FmcError):
    """A product entry or action matrix lands outside its graded component."""


class IndexRangeError(FmcError):
    """A basis index in an input document is out of range."""


class HomogeneityError(FmcError):
    """An operator received a non-homogeneous element."""


class ContextMismatchError(FmcError):
    """Objects from different modules, groups, or scalar fields were mixed."""


class MissingStructureError(FmcError):
    """A check requires a product, representation, or form the spec lacks."""


class PreconditionError(FmcError):
    """A construction's hypothesis suite failed; carries the failing reports."""

    def __init__(self, message, reports=()):
        super().__init__(message)
        self.reports = tuple(reports)
