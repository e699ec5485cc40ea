"""Exception hierarchy shared by every termrank module."""


class TermRankError(Exception):
    """Base class for all library errors."""


class ParseError(TermRankError, ValueError):
    """Malformed matrix or degree-pair text."""


class DomainError(TermRankError, ValueError):
    """An argument lies outside the operation's domain."""


class SumMismatchError(DomainError):
    """Row and column sum vectors have different totals."""


class InvalidMoveError(DomainError):
    """The addressed 2x2 submatrix is not an interchange pattern."""


class UndefinedStrengthError(DomainError):
    """Strength requested for a matrix with a zero column."""


class InfeasibleClassError(TermRankError):
    """The class A(R, S) is empty."""


class CapacityError(TermRankError):
    """A size cap, enumeration limit or search budget was exceeded."""
