"""Exception types shared across the toolkit."""


class LoopgrassError(Exception):
    """Base class for all domain errors raised by this package."""


class NotAUnitError(LoopgrassError):
    """A determinant is not of the form c*t^m, so the matrix is not an
    invertible element of GL_n(k[t,1/t])."""


class ParseError(LoopgrassError):
    """Malformed Laurent-scalar expression or matrix file."""


class SearchExhaustedError(LoopgrassError):
    """A bounded chart search ran out of candidates; retry with a larger bound."""


class InternalInconsistencyError(LoopgrassError):
    """The big-cell rank test and the witness solve disagreed.  This indicates
    a window-size bug and must never be swallowed."""


class StateSpaceTooLargeError(LoopgrassError):
    """An exhaustive enumeration was requested over too large a state space."""


class RankTooLargeError(LoopgrassError):
    """The finite Weyl group is too large to enumerate for the brute-force
    length oracle."""
