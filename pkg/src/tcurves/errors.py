"""Exception types shared across the package.

The CLI maps these onto its exit-code contract: input/codec problems exit
with 2, violated structural invariants with 3, exceeded enumeration budgets
with 4.
"""


class TcurvesError(Exception):
    """Base class for all package errors."""


class InvalidDegree(TcurvesError):
    """Degree outside the supported range (d >= 1)."""


class PointOutOfRange(TcurvesError):
    """A lattice point lies outside the degree-d point set."""


class NotATriangulation(TcurvesError):
    """Edge list does not describe a triangulation of the dilated simplex."""


class NotUnimodular(TcurvesError):
    """Triangulation is valid but not unimodular."""


class UnknownBuiltin(TcurvesError):
    """No builtin triangulation with the requested name."""


class InvariantViolation(TcurvesError):
    """A structural invariant of the classification pipeline failed.

    On well-formed patchwork input this indicates a bug; on unvalidated
    input it flags garbage data.
    """


class ParseError(TcurvesError):
    """Malformed textual input; carries the offending position."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class IndexOutOfRange(TcurvesError):
    """Representative index outside the enumeration domain."""


class MergeMismatch(TcurvesError):
    """Attempt to merge sweep reports over different inputs."""


class BudgetExceeded(TcurvesError):
    """Requested computation exceeds the supported time/size budget."""
