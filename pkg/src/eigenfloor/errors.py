"""Exception types shared across the package."""


class EigenfloorError(Exception):
    """Base class for all package-specific errors."""


class FormatError(EigenfloorError, ValueError):
    """Malformed matrix text input."""


class DomainError(EigenfloorError, ValueError):
    """Input outside the mathematical domain of an operation."""


class FeasibilityError(DomainError):
    """Trace pair outside the feasibility window a^2/m <= b < a^2."""


class SingularMatrixError(EigenfloorError, ValueError):
    """A bidiagonal factor has a zero diagonal entry."""

    def __init__(self, index: int, message: str | None = None):
        self.index = index
        super().__init__(message or f"singular factor: zero diagonal entry at index {index}")


class NotPositiveDefiniteError(EigenfloorError, ArithmeticError):
    """A pivot sweep hit a nonpositive pivot; carries the pivot index."""

    def __init__(self, index: int, message: str | None = None):
        self.index = index
        super().__init__(message or f"nonpositive pivot at index {index}")


class TraceOverflowError(EigenfloorError, OverflowError):
    """A trace accumulation left the double range; carries the column index."""

    def __init__(self, index: int, message: str | None = None):
        self.index = index
        super().__init__(message or f"trace accumulation overflowed at index {index}")


class ShiftRejectedError(EigenfloorError, ArithmeticError):
    """A dqds transform went nonpositive: the shift is not below the
    smallest squared singular value. Carries the failing index."""

    def __init__(self, index: int, message: str | None = None):
        self.index = index
        super().__init__(message or f"shift too large: nonpositive quantity at index {index}")


class ConvergenceError(EigenfloorError, RuntimeError):
    """An iteration failed to converge; carries whatever partial result exists."""

    def __init__(self, message: str, last_iterate: float | None = None, report=None):
        self.last_iterate = last_iterate
        self.report = report
        super().__init__(message)
