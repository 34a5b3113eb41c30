"""Exception types shared across the package."""

from __future__ import annotations


class ChromaboundError(Exception):
    """Base class for all package-specific errors."""


class GraphParseError(ChromaboundError):
    """Malformed graph input; carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ResourceLimitError(ChromaboundError):
    """An exhaustive routine was asked to exceed its configured cap."""


class ConvergenceError(ChromaboundError):
    """Iteration failed to reach the requested tolerance.

    Carries the best iterate so callers can inspect how close it got.
    """

    def __init__(self, message: str, roots=None, residuals=None):
        self.roots = tuple(roots) if roots is not None else None
        self.residuals = tuple(residuals) if residuals is not None else None
        super().__init__(message)


class InconclusiveError(ChromaboundError):
    """A certified numeric check could neither pass nor fail.

    Raised when a tail estimate loses control (geometric ratio at or
    above 1), so no finite computation settles the inequality.
    """
