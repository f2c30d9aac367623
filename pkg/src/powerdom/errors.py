"""Exception types shared across the toolkit."""


class PowerdomError(Exception):
    """Base class for all domain errors raised by this package."""


class GraphParseError(PowerdomError):
    """Malformed graph file. Carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DisconnectedGraphError(PowerdomError):
    """Operation requires a connected graph (diameter, bounds)."""


class NotPowerDominatingError(PowerdomError):
    """A propagation-time query was made for a set that never observes V."""


class SearchBudgetExceeded(PowerdomError):
    """The solver hit its configured work cap before finishing.

    This is a resource verdict, never a wrong answer; callers may retry
    with a larger cap.
    """


class InternalConsistencyError(PowerdomError):
    """A runtime assertion backing a proved statement failed.

    Raised when the code detects a state that the verified lemmas and
    theorems rule out; it indicates a bug, not a property of the input.
    """
