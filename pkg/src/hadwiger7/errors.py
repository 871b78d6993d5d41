"""Exception hierarchy shared across the package."""


class Hadwiger7Error(Exception):
    pass


class GraphInputError(Hadwiger7Error, ValueError):
    """Malformed graph data or arguments that violate an operation's precondition."""


class PreconditionError(GraphInputError):
    pass


class BudgetExceeded(Hadwiger7Error):
    """A generic search was refused because the instance is above the size budget."""

    def __init__(self, message: str, trace=None):
        super().__init__(message)
        self.trace = trace


class TheoremViolation(Hadwiger7Error):
    """Both certificate searches failed where a theorem guarantees one succeeds.

    Seeing this means there is a bug in the search code, not a counterexample.
    """
