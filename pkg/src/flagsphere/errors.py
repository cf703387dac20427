"""Exception types shared across the package."""


class FlagSphereError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInput(FlagSphereError, ValueError):
    pass


class InvalidSpec(FlagSphereError, ValueError):
    """Construction parameters outside the family's valid range."""


class NotAFace(FlagSphereError, KeyError):
    pass


class NotAFacet(FlagSphereError, KeyError):
    pass


class NotPure(FlagSphereError, ValueError):
    pass


class DimMismatch(FlagSphereError, ValueError):
    pass


class PreconditionFailed(FlagSphereError):
    pass


class Inconclusive(FlagSphereError):
    """A heuristic search ran out of budget without reaching a verdict."""

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace if trace is not None else []


class SolverTimeout(FlagSphereError):
    """Exact solver exceeded its time budget.

    ``incumbent`` holds the best stable set found so far; its optimality
    is unproven.
    """

    def __init__(self, message, incumbent=None):
        super().__init__(message)
        self.incumbent = incumbent
        self.optimal = False
