"""Exception hierarchy shared by every module."""


class SpottyError(Exception):
    """Base class for all library errors."""


class ConfigurationError(SpottyError, ValueError):
    """Invalid ring or code parameters."""


class DomainError(SpottyError, ValueError):
    """An element or vector does not belong to the ring / ambient space."""


class UnsupportedOperationError(SpottyError):
    """Operation not defined for this ring family (e.g. Lee weight outside R_k)."""


class BudgetExceededError(SpottyError):
    """Exhaustive enumeration would exceed the configured budget."""

    def __init__(self, what, required, budget):
        self.what = what
        self.required = required
        self.budget = budget
        super().__init__(f"{what}: needs {required} evaluations, budget is {budget}")


class IntegralityError(SpottyError, ArithmeticError):
    """A division that must be exact left a remainder."""


class ParseError(SpottyError, ValueError):
    """Malformed element literal, polynomial or code-spec text."""
