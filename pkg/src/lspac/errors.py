"""Exception hierarchy for lspac."""


class LspacError(Exception):
    """Base class for every error raised by lspac."""


class InputError(LspacError, ValueError):
    """Malformed input or an unmet precondition."""


class NotAContractionError(InputError):
    """Digit below 2, so the map would not be a contraction."""


class DomainError(InputError):
    """Argument outside the domain of a rational map (pole or zero)."""


class BudgetExceededError(LspacError):
    """A search or generation step ran past its configured budget."""

    def __init__(self, message: str, budget: int):
        super().__init__(message)
        self.budget = budget
