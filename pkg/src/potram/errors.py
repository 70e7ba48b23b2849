"""Exception hierarchy shared by every module."""


class PotramError(Exception):
    """Base class for all library errors."""


class InputError(PotramError, ValueError):
    """Malformed or out-of-range input (bad vertex, unparseable token, ...)."""


class DomainError(PotramError, ValueError):
    """Input is well formed but outside an operation's domain."""


class ResourceError(PotramError, RuntimeError):
    """A configured enumeration bound or search budget was exceeded."""


class BudgetExceeded(ResourceError):
    """Realization traversal visited more classes than its budget allows."""

    def __init__(self, message, sequence=None, visited=0):
        super().__init__(message)
        self.sequence = sequence
        self.visited = visited


class InvariantViolation(PotramError, RuntimeError):
    """An internal guarantee failed; indicates a bug or a falsified argument."""
