class MonidealError(Exception):
    pass


class DimensionMismatch(MonidealError, ValueError):
    """Operands live in rings with different variable lists."""


class DomainError(MonidealError, ValueError):
    """Input outside an operation's domain (e.g. decomposing the unit ideal)."""


class ResourceLimitError(MonidealError):
    """A configured size or work budget was exceeded."""

    def __init__(self, message, **stats):
        super().__init__(message)
        self.stats = stats


class ParseError(MonidealError, ValueError):
    pass


class EngineError(MonidealError):
    """An internal consistency check failed; indicates a bug, not bad input."""
