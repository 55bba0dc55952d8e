"""Exception types shared across the package."""


class TermAlgError(Exception):
    """Base class for all domain errors raised by termalg."""


class AlgebraError(TermAlgError):
    """Invalid algebra description or algebra construction."""


class TermError(TermAlgError):
    """A term cannot be interpreted: unknown symbol, bad arity or index."""


class ParseError(TermAlgError):
    """Malformed term text. Carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class BudgetError(TermAlgError):
    """An enumeration exceeded its configured size budget."""
