"""Exception types shared across the package.

Three failure classes matter to callers: malformed input text, mathematically
invalid requests (mismatched profiles, unmet preconditions, blown enumeration
budgets), and everything else, which stays a plain ValueError/RuntimeError.
The CLI maps ParseError to exit code 2 and DomainError to exit code 1.
"""


class DomainError(ValueError):
    """A request that is well-formed but mathematically inadmissible."""


class BudgetError(DomainError):
    """An enumeration would exceed the configured budget."""


class ParseError(ValueError):
    """Malformed input text; carries a line number when one is known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
