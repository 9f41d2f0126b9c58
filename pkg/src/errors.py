"""Exceptions raised by the algebra, search and parsing layers."""


class FittError(Exception):
    """Base class for every error this package raises on purpose."""


class ConfigError(FittError):
    """An environment variable or flag holds an unusable value."""


class BudgetExceeded(FittError):
    """A computation would visit more objects than its budget allows."""

    def __init__(self, what: str, requested: int, limit: int):
        self.what = what
        self.requested = requested
        self.limit = limit
        super().__init__(f"{what}: {requested} exceeds budget {limit}")


class PreconditionViolated(FittError):
    """An operation was called outside its hypotheses (e.g. grade too small)."""


class InsufficientBound(FittError):
    """A truncated-series comparison could not certify its tail at the chosen bound."""

    def __init__(self, bound: int, detail: str = ""):
        self.bound = bound
        message = f"tail not certified at truncation bound {bound}"
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message)


class ParseError(FittError):
    """Malformed ideal, graph or semigroup text. Line and column are 1-based."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")
