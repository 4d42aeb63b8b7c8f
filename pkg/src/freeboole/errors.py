"""Exception hierarchy shared by every module."""


class FreebooleError(Exception):
    """Base class for all library errors."""


class DimensionError(FreebooleError, ValueError):
    """Elements over different ground sets were combined."""


class MembershipError(FreebooleError, ValueError):
    """An element is not a member of the algebra it was used with."""


class PreconditionError(FreebooleError, ValueError):
    """An operation was called with inputs violating its stated precondition."""


class BudgetError(FreebooleError):
    """A search or enumeration exceeded its configured limit.

    ``limit`` names the budget that was exceeded; ``best`` optionally carries the
    best bound found before giving up.
    """

    def __init__(self, message: str, limit: str, value: int, best=None):
        super().__init__(f"{message} (limit {limit}={value})")
        self.limit = limit
        self.value = value
        self.best = best


class ParseError(FreebooleError, ValueError):
    def __init__(self, message: str, path=None, line: int | None = None):
        where = ""
        if path is not None:
            where += f"{path}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}".strip())
        self.path = path
        self.line = line


class TheoremCheckFailure(FreebooleError, AssertionError):
    """A property that a proven theorem guarantees did not hold (a bug)."""
