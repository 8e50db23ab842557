"""Exception hierarchy. Every error carries its class name to the CLI."""


class BallotError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(BallotError, ValueError):
    pass


class BudgetExceeded(BallotError):
    """Instance is too large for exhaustive enumeration."""


class DegenerateRecurrence(BallotError, ZeroDivisionError):
    """Takacs recurrence cannot be solved (floor(k*mu) == 0 for some k)."""


class DomainViolation(BallotError, ValueError):
    """Bound requested outside the hypothesis under which it holds."""


class NotRotatableToCute(BallotError, ValueError):
    pass


class PreconditionViolation(BallotError, ValueError):
    pass
