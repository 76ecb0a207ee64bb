"""Exception hierarchy shared by every module of the package."""


class BohrError(Exception):
    """Base class for all package errors."""


class InvalidParams(BohrError, ValueError):
    """Theorem parameters outside their admissible set."""


class DomainError(BohrError, ValueError):
    """A radius or argument lies outside the domain where a formula is finite."""


class NoSignChange(BohrError, ValueError):
    """The bracket handed to a root finder does not straddle a root."""


class MaxIterExceeded(BohrError, RuntimeError):
    pass


class InvalidCoefficients(BohrError, ValueError):
    pass


class NonMonotonePredicate(BohrError, RuntimeError):
    """The violation predicate switched more than once along the radius scan."""

    def __init__(self, message, transitions=()):
        super().__init__(message)
        self.transitions = list(transitions)


class ParseError(BohrError, ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
