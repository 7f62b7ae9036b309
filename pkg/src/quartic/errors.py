"""Exception hierarchy shared by every module."""


class QuarticError(Exception):
    pass


class InvalidArgument(QuarticError, ValueError):
    pass


class DomainError(QuarticError, ValueError):
    pass


class BracketError(QuarticError, ValueError):
    pass


class ConvergenceFailure(QuarticError, RuntimeError):
    """Iteration or quadrature did not reach its tolerance.

    ``best`` carries the last estimate so callers can still report it.
    """

    def __init__(self, message, best=None, error=None):
        super().__init__(message)
        self.best = best
        self.error = error


class MinimizationFailure(QuarticError, RuntimeError):
    pass
