"""Exception types shared across the package."""


class ParameterError(ValueError):
    """A parameter is outside the documented range of an operation."""


class DomainError(ValueError):
    """An evaluation point lies outside the coordinate domain."""


class NotApplicableError(ValueError):
    """The requested quantity is undefined for the given configuration."""


class ConvergenceError(RuntimeError):
    """An iterative scheme failed to converge.

    Carries the last two estimates (quadrature) or the open bracketing
    intervals (eigenvalue bisection) so callers can inspect the failure.
    """

    def __init__(self, message, estimates=None, brackets=None):
        super().__init__(message)
        self.estimates = estimates
        self.brackets = brackets
