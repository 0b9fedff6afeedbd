"""Exception hierarchy shared by every fcat module."""


class FcatError(Exception):
    """Base class for all errors raised by fcat."""


class DomainError(FcatError, ValueError):
    """An argument lies outside the domain where the quantity is defined."""


class DivergenceError(DomainError):
    """The requested quantity is infinite (integrand or slope blows up)."""


class DegeneratePointError(FcatError):
    """The tangent plane is degenerate or lightlike at the evaluated point."""

    def __init__(self, message, u=None, v=None):
        super().__init__(message)
        self.u = u
        self.v = v


class QuadratureError(FcatError):
    """Adaptive quadrature failed; ``best`` carries the last estimate."""

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


class RootFindingError(FcatError):
    """A bracketed root search could not be started or continued."""
