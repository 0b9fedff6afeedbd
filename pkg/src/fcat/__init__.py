"""Zero f-mean-curvature surfaces of revolution in Lorentz-Minkowski 3-space
with the Gaussian-Euclidean density."""

from .errors import (
    DegeneratePointError,
    DivergenceError,
    DomainError,
    FcatError,
    QuadratureError,
    RootFindingError,
)

__version__ = "0.1.0"

__all__ = [
    "DegeneratePointError",
    "DivergenceError",
    "DomainError",
    "FcatError",
    "QuadratureError",
    "RootFindingError",
    "__version__",
]
