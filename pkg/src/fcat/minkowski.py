"""Linear algebra of Minkowski 3-space with metric dx^2 + dy^2 - dz^2.

Vectors and matrices are small immutable value types; every function here
is pure.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import DomainError

#: Relative half-width of the light cone band, measured against |x|_E^2.
CAUSAL_TOL = 1e-10


@dataclass(frozen=True, slots=True)
class LVec3:
    """A vector of R^3_1. Components must be finite."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y) and math.isfinite(self.z)):
            raise DomainError(f"non-finite vector components ({self.x}, {self.y}, {self.z})")

    def __add__(self, other: LVec3) -> LVec3:
        return LVec3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: LVec3) -> LVec3:
        return LVec3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> LVec3:
        return LVec3(-self.x, -self.y, -self.z)

    def __mul__(self, s: float) -> LVec3:
        return LVec3(self.x * s, self.y * s, self.z * s)

    __rmul__ = __mul__

    def __truediv__(self, s: float) -> LVec3:
        return LVec3(self.x / s, self.y / s, self.z / s)

    def __iter__(self):
        yield self.x
        yield self.y
        yield self.z

    def euclidean_norm(self) -> float:
        return math.hypot(self.x, self.y, self.z)  # no underflow for tiny components


E1 = LVec3(1.0, 0.0, 0.0)
E2 = LVec3(0.0, 1.0, 0.0)
E3 = LVec3(0.0, 0.0, 1.0)
ZERO = LVec3(0.0, 0.0, 0.0)


class CausalType(enum.Enum):
    SPACELIKE = "spacelike"
    LIGHTLIKE = "lightlike"
    TIMELIKE = "timelike"


def lorentz_dot(a: LVec3, b: LVec3) -> float:
    """Lorentzian scalar product <a, b> = a.x b.x + a.y b.y - a.z b.z."""
    return a.x * b.x + a.y * b.y - a.z * b.z


def causal_type(a: LVec3, tol: float = CAUSAL_TOL) -> CausalType:
    """Classify a nonzero vector as spacelike, lightlike or timelike.

    Vectors with ``|<a,a>| <= tol * |a|_E^2`` are reported as lightlike.
    """
    norm_e2 = a.x * a.x + a.y * a.y + a.z * a.z
    if norm_e2 == 0.0:
        raise DomainError("causal type is undefined for the zero vector")
    q = lorentz_dot(a, a)
    if abs(q) <= tol * norm_e2:
        return CausalType.LIGHTLIKE
    return CausalType.SPACELIKE if q > 0 else CausalType.TIMELIKE


def lorentz_norm(a: LVec3) -> float:
    """sqrt(|<a,a>|); zero for lightlike and zero vectors."""
    return math.sqrt(abs(lorentz_dot(a, a)))


def wedge(a: LVec3, b: LVec3) -> LVec3:
    """Lorentzian vector product, characterised by <c, a^b> = det(c, a, b)."""
    return LVec3(
        a.y * b.z - a.z * b.y,
        a.z * b.x - a.x * b.z,
        -(a.x * b.y - a.y * b.x),
    )


def det3(a: LVec3, b: LVec3, c: LVec3) -> float:
    """Ordinary determinant of the 3x3 matrix with rows a, b, c."""
    return (
        a.x * (b.y * c.z - b.z * c.y)
        - a.y * (b.x * c.z - b.z * c.x)
        + a.z * (b.x * c.y - b.y * c.x)
    )


@dataclass(frozen=True, slots=True)
class LMat3:
    """3x3 matrix acting on column vectors, stored as three row tuples."""

    rows: tuple[tuple[float, float, float], tuple[float, float, float], tuple[float, float, float]]

    def __matmul__(self, other):
        if isinstance(other, LVec3):
            return LVec3(*(r[0] * other.x + r[1] * other.y + r[2] * other.z for r in self.rows))
        if isinstance(other, LMat3):
            cols = list(zip(*other.rows))
            return LMat3(tuple(
                tuple(sum(r[k] * c[k] for k in range(3)) for c in cols) for r in self.rows
            ))
        return NotImplemented

    def det(self) -> float:
        return det3(*(LVec3(*r) for r in self.rows))


IDENTITY = LMat3(((1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0)))


class AxisKind(enum.Enum):
    """The three one-parameter rotation families used for surfaces of revolution."""

    SPACELIKE_Y = "spacelike_y"      # hyperbolic, about the y-axis, parameter = rapidity
    LIGHTLIKE_XZ = "lightlike_xz"    # parabolic, about the line x = z, y = 0
    TIMELIKE_Z = "timelike_z"        # elliptic, about the z-axis, parameter = angle


def rotation(axis_kind: AxisKind, param: float) -> LMat3:
    """Matrix of the Lorentz rotation of the given family.

    ``param`` is the rapidity/angle for the y- and z-axis families and the
    parabolic parameter for the lightlike family.
    """
    if not math.isfinite(param):
        raise DomainError(f"non-finite rotation parameter {param}")
    if axis_kind is AxisKind.SPACELIKE_Y:
        ch, sh = math.cosh(param), math.sinh(param)
        return LMat3(((ch, 0.0, sh), (0.0, 1.0, 0.0), (sh, 0.0, ch)))
    if axis_kind is AxisKind.LIGHTLIKE_XZ:
        w = param
        h = 0.5 * w * w
        return LMat3(((1.0 - h, -w, h), (w, 1.0, -w), (-h, -w, 1.0 + h)))
    if axis_kind is AxisKind.TIMELIKE_Z:
        c, s = math.cos(param), math.sin(param)
        return LMat3(((c, -s, 0.0), (s, c, 0.0), (0.0, 0.0, 1.0)))
    raise DomainError(f"unknown rotation family {axis_kind!r}")
