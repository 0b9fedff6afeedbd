"""Parametric surfaces in R^3_1 and their weighted (f-) mean curvature.

The ambient density is the Gaussian-Euclidean one, exp(-f) with
f(x, y, z) = (x^2 + y^2)/2 + ln(2 pi), so grad f = (x, y, 0).

Unit normals are always N = (X_u ^ X_v) / ||X_u ^ X_v|| with no global
re-orientation. Flipping N flips H and <grad f, N> together, so the zero set
of H_f does not depend on this choice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable, Optional

from . import numerics
from .errors import DegeneratePointError
from .minkowski import (
    CausalType,
    LMat3,
    LVec3,
    ZERO,
    causal_type,
    lorentz_dot,
    lorentz_norm,
    wedge,
)

#: Euclidean length below which X_u ^ X_v counts as vanishing.
DEGENERATE_TOL = 1e-12

LN_2PI = math.log(2.0 * math.pi)

VecField = Callable[[float, float], LVec3]


@dataclass(frozen=True)
class ParametricSurface:
    """An immersion X(u, v) over a rectangle, with optional analytic partials.

    Missing partials are recovered by central differences with step hint
    ``derivative_scale``.
    """

    position: VecField
    u_range: tuple[float, float]
    v_range: tuple[float, float]
    xu: Optional[VecField] = None
    xv: Optional[VecField] = None
    xuu: Optional[VecField] = None
    xuv: Optional[VecField] = None
    xvv: Optional[VecField] = None
    derivative_scale: float = 1.0
    periodic_v: bool = False
    label: str = ""

    def __call__(self, u: float, v: float) -> LVec3:
        return self.position(u, v)

    def first_partials(self, u: float, v: float) -> tuple[LVec3, LVec3]:
        s = self.derivative_scale
        xu = self.xu(u, v) if self.xu else numerics.diff(lambda t: self.position(t, v), u, 1, s)
        xv = self.xv(u, v) if self.xv else numerics.diff(lambda t: self.position(u, t), v, 1, s)
        return xu, xv

    def second_partials(self, u: float, v: float) -> tuple[LVec3, LVec3, LVec3]:
        s = self.derivative_scale
        if self.xuu:
            xuu = self.xuu(u, v)
        else:
            xuu = numerics.diff(lambda t: self.position(t, v), u, 2, s)
        if self.xvv:
            xvv = self.xvv(u, v)
        else:
            xvv = numerics.diff(lambda t: self.position(u, t), v, 2, s)
        if self.xuv:
            xuv = self.xuv(u, v)
        else:
            xuv = numerics.diff(
                lambda t: numerics.diff(lambda w: self.position(t, w), v, 1, s), u, 1, s
            )
        return xuu, xuv, xvv

    def without_partials(self) -> ParametricSurface:
        """Same immersion, but every derivative taken by finite differences."""
        return replace(self, xu=None, xv=None, xuu=None, xuv=None, xvv=None)

    def grid(self, nu: int, nv: int) -> list[tuple[float, float]]:
        """``nu`` x ``nv`` sample points; v excludes the closing end when periodic."""
        u0, u1 = self.u_range
        v0, v1 = self.v_range
        us = [u0 + (u1 - u0) * i / (nu - 1) for i in range(nu)] if nu > 1 else [0.5 * (u0 + u1)]
        if self.periodic_v:
            vs = [v0 + (v1 - v0) * j / nv for j in range(nv)]
        else:
            vs = [v0 + (v1 - v0) * j / (nv - 1) for j in range(nv)] if nv > 1 else [0.5 * (v0 + v1)]
        return [(u, v) for u in us for v in vs]


def transformed(S: ParametricSurface, M: LMat3, offset: LVec3 = ZERO) -> ParametricSurface:
    """The surface p -> M p + offset. Analytic partials are carried along."""

    def lift(field):
        return None if field is None else (lambda u, v: M @ field(u, v))

    return replace(
        S,
        position=lambda u, v: M @ S.position(u, v) + offset,
        xu=lift(S.xu),
        xv=lift(S.xv),
        xuu=lift(S.xuu),
        xuv=lift(S.xuv),
        xvv=lift(S.xvv),
    )


@dataclass(frozen=True)
class FundamentalForms:
    E: float
    F: float
    G: float
    e2: float
    f2: float
    g2: float
    eps: int  # -1 for spacelike surfaces, +1 for timelike ones


@dataclass(frozen=True)
class DensityPoint:
    p: LVec3
    grad_f: LVec3
    f_value: float


def density(p: LVec3) -> DensityPoint:
    return DensityPoint(p, LVec3(p.x, p.y, 0.0), 0.5 * (p.x * p.x + p.y * p.y) + LN_2PI)


def _tangent_wedge(S, u, v):
    xu, xv = S.first_partials(u, v)
    w = wedge(xu, xv)
    if w.euclidean_norm() <= DEGENERATE_TOL:
        raise DegeneratePointError(f"X_u and X_v are dependent at (u, v) = ({u}, {v})", u, v)
    return xu, xv, w


def first_fundamental(S: ParametricSurface, u: float, v: float) -> tuple[float, float, float]:
    xu, xv, _ = _tangent_wedge(S, u, v)
    return lorentz_dot(xu, xu), lorentz_dot(xu, xv), lorentz_dot(xv, xv)


def unit_normal(S: ParametricSurface, u: float, v: float) -> tuple[LVec3, CausalType]:
    """Unit normal and its causal type (timelike normal = spacelike surface).

    Raises:
        DegeneratePointError: when X_u ^ X_v vanishes or is lightlike.
    """
    _, _, w = _tangent_wedge(S, u, v)
    kind = causal_type(w)
    if kind is CausalType.LIGHTLIKE:
        raise DegeneratePointError(f"lightlike normal (degenerate metric) at ({u}, {v})", u, v)
    return w / lorentz_norm(w), kind


def fundamental_forms(S: ParametricSurface, u: float, v: float) -> tuple[FundamentalForms, LVec3]:
    xu, xv = S.first_partials(u, v)
    n, kind = unit_normal(S, u, v)
    xuu, xuv, xvv = S.second_partials(u, v)
    E, F, G = lorentz_dot(xu, xu), lorentz_dot(xu, xv), lorentz_dot(xv, xv)
    eps = -1 if kind is CausalType.TIMELIKE else 1
    forms = FundamentalForms(
        E, F, G, lorentz_dot(xuu, n), lorentz_dot(xuv, n), lorentz_dot(xvv, n), eps
    )
    return forms, n


def mean_curvature(S: ParametricSurface, u: float, v: float) -> float:
    ff, _ = fundamental_forms(S, u, v)
    return _mean_from_forms(ff)


def _mean_from_forms(ff: FundamentalForms) -> float:
    gram = ff.E * ff.G - ff.F * ff.F
    return ff.eps * (ff.E * ff.g2 - 2.0 * ff.F * ff.f2 + ff.G * ff.e2) / (2.0 * gram)


def pairing(S: ParametricSurface, u: float, v: float) -> float:
    """<grad f, N> at X(u, v)."""
    n, _ = unit_normal(S, u, v)
    return lorentz_dot(density(S.position(u, v)).grad_f, n)


def f_mean_curvature(S: ParametricSurface, u: float, v: float) -> float:
    """H_f = H + <grad f, N> / 2."""
    ff, n = fundamental_forms(S, u, v)
    p = S.position(u, v)
    return _mean_from_forms(ff) + 0.5 * lorentz_dot(density(p).grad_f, n)


def max_abs_f_mean_curvature(S: ParametricSurface, nu: int = 64, nv: int = 64) -> float:
    return max(abs(f_mean_curvature(S, u, v)) for u, v in S.grid(nu, nv))


def lemma1_distance_identity(p: LVec3, n: LVec3) -> tuple[float, float]:
    """Both sides of |<grad f, N>(p)| = d_E(rho(p), T_p) * |N|_E.

    The tangent plane through p with unit normal N = (a, b, c) is
    a x + b y - c z + d = 0; rho(p) is the foot of p on the z-axis. The right
    side is an ordinary Euclidean point-to-plane distance.
    """
    lhs = abs(n.x * p.x + n.y * p.y)
    plane_normal = (n.x, n.y, -n.z)
    plane_len = math.sqrt(sum(c * c for c in plane_normal))
    foot = (0.0, 0.0, p.z)
    dist = abs(sum(k * (q - r) for k, q, r in zip(plane_normal, foot, p))) / plane_len
    return lhs, dist * n.euclidean_norm()


# -- elementary surfaces ---------------------------------------------------

def horizontal_plane(height: float, half_width: float = 5.0) -> ParametricSurface:
    return ParametricSurface(
        position=lambda u, v: LVec3(u, v, height),
        u_range=(-half_width, half_width),
        v_range=(-half_width, half_width),
        xu=lambda u, v: LVec3(1.0, 0.0, 0.0),
        xv=lambda u, v: LVec3(0.0, 1.0, 0.0),
        xuu=lambda u, v: ZERO,
        xuv=lambda u, v: ZERO,
        xvv=lambda u, v: ZERO,
        label=f"horizontal plane z={height}",
    )


def vertical_plane(distance: float, angle: float = 0.0, half_width: float = 5.0) -> ParametricSurface:
    """The plane x cos(angle) + y sin(angle) = distance, swept by (u, z=v)."""
    c, s = math.cos(angle), math.sin(angle)
    return ParametricSurface(
        position=lambda u, v: LVec3(distance * c - u * s, distance * s + u * c, v),
        u_range=(-half_width, half_width),
        v_range=(-half_width, half_width),
        xu=lambda u, v: LVec3(-s, c, 0.0),
        xv=lambda u, v: LVec3(0.0, 0.0, 1.0),
        xuu=lambda u, v: ZERO,
        xuv=lambda u, v: ZERO,
        xvv=lambda u, v: ZERO,
        label=f"vertical plane at distance {distance}",
    )


def cylinder(radius: float, height: float = 5.0) -> ParametricSurface:
    """Circular cylinder x^2 + y^2 = radius^2, X(u, v) = (r cos v, r sin v, u)."""
    r = radius
    return ParametricSurface(
        position=lambda u, v: LVec3(r * math.cos(v), r * math.sin(v), u),
        u_range=(-height, height),
        v_range=(0.0, 2.0 * math.pi),
        xu=lambda u, v: LVec3(0.0, 0.0, 1.0),
        xv=lambda u, v: LVec3(-r * math.sin(v), r * math.cos(v), 0.0),
        xuu=lambda u, v: ZERO,
        xuv=lambda u, v: ZERO,
        xvv=lambda u, v: LVec3(-r * math.cos(v), -r * math.sin(v), 0.0),
        periodic_v=True,
        label=f"cylinder r={radius}",
    )
