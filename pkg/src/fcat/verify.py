"""Numerical evidence for the classification of zero-H_f surfaces of revolution.

A surface of revolution has constant mean curvature along each parallel
(u = const), so H_f can only vanish if the pairing <grad f, N> is also
constant along it. The routines here build revolution surfaces about
spacelike, lightlike and timelike axes by explicit matrix products,
measure how much the pairing varies around each parallel, and check the
surviving families directly.

Results are reported as evidence: a sweep that finds nothing is
"consistent with" the classification, it does not prove it.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from . import numerics, profiles
from .errors import DegeneratePointError, DomainError, FcatError
from .minkowski import AxisKind, CausalType, LMat3, LVec3, rotation
from .surfaces import (
    ParametricSurface,
    cylinder,
    f_mean_curvature,
    horizontal_plane,
    lemma1_distance_identity,
    max_abs_f_mean_curvature,
    mean_curvature,
    pairing,
    vertical_plane,
)

V_SAMPLES = 256
HYPERBOLIC_V = (-3.0, 3.0)
GRID = 64
SPREAD_MIN = 1e-4
ESCAPE_MAX = 1e-10
RESIDUAL_MAX = 1e-6


class Family(enum.Enum):
    """Causal type of the surface being rotated into existence."""

    SPACELIKE = "spacelike"   # generatrix (u, 0, g(u)), 1 - g'^2 > 0
    TIMELIKE = "timelike"     # generatrix (g(u), 0, u), 1 - g'^2 > 0


@dataclass(frozen=True)
class Generatrix:
    g: Callable[[float], float]
    dg: Callable[[float], float]
    d2g: Callable[[float], float]
    interval: tuple[float, float]
    label: str = ""

    @classmethod
    def polynomial(cls, coeffs, interval, label=""):
        """g(u) = sum coeffs[k] u^k."""
        c = tuple(float(x) for x in coeffs)
        d1 = tuple(k * c[k] for k in range(1, len(c))) or (0.0,)
        d2 = tuple(k * d1[k] for k in range(1, len(d1))) or (0.0,)

        def horner(cs):
            def f(u):
                acc = 0.0
                for a in reversed(cs):
                    acc = acc * u + a
                return acc
            return f

        return cls(horner(c), horner(d1), horner(d2), interval, label or f"poly{c}")

    @classmethod
    def constant(cls, value, interval):
        return cls.polynomial((value,), interval, f"const {value}")

    def causal_margin(self, samples: int = 33) -> float:
        """min of 1 - g'^2 over the interval."""
        lo, hi = self.interval
        return min(1.0 - self.dg(u) ** 2 for u in np.linspace(lo, hi, samples))


@dataclass(frozen=True)
class AxisSpec:
    causal: CausalType
    theta: float
    a: float
    generatrix: Generatrix


_L1 = ((-1.0, 0.0, 1.0), (0.0, 0.0, 0.0), (-1.0, 0.0, 1.0))  # second v-derivative of the parabolic matrix


def _parabolic_dv(v: float) -> LMat3:
    return LMat3(((-v, -1.0, v), (1.0, 0.0, -1.0), (-v, -1.0, v)))


def revolution_surface(axis: AxisSpec, family: Family) -> ParametricSurface:
    """Rotate the generatrix about the axis described by ``axis``.

    Spacelike and timelike axes are the x- and z-axes tilted by a boost of
    rapidity theta in the xz-plane and shifted by a along y. The lightlike
    axis is x = z, y = 0 shifted by a along x, boosted by theta.

    Raises:
        DomainError: if 1 - g'^2 <= 0 somewhere on the generatrix interval.
    """
    gen = axis.generatrix
    if gen.causal_margin() <= 0.0:
        raise DomainError(f"generatrix {gen.label} violates 1 - g'^2 > 0 on {gen.interval}")
    g, dg, d2g = gen.g, gen.dg, gen.d2g
    boost = rotation(AxisKind.SPACELIKE_Y, axis.theta)
    sinh, cosh, sin, cos = math.sinh, math.cosh, math.sin, math.cos
    spacelike = family is Family.SPACELIKE

    if axis.causal is CausalType.LIGHTLIKE:
        offset = LVec3(axis.a, 0.0, 0.0)
        dd = LMat3(_L1)
        if spacelike:
            col = lambda u: LVec3(u, 0.0, g(u))
            col_u = lambda u: LVec3(1.0, 0.0, dg(u))
            col_uu = lambda u: LVec3(0.0, 0.0, d2g(u))
        else:
            col = lambda u: LVec3(g(u), 0.0, u)
            col_u = lambda u: LVec3(dg(u), 0.0, 1.0)
            col_uu = lambda u: LVec3(d2g(u), 0.0, 0.0)

        def par(v):
            return boost @ rotation(AxisKind.LIGHTLIKE_XZ, v)

        return ParametricSurface(
            position=lambda u, v: par(v) @ col(u) + offset,
            u_range=gen.interval,
            v_range=HYPERBOLIC_V,
            xu=lambda u, v: par(v) @ col_u(u),
            xv=lambda u, v: boost @ (_parabolic_dv(v) @ col(u)),
            xuu=lambda u, v: par(v) @ col_uu(u),
            xuv=lambda u, v: boost @ (_parabolic_dv(v) @ col_u(u)),
            xvv=lambda u, v: boost @ (dd @ col(u)),
            label=f"{family.value} about lightlike axis",
        )

    offset = LVec3(0.0, axis.a, 0.0)
    if axis.causal is CausalType.SPACELIKE:
        v_range, periodic = HYPERBOLIC_V, False
        if spacelike:
            c = lambda u, v: LVec3(u, g(u) * sinh(v), g(u) * cosh(v))
            cu = lambda u, v: LVec3(1.0, dg(u) * sinh(v), dg(u) * cosh(v))
            cv = lambda u, v: LVec3(0.0, g(u) * cosh(v), g(u) * sinh(v))
            cuu = lambda u, v: LVec3(0.0, d2g(u) * sinh(v), d2g(u) * cosh(v))
            cuv = lambda u, v: LVec3(0.0, dg(u) * cosh(v), dg(u) * sinh(v))
            cvv = lambda u, v: LVec3(0.0, g(u) * sinh(v), g(u) * cosh(v))
        else:
            c = lambda u, v: LVec3(g(u), u * sinh(v), u * cosh(v))
            cu = lambda u, v: LVec3(dg(u), sinh(v), cosh(v))
            cv = lambda u, v: LVec3(0.0, u * cosh(v), u * sinh(v))
            cuu = lambda u, v: LVec3(d2g(u), 0.0, 0.0)
            cuv = lambda u, v: LVec3(0.0, cosh(v), sinh(v))
            cvv = lambda u, v: LVec3(0.0, u * sinh(v), u * cosh(v))
    elif axis.causal is CausalType.TIMELIKE:
        v_range, periodic = (0.0, 2.0 * math.pi), True
        if spacelike:
            c = lambda u, v: LVec3(u * cos(v), u * sin(v), g(u))
            cu = lambda u, v: LVec3(cos(v), sin(v), dg(u))
            cv = lambda u, v: LVec3(-u * sin(v), u * cos(v), 0.0)
            cuu = lambda u, v: LVec3(0.0, 0.0, d2g(u))
            cuv = lambda u, v: LVec3(-sin(v), cos(v), 0.0)
            cvv = lambda u, v: LVec3(-u * cos(v), -u * sin(v), 0.0)
        else:
            c = lambda u, v: LVec3(g(u) * sin(v), g(u) * cos(v), u)
            cu = lambda u, v: LVec3(dg(u) * sin(v), dg(u) * cos(v), 1.0)
            cv = lambda u, v: LVec3(g(u) * cos(v), -g(u) * sin(v), 0.0)
            cuu = lambda u, v: LVec3(d2g(u) * sin(v), d2g(u) * cos(v), 0.0)
            cuv = lambda u, v: LVec3(dg(u) * cos(v), -dg(u) * sin(v), 0.0)
            cvv = lambda u, v: LVec3(-g(u) * sin(v), -g(u) * cos(v), 0.0)
    else:
        raise DomainError(f"unknown axis causal type {axis.causal!r}")

    return ParametricSurface(
        position=lambda u, v: boost @ c(u, v) + offset,
        u_range=gen.interval,
        v_range=v_range,
        xu=lambda u, v: boost @ cu(u, v),
        xv=lambda u, v: boost @ cv(u, v),
        xuu=lambda u, v: boost @ cuu(u, v),
        xuv=lambda u, v: boost @ cuv(u, v),
        xvv=lambda u, v: boost @ cvv(u, v),
        periodic_v=periodic,
        label=f"{family.value} about {axis.causal.value} axis",
    )


def closed_form_pairing(axis: AxisSpec, family: Family, u: float, v: float) -> Optional[float]:
    """Hand-derived <grad f, N> for N = X_u ^ X_v normalised, or None.

    Available for spacelike and timelike axes; the lightlike case has no
    trustworthy closed form and is left to the numerical pairing.
    """
    if axis.causal is CausalType.LIGHTLIKE:
        return None
    gen = axis.generatrix
    g, gp = gen.g(u), gen.dg(u)
    root = math.sqrt(1.0 - gp * gp)
    th, a = axis.theta, axis.a
    # |X_u ^ X_v| carries |g| for the hyperbolic-spacelike and
    # circular-timelike cases and |u| otherwise; the sign survives here
    spacelike = family is Family.SPACELIKE
    radial = g if spacelike == (axis.causal is CausalType.SPACELIKE) else u
    root = math.copysign(root, radial)
    sh, ch = math.sinh(th), math.cosh(th)
    if family is Family.SPACELIKE and axis.causal is CausalType.TIMELIKE:
        val = (
            u * gp * (1.0 + math.cos(v) ** 2 * sh * sh)
            + (u + g * gp) * math.sinh(2.0 * th) / 2.0 * math.cos(v)
            + g * sh * sh
            + a * gp * math.sin(v)
        ) / root
        return -val
    if family is Family.SPACELIKE:
        val = (
            u * sh * ch * math.cosh(v)
            + g * (sh * sh * math.cosh(v) ** 2 + math.sinh(v) ** 2 + gp * sh * ch * math.cosh(v))
            + u * gp * ch * ch
            + a * math.sinh(v)
        ) / root
        return -val
    if axis.causal is CausalType.SPACELIKE:
        val = (
            (g * gp + u) * sh * ch * math.cosh(v)
            + g * ch * ch
            + u * gp * sh * sh * math.cosh(v) ** 2
            + (u * math.sinh(v) + a) * gp * math.sinh(v)
        ) / root
        return -val
    return (
        (g * gp + u) * sh * ch * math.sin(v)
        + g * ch * ch * math.sin(v) ** 2
        + g * math.cos(v) ** 2
        + u * gp * sh * sh
        + a * math.cos(v)
    ) / root


@dataclass(frozen=True)
class CircleStats:
    u: float
    min: float
    max: float
    spread: float
    closed_form_gap: Optional[float] = None


def v_grid(axis: AxisSpec, samples: int = V_SAMPLES) -> list[float]:
    if axis.causal is CausalType.TIMELIKE:
        return [2.0 * math.pi * j / samples for j in range(samples)]
    lo, hi = HYPERBOLIC_V
    return [lo + (hi - lo) * j / (samples - 1) for j in range(samples)]


def pairing_along_circle(
    axis: AxisSpec, family: Family, u: float, v_samples: int = V_SAMPLES
) -> CircleStats:
    """Range of <grad f, N> along the parallel u = const.

    Raises:
        DegeneratePointError: naming the first degenerate (u, v) on the parallel.
    """
    S = revolution_surface(axis, family)
    values, gap = [], None
    for v in v_grid(axis, v_samples):
        p = pairing(S, u, v)
        values.append(p)
        cf = closed_form_pairing(axis, family, u, v)
        if cf is not None:
            d = abs(cf - p)
            gap = d if gap is None else max(gap, d)
    lo, hi = min(values), max(values)
    return CircleStats(u, lo, hi, hi - lo, gap)


def q_statistic(gen: Generatrix, u: float, v: float, theta: float, a: float) -> float:
    """Closed form of d/dv [sqrt(1 - g'^2) <grad f, N>] for a spacelike axis.

    Uses the opposite orientation to X_u ^ X_v; see :func:`q_finite_difference`.
    """
    g, gp = gen.g(u), gen.dg(u)
    return (
        g * math.sinh(2.0 * v) * math.cosh(theta) ** 2
        + (u + g * gp) * math.sinh(2.0 * theta) / 2.0 * math.sinh(v)
        + a * math.cosh(v)
    )


def q_finite_difference(gen: Generatrix, u: float, v: float, theta: float, a: float) -> float:
    """The same derivative by central differences of the numeric pairing,
    with the normal taken as -(X_u ^ X_v) to match :func:`q_statistic`."""
    S = revolution_surface(AxisSpec(CausalType.SPACELIKE, theta, a, gen), Family.SPACELIKE)
    # |X_u ^ X_v| = |g| sqrt(1 - g'^2) here; Q is normalised by the signed g
    root = math.copysign(math.sqrt(1.0 - gen.dg(u) ** 2), gen.g(u))
    return -numerics.diff(lambda w: root * pairing(S, u, w), v, 1, 1.0)


# -- reports ---------------------------------------------------------------

class Verdict(enum.Enum):
    CONSISTENT = "ConsistentWithTheorem"
    VIOLATION = "Violation"


@dataclass(frozen=True)
class Check:
    """One numeric comparison. ``upper`` checks observed <= bound, otherwise observed > bound."""

    label: str
    observed: float
    bound: float
    upper: bool = True

    @property
    def passed(self) -> bool:
        return self.observed <= self.bound if self.upper else self.observed > self.bound

    @property
    def violation(self) -> bool:
        # only a miss by more than a factor 10 counts against the theorem
        if self.upper:
            return not self.observed <= 10.0 * self.bound
        return not self.observed > self.bound / 10.0

    def line(self) -> str:
        status = "PASS" if self.passed else ("FAIL" if self.violation else "MARGINAL")
        op = "<=" if self.upper else ">"
        return f"{status:8s} {self.label}: {self.observed:.3e} {op} {self.bound:.1e}"


@dataclass(frozen=True)
class TrialRecord:
    index: int
    causal: CausalType
    theta: float
    a: float
    escape: bool
    spread: float
    generatrix: str


@dataclass
class VerificationReport:
    label: str
    checks: list[Check] = field(default_factory=list)
    trials: list[TrialRecord] = field(default_factory=list)
    circles: list[CircleStats] = field(default_factory=list)

    @property
    def verdict(self) -> Verdict:
        return Verdict.VIOLATION if any(c.violation for c in self.checks) else Verdict.CONSISTENT

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, label: str, observed: float, bound: float, upper: bool = True) -> Check:
        check = Check(label, float(observed), bound, upper)
        self.checks.append(check)
        return check

    def merge(self, other: VerificationReport) -> VerificationReport:
        self.checks.extend(other.checks)
        self.trials.extend(other.trials)
        self.circles.extend(other.circles)
        return self

    def render(self) -> str:
        lines = [f"== {self.label}"]
        lines += [c.line() for c in self.checks]
        lines.append(f"verdict: {self.verdict.value} ({sum(c.passed for c in self.checks)}/{len(self.checks)} checks pass)")
        return "\n".join(lines)


# -- suites ----------------------------------------------------------------

def corollary_suite(grid: int = 32) -> VerificationReport:
    """Horizontal planes, vertical planes and circular cylinders."""
    rep = VerificationReport("planes and cylinders")
    for z in (-1.0, 0.0, 3.0):
        rep.add(f"horizontal plane z={z}: max|H_f|", max_abs_f_mean_curvature(horizontal_plane(z), grid, grid), 1e-12)
    rep.add("cylinder r=1: max|H_f|", max_abs_f_mean_curvature(cylinder(1.0), grid, grid), 1e-12)
    for r in (0.5, 2.0, 3.0):
        S = cylinder(r)
        expected = abs(r / 2.0 - 1.0 / (2.0 * r))
        err = max(abs(abs(f_mean_curvature(S, u, v)) - expected) for u, v in S.grid(grid, grid))
        rep.add(f"cylinder r={r}: max||H_f| - |r/2 - 1/2r||", err, 1e-10)
    for d in (0.0, 1.0, 2.0):
        S = vertical_plane(d, angle=0.7)
        pts = S.grid(grid, grid)
        pair_err = max(abs(abs(pairing(S, u, v)) - d) for u, v in pts)
        rep.add(f"vertical plane d={d}: max||pairing| - d|", pair_err, 1e-10)
        hf = [abs(f_mean_curvature(S, u, v)) for u, v in pts]
        if d == 0.0:
            rep.add("vertical plane through z-axis: max|H_f|", max(hf), 1e-12)
        else:
            rep.add(f"vertical plane d={d}: min|H_f| (nonzero)", min(hf), 1e-3, upper=False)
    return rep


def lemma1_suite(n: int = 1000, seed: int = 0) -> VerificationReport:
    """|pairing| against Euclidean point-to-tangent-plane distance at random data."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    done = 0
    while done < n:
        p = LVec3(*rng.uniform(-5.0, 5.0, 3))
        w = rng.normal(size=3)
        q = w[0] ** 2 + w[1] ** 2 - w[2] ** 2
        if abs(q) < 0.1 * float(w @ w):
            continue
        nrm = LVec3(*(w / math.sqrt(abs(q))))
        lhs, rhs = lemma1_distance_identity(p, nrm)
        worst = max(worst, abs(lhs - rhs))
        done += 1
    rep = VerificationReport("pairing as a distance")
    rep.add(f"{n} random (p, N): max |lhs - rhs|", worst, 1e-10)
    return rep


def _draw_cubic(rng, interval, family, need_nonzero=None, budget=500):
    for _ in range(budget):
        coeffs = rng.uniform(-1.0, 1.0, 4)
        gen = Generatrix.polynomial(coeffs, interval)
        if gen.causal_margin() <= 0.05:
            continue
        if need_nonzero is not None:
            lo, hi = interval
            if min(abs(need_nonzero(gen, u)) for u in np.linspace(lo, hi, 33)) < 0.05:
                continue
        return gen
    raise FcatError("could not draw an admissible generatrix")


def _nondegeneracy(axis_causal, family):
    """Quantity that must stay away from zero for the parallels to be nondegenerate."""
    spacelike = family is Family.SPACELIKE
    if axis_causal is CausalType.LIGHTLIKE:
        return lambda gen, u: u - gen.g(u)
    if axis_causal is CausalType.SPACELIKE:
        return (lambda gen, u: gen.g(u)) if spacelike else (lambda gen, u: u)
    return (lambda gen, u: u) if spacelike else (lambda gen, u: gen.g(u))


def _trial_spread(axis, family, samples=5):
    lo, hi = axis.generatrix.interval
    stats = [pairing_along_circle(axis, family, u) for u in np.linspace(lo, hi, samples)]
    return max(s.spread for s in stats), stats


def theorem_sweep(
    family: Family,
    trials: int = 200,
    seed: int = 0,
    axis_causal: Optional[CausalType] = None,
    escape_rate: float = 0.25,
    redraw_budget: int = 20,
    spread_min: float = SPREAD_MIN,
    escape_max: float = ESCAPE_MAX,
    residual_max: float = RESIDUAL_MAX,
) -> VerificationReport:
    """Randomised elimination of non-vertical axes.

    Each trial draws an axis (all causal types unless ``axis_causal`` is
    given) and a cubic generatrix. Generic trials have (theta, a) != (0, 0)
    and must show spread > ``spread_min`` along some parallel. Escape trials
    are the configurations the classification keeps (theta = a = 0 about a
    timelike axis; theta = 0 and g' = 0 about a spacelike axis for the
    timelike family) and must show spread <= ``escape_max``. Finally the
    surviving surfaces are checked for H_f = 0 on a grid.
    """
    if trials < 1:
        raise DomainError("trials must be >= 1")
    rep = VerificationReport(f"{family.value} surfaces of revolution: axis elimination")
    causals = [CausalType.SPACELIKE, CausalType.LIGHTLIKE, CausalType.TIMELIKE]
    seeds = np.random.SeedSequence(seed).spawn(trials)
    worst_generic = math.inf
    worst_escape = 0.0
    for k, ss in enumerate(seeds):
        rng = np.random.default_rng(ss)
        for _attempt in range(redraw_budget):
            causal = axis_causal or causals[int(rng.integers(3))]
            has_escape = causal is CausalType.TIMELIKE or (
                causal is CausalType.SPACELIKE and family is Family.TIMELIKE
            )
            escape = has_escape and rng.uniform() < escape_rate
            lo = float(rng.uniform(0.3, 1.5))
            interval = (lo, lo + 0.5)
            need = _nondegeneracy(causal, family)
            if escape and causal is CausalType.SPACELIKE:
                gen = Generatrix.constant(float(rng.uniform(-1.0, 1.0)), interval)
                theta, a = 0.0, float(rng.uniform(-1.0, 1.0))
            else:
                gen = _draw_cubic(rng, interval, family, need)
                if escape:
                    theta, a = 0.0, 0.0
                else:
                    mode = int(rng.integers(3))
                    mag = lambda: float(rng.uniform(0.2, 1.0) * rng.choice([-1.0, 1.0]))
                    theta = mag() if mode in (0, 2) else 0.0
                    a = mag() if mode in (1, 2) else 0.0
            axis = AxisSpec(causal, theta, a, gen)
            try:
                spread, stats = _trial_spread(axis, family)
            except DegeneratePointError:
                continue
            break
        else:
            raise FcatError(f"trial {k}: redraw budget exhausted")
        rep.trials.append(TrialRecord(k, causal, theta, a, escape, spread, gen.label))
        if escape:
            worst_escape = max(worst_escape, spread)
        else:
            worst_generic = min(worst_generic, spread)
    n_generic = sum(not t.escape for t in rep.trials)
    n_escape = trials - n_generic
    if n_generic:
        rep.add(f"{n_generic} generic trials: min spread", worst_generic, spread_min, upper=False)
    if n_escape:
        rep.add(f"{n_escape} escape trials: max spread", worst_escape, escape_max)
    rep.merge(survivor_suite(family, residual_max=residual_max))
    return rep


def survivor_suite(family: Family, grid: int = GRID, residual_max: float = RESIDUAL_MAX) -> VerificationReport:
    """H_f = 0 on the surfaces the classification keeps."""
    rep = VerificationReport(f"{family.value} survivors")
    if family is Family.SPACELIKE:
        plane = revolution_surface(
            AxisSpec(CausalType.TIMELIKE, 0.0, 0.0, Generatrix.constant(1.5, (0.2, 3.0))), family
        )
        rep.add("horizontal plane: max|H_f|", max_abs_f_mean_curvature(plane, grid, grid), residual_max)
        for C in (-2.0, 0.0, 2.0):
            S = profiles.make_surface(profiles.spacelike_catenoid(C))
            rep.add(f"spacelike f-catenoid C={C}: max|H_f|", max_abs_f_mean_curvature(S, grid, grid), residual_max)
    else:
        plane = revolution_surface(
            AxisSpec(CausalType.SPACELIKE, 0.0, 0.0, Generatrix.constant(0.0, (0.2, 3.0))), family
        )
        rep.add("vertical plane through z-axis: max|H_f|", max_abs_f_mean_curvature(plane, grid, grid), residual_max)
        cyl = revolution_surface(
            AxisSpec(CausalType.TIMELIKE, 0.0, 0.0, Generatrix.constant(1.0, (-3.0, 3.0))), family
        )
        rep.add("unit cylinder: max|H_f|", max_abs_f_mean_curvature(cyl, grid, grid), residual_max)
        for C, comp in ((0.5, "inner"), (1.0, "inner"), (2.0, "inner"), (3.1, "inner"), (3.1, "outer")):
            S = profiles.make_surface(profiles.timelike_catenoid(C, comp))
            rep.add(f"timelike f-catenoid C={C} ({comp}): max|H_f|", max_abs_f_mean_curvature(S, grid, grid), residual_max)
    return rep


def residual_suite(
    grid: int = GRID, seed: int = 0, points: int = 500, residual_max: float = RESIDUAL_MAX
) -> VerificationReport:
    """Zero H_f on both catenoid families, ODE residuals, and the revolution
    formulas for H and the pairing against the generic pipeline."""
    rep = survivor_suite(Family.SPACELIKE, grid, residual_max)
    rep.merge(survivor_suite(Family.TIMELIKE, grid, residual_max))
    rep.label = "f-catenoid residuals"
    rep.merge(ode_suite(seed=seed))
    rep.merge(revolution_formula_suite(points, seed))
    return rep


def _random_catenoid_point(rng):
    """A random (profile, u) with u strictly inside the profile's positive range."""
    if rng.uniform() < 0.5:
        prof = profiles.spacelike_catenoid(float(rng.uniform(-2.0, 2.0)), sign=int(rng.choice([-1, 1])))
    else:
        C = float(rng.choice([rng.uniform(0.2, 2.6), rng.uniform(2.8, 10.0)]))
        comp = "inner" if C < profiles.E or rng.uniform() < 0.5 else "outer"
        prof = profiles.timelike_catenoid(C, comp, sign=int(rng.choice([-1, 1])))
    lo, hi = profiles.natural_range(prof, edge=0.05, half=True)
    return prof, float(rng.uniform(lo, hi))


def ode_suite(n: int = 100, seed: int = 0) -> VerificationReport:
    rng = np.random.default_rng(seed)
    worst = {profiles.ProfileKind.SPACELIKE: 0.0, profiles.ProfileKind.TIMELIKE: 0.0}
    count = {k: 0 for k in worst}
    while min(count.values()) < n:
        prof, u = _random_catenoid_point(rng)
        if count[prof.kind] >= n:
            continue
        worst[prof.kind] = max(worst[prof.kind], abs(prof.ode_residual(u)))
        count[prof.kind] += 1
    rep = VerificationReport("profile ODE residuals")
    for kind, w in worst.items():
        rep.add(f"{kind.value} closed form, {n} points: max |ODE residual|", w, 1e-10)
    return rep


def revolution_mean_curvature(kind: profiles.ProfileKind, u: float, gp: float, gpp: float) -> float:
    """H of the z-axis revolution graph from g', g'' (normal X_u ^ X_v, u > 0)."""
    if kind is profiles.ProfileKind.SPACELIKE:
        w = 1.0 - gp * gp
        return -0.5 * (w * gp + u * gpp) / (u * w ** 1.5)
    w = gp * gp - 1.0
    return ((1.0 - gp * gp) * gp + u * gpp) / (2.0 * u * w ** 1.5)


def revolution_pairing(kind: profiles.ProfileKind, u: float, gp: float) -> float:
    if kind is profiles.ProfileKind.SPACELIKE:
        return -gp * u / math.sqrt(1.0 - gp * gp)
    return gp * u / math.sqrt(gp * gp - 1.0)


def revolution_formula_suite(n: int = 500, seed: int = 0) -> VerificationReport:
    rng = np.random.default_rng(seed)
    worst_h = worst_p = 0.0
    for _ in range(n):
        prof, u = _random_catenoid_point(rng)
        v = float(rng.uniform(0.0, 2.0 * math.pi))
        S = _catenoid_surface(prof)
        gp, gpp = prof.gprime(u), prof.gsecond(u)
        h_ref = revolution_mean_curvature(prof.kind, u, gp, gpp)
        p_ref = revolution_pairing(prof.kind, u, gp)
        worst_h = max(worst_h, abs(mean_curvature(S, u, v) - h_ref) / max(1.0, abs(h_ref)))
        worst_p = max(worst_p, abs(pairing(S, u, v) - p_ref) / max(1.0, abs(p_ref)))
    rep = VerificationReport("revolution formulas vs generic pipeline")
    rep.add(f"{n} points: max rel |H - H_revolution|", worst_h, 1e-8)
    rep.add(f"{n} points: max rel |pairing - pairing_revolution|", worst_p, 1e-8)
    return rep


def _catenoid_surface(prof):
    return profiles.make_surface(prof, profiles.natural_range(prof, half=True))


def tables_suite() -> VerificationReport:
    """Recompute every published row, the domain trichotomy and the C = e divergence."""
    rep = VerificationReport("published table, domain cases, divergence at C = e")
    for C, u1, u2, i1, i2 in profiles.PUBLISHED_TABLE:
        row = profiles.table_row(C)
        rtol = 1e-3 if C == 2.72 else 1e-5
        rep.add(f"C={C}: |u1 - published|", abs(row.u1 - u1), 1e-8)
        rep.add(f"C={C}: |u2 - published|", abs(row.u2 - u2), 1e-8)
        rep.add(f"C={C}: rel |I1 - published|", abs(row.I1 - i1) / i1, rtol)
        rep.add(f"C={C}: rel |I2 - published|", abs(row.I2 - i2) / i2, rtol)
    rep.merge(domain_suite())
    rep.merge(divergence_suite())
    return rep


def domain_suite() -> VerificationReport:
    rep = VerificationReport("domain trichotomy")
    expect = {profiles.DomainTag.WHOLE_LINE: (0.5, 1.0, 2.0, 2.7),
              profiles.DomainTag.PUNCTURED_AT_ONE: (math.e,),
              profiles.DomainTag.THREE_INTERVALS: (2.72, 3.1, 10.0, 500.0)}
    for tag, cs in expect.items():
        for C in cs:
            case = profiles.domain_case(C)
            rep.add(f"C={C:.6g} is {tag.value} (0 = yes)", float(case.tag is not tag), 0.0)
            if case.roots:
                res = max(abs(math.exp(r * r) - C * r * r) for r in case.roots)
                rep.add(f"C={C:.6g}: max |exp(u^2) - C u^2| at roots", res, 1e-9)
    return rep


def divergence_suite() -> VerificationReport:
    rep = VerificationReport("divergence at C = e")
    values = [profiles.divergence_probe(10.0 ** -k) for k in range(2, 6)]
    steps = [b - a for a, b in zip(values, values[1:])]
    rep.add("min increment per decade of eps", min(steps), 0.0, upper=False)
    rep.add("relative spread of increments", max(steps) / min(steps) - 1.0, 0.15)
    return rep
