"""Generatrices of the spacelike and timelike f-Catenoids.

Both families rotate a graph z = g(u) about the z-axis. Their slopes are
known in closed form,

    spacelike:  g'(u)^2 = 1 / (1 + u^2 exp(u^2 + C)),
    timelike:   g'(u)^2 = exp(u^2) / (exp(u^2) - C u^2),

and the heights are obtained by quadrature. The timelike slope is only
defined where exp(u^2) - C u^2 > 0; see :func:`domain_case`.
"""

from __future__ import annotations

import enum
import math
import threading
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import numerics
from .errors import DivergenceError, DomainError
from .minkowski import LVec3
from .numerics import SingularEnd
from .surfaces import ParametricSurface

E = math.e
QUAD_TOL = 1e-12
#: Values of C closer than this to e are treated as exactly e.
CRITICAL_TOL = 1e-12
#: Fraction of an interval removed at degenerate ends before sampling.
DELTA_EDGE = 1e-3
#: Unbounded components are cut at this |u| for "auto" ranges.
AUTO_SPAN = 3.0
#: Upper limit of the second tabulated integral.
TABLE_UPPER = 4.0


class ProfileKind(enum.Enum):
    SPACELIKE = "spacelike"
    TIMELIKE = "timelike"


class DomainTag(enum.Enum):
    WHOLE_LINE = "WholeLine"
    PUNCTURED_AT_ONE = "PuncturedAtOne"
    THREE_INTERVALS = "ThreeIntervals"


@dataclass(frozen=True)
class DomainCase:
    """Sign structure of exp(u^2) - C u^2 for a given C > 0."""

    C: float
    tag: DomainTag
    roots: Optional[tuple[float, float]] = None

    def components(self) -> list[tuple[float, float]]:
        """Open intervals where the timelike slope is defined, left to right."""
        inf = math.inf
        if self.tag is DomainTag.WHOLE_LINE:
            return [(-inf, inf)]
        if self.tag is DomainTag.PUNCTURED_AT_ONE:
            return [(-inf, -1.0), (-1.0, 1.0), (1.0, inf)]
        u1, u2 = self.roots
        return [(-inf, -u2), (-u1, u1), (u2, inf)]

    def base_points(self) -> list[Optional[float]]:
        """Conventional integration base point for each component.

        The outer components at C = e have no admissible base point on
        their boundary (the integral diverges there); ``None`` marks them.
        """
        if self.tag is DomainTag.WHOLE_LINE:
            return [0.0]
        if self.tag is DomainTag.PUNCTURED_AT_ONE:
            return [None, 0.0, None]
        u1, u2 = self.roots
        return [-u2, 0.0, u2]

    def component_of(self, u: float) -> tuple[float, float]:
        for lo, hi in self.components():
            if lo < u < hi:
                return lo, hi
        raise DomainError(f"u = {u} is outside the domain for C = {self.C}")


@dataclass(frozen=True)
class TableRow:
    C: float
    u1: float
    u2: float
    I1: float
    I2: float


# Published values (C, u1, u2, I1, I2) for C > e.
PUBLISHED_TABLE: tuple[tuple[float, float, float, float, float], ...] = (
    (2.72, 0.9822782644, 1.017827051, 3.39646, 5.63324),
    (2.725, 0.9650767467, 1.035334695, 2.913861676, 5.150340780),
    (2.73, 0.9539872965, 1.046729750, 2.716714471, 4.952913186),
    (2.74, 0.9375982937, 1.063728407, 2.497786122, 4.733425412),
    (2.75, 0.9248309636, 1.077103331, 2.363204279, 4.598285949),
    (2.8, 0.8808758710, 1.124065962, 2.026032087, 4.258352255),
    (2.9, 0.8258522408, 1.184957908, 1.740252676, 3.967178286),
    (3.0, 0.7868044780, 1.229688803, 1.583315220, 3.805008572),
    (3.1, 0.7556136794, 1.266389104, 1.474783161, 3.691396684),
    (3.2, 0.7293528965, 1.297996253, 1.391943189, 3.603620332),
    (4.0, 0.5978318795, 1.467410087, 1.051169565, 3.227665154),
    (5.0, 0.5090885010, 1.594566197, 0.8629326647, 3.003422822),
    (6.0, 0.4521962510, 1.683195738, 0.7526390978, 2.863129355),
    (7.0, 0.4113302857, 1.751120026, 0.6770807650, 2.761819500),
    (8.0, 0.3800280951, 1.806013755, 0.6208959900, 2.683055126),
    (10.0, 0.3344137545, 1.891336053, 0.5412131026, 2.565108172),
    (20.0, 0.2295778377, 2.121262664, 0.3655508690, 2.266933975),
    (30.0, 0.1857512382, 2.239037675, 0.2943554575, 2.122055409),
    (40.0, 0.1601547153, 2.317248453, 0.2532125983, 2.027988230),
    (50.0, 0.1428721249, 2.375356389, 0.2255845814, 1.959035117),
    (100.0, 0.1005063540, 2.544164917, 0.1582764960, 1.762485425),
    (200.0, 0.07088856878, 2.698888129, 0.1114918791, 1.586306978),
    (300.0, 0.05783165509, 2.784186390, 0.09091788154, 1.490482830),
    (400.0, 0.05006269611, 2.842705995, 0.07868765650, 1.425201168),
    (500.0, 0.04476619308, 2.887054100, 0.07035385008, 1.375955282),
)


# -- spacelike family --------------------------------------------------------

# beyond this ln q, 1 + q == q in double precision and exp(q) would overflow
_LOG_Q_MAX = 700.0


def _spacelike_log_q(u: float, C: float) -> float:
    """ln(u^2 exp(u^2 + C)), for u != 0."""
    return u * u + C + 2.0 * math.log(abs(u))


def spacelike_gprime(u: float, C: float, sign: int = 1) -> float:
    if u == 0.0:
        return float(sign)
    log_q = _spacelike_log_q(u, C)
    if log_q > _LOG_Q_MAX:
        return sign * math.exp(-0.5 * log_q)
    return sign / math.sqrt(1.0 + math.exp(log_q))


def spacelike_gsecond(u: float, C: float, sign: int = 1) -> float:
    # g'' = -(1/2) q' (1 + q)^(-3/2) with q' = 2 q (1 + u^2) / u
    if u == 0.0:
        return 0.0
    log_q = _spacelike_log_q(u, C)
    if log_q >= 0.0:  # q / ((1 + q) u) without overflow either way
        ratio = 1.0 / ((1.0 + math.exp(-log_q)) * u)
    else:  # q / u = u e^(u^2 + C) stays finite for tiny u
        ratio = math.copysign(math.exp(u * u + C + math.log(abs(u))), u) / (1.0 + math.exp(log_q))
    return -sign * (1.0 + u * u) * ratio * abs(spacelike_gprime(u, C))


def _spacelike_integrand(C):
    def f(t):
        return spacelike_gprime(t, C)
    return f


def _spacelike_integral(a: float, b: float, C: float) -> float:
    if a == b:
        return 0.0
    lo, hi = min(a, b), max(a, b)
    val = numerics.integrate(_spacelike_integrand(C), lo, hi, QUAD_TOL).value
    return val if b > a else -val


def spacelike_height(u: float, C: float) -> float:
    """h(u) = integral from 0 to u of 1/sqrt(1 + t^2 exp(t^2 + C)); odd in u."""
    if u == 0.0:
        return 0.0
    return math.copysign(_spacelike_integral(0.0, abs(u), C), u)


# -- timelike family ---------------------------------------------------------

def _gap_ratio(u: float, C: float) -> float:
    """1 - C u^2 exp(-u^2), which has the sign of exp(u^2) - C u^2."""
    return 1.0 - C * u * u * math.exp(-u * u)


def domain_case(C: float) -> DomainCase:
    """Classify where exp(u^2) - C u^2 is positive.

    For C > e the two positive roots u1 < 1 < u2 are located to full
    double precision; u2 is bracketed by doubling from 4.
    """
    if not (C > 0.0) or not math.isfinite(C):
        raise DomainError(f"C must be a positive constant, got {C}")
    if abs(C - E) <= CRITICAL_TOL:
        return DomainCase(C, DomainTag.PUNCTURED_AT_ONE)
    if C < E:
        return DomainCase(C, DomainTag.WHOLE_LINE)

    # u^2 - ln C - 2 ln u has the sign of exp(u^2) - C u^2 and never overflows
    log_c = math.log(C)

    def phi(u):
        return u * u - log_c - 2.0 * math.log(u)

    u1 = numerics.find_root(phi, math.sqrt(1.0 / C) * 0.5, 1.0, tol=0.0)
    hi = 4.0
    while phi(hi) <= 0.0:
        hi *= 2.0
    u2 = numerics.find_root(phi, 1.0, hi, tol=0.0)
    return DomainCase(C, DomainTag.THREE_INTERVALS, (u1, u2))


def timelike_gprime(u: float, C: float, sign: int = 1) -> float:
    """sign * sqrt(exp(u^2) / (exp(u^2) - C u^2)).

    Raises:
        DivergenceError: at a root of exp(u^2) - C u^2.
        DomainError: where exp(u^2) - C u^2 < 0.
    """
    gap = _gap_ratio(u, C)
    if abs(gap) <= 1e-14:
        raise DivergenceError(f"slope diverges at u = {u} (root of exp(u^2) - {C} u^2)")
    if gap < 0.0:
        raise DomainError(f"exp(u^2) - C u^2 < 0 at u = {u}, C = {C}")
    return sign / math.sqrt(gap)


def timelike_gsecond(u: float, C: float, sign: int = 1) -> float:
    gap = _gap_ratio(u, C)
    if gap <= 0.0:
        raise DomainError(f"exp(u^2) - C u^2 <= 0 at u = {u}, C = {C}")
    dp = 2.0 * C * u * (1.0 - u * u) * math.exp(-u * u)
    return 0.5 * sign * dp * gap ** -1.5


def _timelike_integrand(C):
    def f(t):
        gap = _gap_ratio(t, C)
        if gap <= 0.0:
            raise DomainError(f"integrand undefined at t = {t} for C = {C}")
        return 1.0 / math.sqrt(gap)
    return f


def _near_root_integrand(root: float, direction: int):
    """Timelike integrand at distance d from a simple root, toward ``direction``.

    With t = root + direction * d and D = t^2 - root^2, the root relation
    C root^2 = exp(root^2) gives exactly
        1 - C t^2 exp(-t^2) = -expm1(-D) - D exp(-D) / root^2,
    which keeps full relative accuracy as d -> 0.
    """
    r2 = root * root

    def f(d):
        delta = direction * d
        big_d = delta * (2.0 * root + delta)
        gap = -math.expm1(-big_d) - big_d * math.exp(-big_d) / r2
        if gap <= 0.0:
            raise DomainError(f"integrand undefined at distance {d} from root {root}")
        return 1.0 / math.sqrt(gap)

    return f


def _snap_to_boundary(x: float, component: tuple[float, float]) -> Optional[float]:
    for b in component:
        if math.isfinite(b) and abs(x - b) <= 1e-12 * max(1.0, abs(b)):
            return b
    return None


def _timelike_integral(a: float, b: float, case: DomainCase) -> float:
    """Signed integral of the timelike integrand from a to b."""
    if a == b:
        return 0.0
    lo, hi = min(a, b), max(a, b)
    component = case.component_of(0.5 * (lo + hi))
    lo_root = _snap_to_boundary(lo, component)
    hi_root = _snap_to_boundary(hi, component)
    if lo_root is None and not component[0] < lo:
        raise DomainError(f"[{lo}, {hi}] leaves the component {component}")
    if hi_root is None and not hi < component[1]:
        raise DomainError(f"[{lo}, {hi}] leaves the component {component}")
    if (lo_root is not None or hi_root is not None) and case.tag is DomainTag.PUNCTURED_AT_ONE:
        raise DivergenceError(
            f"the integral diverges at the double root {lo_root if lo_root is not None else hi_root}"
        )

    C = case.C
    plain = _timelike_integrand(C)
    pieces = []
    if lo_root is not None and hi_root is not None:
        mid = 0.5 * (lo_root + hi_root)
        pieces.append((lo_root, mid, SingularEnd.LOWER, _near_root_integrand(lo_root, +1)))
        pieces.append((mid, hi_root, SingularEnd.UPPER, _near_root_integrand(hi_root, -1)))
    elif lo_root is not None:
        pieces.append((lo_root, hi, SingularEnd.LOWER, _near_root_integrand(lo_root, +1)))
    elif hi_root is not None:
        pieces.append((lo, hi_root, SingularEnd.UPPER, _near_root_integrand(hi_root, -1)))
    else:
        pieces.append((lo, hi, SingularEnd.NONE, None))
    val = math.fsum(
        numerics.integrate(plain, p, q, QUAD_TOL, end, offset_fn=near).value
        for p, q, end, near in pieces
    )
    return val if b > a else -val


def timelike_height(u: float, C: float, u0: float) -> float:
    """Integral from u0 to u of sqrt(exp(t^2) / (exp(t^2) - C t^2)).

    Either end may sit on a simple root of exp(t^2) - C t^2 (C > e); such
    ends are integrated with the inverse-square-root substitution.

    Raises:
        DomainError: if [u0, u] crosses points where the integrand is undefined.
        DivergenceError: if an end sits on the double root +-1 of C = e.
    """
    return _timelike_integral(u0, u, domain_case(C))


def table_row(C: float) -> TableRow:
    """Roots u1 < 1 < u2 and I1 = int_0^u1, I2 = int_u2^4 of the timelike integrand."""
    case = domain_case(C)
    if case.tag is not DomainTag.THREE_INTERVALS:
        raise DomainError(f"table rows need C > e, got {C}")
    u1, u2 = case.roots
    if u2 >= TABLE_UPPER:
        raise DomainError(f"u2 = {u2} exceeds the table's upper limit {TABLE_UPPER}")
    return TableRow(
        C, u1, u2, _timelike_integral(0.0, u1, case), _timelike_integral(u2, TABLE_UPPER, case)
    )


def _double_root_gap(d: float) -> float:
    """1 - (1 + d) exp(-d), accurate to full relative precision as d -> 0."""
    if abs(d) < 0.1:
        # sum over k >= 2 of (-1)^k (k - 1) d^k / k!
        total, power = 0.0, d
        for k in range(2, 24):
            power *= -d / k if k > 2 else d / 2.0
            total += (k - 1) * power
        return total
    return -math.expm1(-d) - d * math.exp(-d)


def divergence_probe(eps: float) -> float:
    """Integral of the C = e timelike integrand from 0 to 1 - eps.

    The integrand behaves like 1 / (sqrt(2) (1 - t)) near the double root
    t = 1, so the result grows like ln(1/eps) / sqrt(2).
    """
    if not (0.0 < eps < 1.0):
        raise DomainError(f"eps must lie in (0, 1), got {eps}")

    # integrate in s = 1 - t so points near the double root keep full relative
    # precision; with d = t^2 - 1 = -s (2 - s), 1 - e t^2 exp(-t^2) = 1 - (1 + d) exp(-d)
    def f(s):
        return 1.0 / math.sqrt(_double_root_gap(-s * (2.0 - s)))

    return numerics.integrate(f, eps, 1.0, QUAD_TOL).value


def ode_residual(kind: ProfileKind, gp: float, gpp: float, u: float) -> float:
    """Left side of the profile ODE whose solutions have H_f = 0."""
    if kind is ProfileKind.SPACELIKE:
        return (1.0 - gp * gp) * gp + u * gpp + u * u * gp * (1.0 - gp * gp)
    return gpp * u + gp * (1.0 - gp * gp) + u * u * gp * (gp * gp - 1.0)


# -- profiles ----------------------------------------------------------------

@dataclass(frozen=True)
class GeneratrixProfile:
    """A solved generatrix g(u) = sign * int_{u0}^u slope + B."""

    kind: ProfileKind
    C: float
    u0: float = 0.0
    B: float = 0.0
    sign: int = 1
    interval: tuple[float, float] = (-math.inf, math.inf)
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)
    _lock: threading.Lock = field(
        default_factory=threading.Lock, init=False, repr=False, compare=False
    )

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise DomainError(f"sign must be +1 or -1, got {self.sign}")
        lo, hi = self.interval
        if not lo < hi:
            raise DomainError(f"empty interval {self.interval}")
        if self.kind is ProfileKind.SPACELIKE:
            if self.interval != (-math.inf, math.inf):
                raise DomainError("spacelike catenoid generatrices live on the whole line")
            return
        case = domain_case(self.C)
        if not any(c == self.interval for c in case.components()):
            raise DomainError(f"{self.interval} is not a component of the domain for C = {self.C}")
        if not (lo < self.u0 < hi or _snap_to_boundary(self.u0, self.interval) is not None):
            raise DomainError(f"base point {self.u0} is outside {self.interval}")
        if case.tag is DomainTag.PUNCTURED_AT_ONE and not lo < self.u0 < hi:
            raise DivergenceError(f"base point {self.u0} sits on a divergent end for C = e")

    @property
    def case(self) -> Optional[DomainCase]:
        return None if self.kind is ProfileKind.SPACELIKE else domain_case(self.C)

    def gprime(self, u: float) -> float:
        if self.kind is ProfileKind.SPACELIKE:
            return spacelike_gprime(u, self.C, self.sign)
        return timelike_gprime(u, self.C, self.sign)

    def gsecond(self, u: float) -> float:
        if self.kind is ProfileKind.SPACELIKE:
            return spacelike_gsecond(u, self.C, self.sign)
        return timelike_gsecond(u, self.C, self.sign)

    def _integral(self, a: float, b: float) -> float:
        if self.kind is ProfileKind.SPACELIKE:
            return _spacelike_integral(a, b, self.C)
        return _timelike_integral(a, b, self.case)

    def g(self, u: float) -> float:
        with self._lock:
            hit = self._cache.get(u)
        if hit is None:
            hit = self._integral(self.u0, u)
            with self._lock:
                self._cache[u] = hit
        return self.sign * hit + self.B

    def heights(self, us: Sequence[float]) -> list[float]:
        """g at every point of ``us``, integrating each gap between sorted points once."""
        pts = sorted(set(float(u) for u in us))
        right = [u for u in pts if u >= self.u0]
        left = [u for u in reversed(pts) if u < self.u0]
        found = {}
        for chain in (right, left):
            acc, prev = 0.0, self.u0
            for u in chain:
                acc += self._integral(prev, u)
                found[u] = acc
                prev = u
        with self._lock:
            self._cache.update(found)
        return [self.sign * found[float(u)] + self.B for u in us]

    def ode_residual(self, u: float) -> float:
        return ode_residual(self.kind, self.gprime(u), self.gsecond(u), u)


def spacelike_catenoid(C: float = 0.0, sign: int = 1, B: float = 0.0) -> GeneratrixProfile:
    return GeneratrixProfile(ProfileKind.SPACELIKE, C, 0.0, B, sign)


def timelike_catenoid(
    C: float,
    component: str = "inner",
    sign: int = 1,
    B: float = 0.0,
    u0: Optional[float] = None,
) -> GeneratrixProfile:
    """Timelike f-Catenoid on one component of its domain.

    ``component`` is "inner" (the one containing 0), "outer" (u > 1) or
    "outer-" (u < -1); only "inner" exists for C < e. The base point defaults
    to 0 on the inner component and to the bounding root on outer ones;
    the outer components at C = e need an explicit interior ``u0`` because
    the integral diverges at +-1.
    """
    case = domain_case(C)
    comps = case.components()
    bases = case.base_points()
    index = {"inner": len(comps) // 2, "outer": len(comps) - 1, "outer-": 0}
    if component not in index or (case.tag is DomainTag.WHOLE_LINE and component != "inner"):
        raise DomainError(f"no component {component!r} for C = {C} ({case.tag.value})")
    k = index[component]
    base = bases[k] if u0 is None else u0
    if base is None:
        raise DomainError(
            f"C = e outer component {comps[k]} needs an explicit interior base point u0"
        )
    return GeneratrixProfile(ProfileKind.TIMELIKE, C, base, B, sign, comps[k])


def natural_range(
    profile: GeneratrixProfile, edge: float = DELTA_EDGE, half: bool = False
) -> tuple[float, float]:
    """The profile's interval cut to |u| <= AUTO_SPAN (or a unit past a root
    beyond it), with an ``edge`` fraction removed at finite ends.

    With ``half`` the range is restricted to u >= 0 and the axis end u = 0
    also gets a margin; for surfaces of revolution the other half only
    retraces the same surface.
    """
    lo, hi = profile.interval
    if half:
        if hi <= 0.0:
            lo, hi = -hi, -lo
        lo = max(lo, 0.0)
    if not math.isfinite(lo):
        lo = min(-AUTO_SPAN, hi - 1.0)
    if not math.isfinite(hi):
        hi = max(AUTO_SPAN, lo + 1.0)
    margin = edge * (hi - lo)
    ends = [b for b in profile.interval if math.isfinite(b)] + ([0.0] if half else [])
    if lo in ends:
        lo += margin
    if hi in ends:
        hi -= margin
    return lo, hi


def make_surface(
    profile: GeneratrixProfile,
    u_range: Optional[tuple[float, float]] = None,
    edge: float = DELTA_EDGE,
) -> ParametricSurface:
    """Rotate the generatrix about the z-axis.

    Spacelike: X = (u cos v, u sin v, g(u)); timelike: X = (u sin v, u cos v, g(u)).
    The u-range defaults to :func:`natural_range`; it may straddle the axis
    u = 0, where the parametrization is singular, so grids over it should
    avoid sampling u = 0 exactly. Explicit ends lying on a root of the
    domain or on the axis are pulled inward by ``edge`` times the range
    length.
    """
    if u_range is None:
        lo, hi = natural_range(profile, edge)
    else:
        lo, hi = map(float, u_range)
        margin = edge * (hi - lo)
        ends = [b for b in profile.interval if math.isfinite(b)] + [0.0]
        if any(abs(lo - b) <= 1e-12 * max(1.0, abs(b)) for b in ends):
            lo += margin
        if any(abs(hi - b) <= 1e-12 * max(1.0, abs(b)) for b in ends):
            hi -= margin
    if not lo < hi:
        raise DomainError(f"empty u-range after edge margins: ({lo}, {hi})")
    plo, phi_ = profile.interval
    if not (plo <= lo and hi <= phi_):
        raise DomainError(f"u-range ({lo}, {hi}) leaves the profile interval {profile.interval}")

    gp, gpp, g = profile.gprime, profile.gsecond, profile.g
    cos, sin = math.cos, math.sin
    if profile.kind is ProfileKind.SPACELIKE:
        return ParametricSurface(
            position=lambda u, v: LVec3(u * cos(v), u * sin(v), g(u)),
            u_range=(lo, hi),
            v_range=(0.0, 2.0 * math.pi),
            xu=lambda u, v: LVec3(cos(v), sin(v), gp(u)),
            xv=lambda u, v: LVec3(-u * sin(v), u * cos(v), 0.0),
            xuu=lambda u, v: LVec3(0.0, 0.0, gpp(u)),
            xuv=lambda u, v: LVec3(-sin(v), cos(v), 0.0),
            xvv=lambda u, v: LVec3(-u * cos(v), -u * sin(v), 0.0),
            periodic_v=True,
            label=f"spacelike f-catenoid C={profile.C}",
        )
    return ParametricSurface(
        position=lambda u, v: LVec3(u * sin(v), u * cos(v), g(u)),
        u_range=(lo, hi),
        v_range=(0.0, 2.0 * math.pi),
        xu=lambda u, v: LVec3(sin(v), cos(v), gp(u)),
        xv=lambda u, v: LVec3(u * cos(v), -u * sin(v), 0.0),
        xuu=lambda u, v: LVec3(0.0, 0.0, gpp(u)),
        xuv=lambda u, v: LVec3(cos(v), -sin(v), 0.0),
        xvv=lambda u, v: LVec3(-u * sin(v), -u * cos(v), 0.0),
        periodic_v=True,
        label=f"timelike f-catenoid C={profile.C}",
    )
