"""Numerical kernels: adaptive Gauss-Kronrod quadrature, Brent root finding
and fourth-order central differences.
"""

from __future__ import annotations

import enum
import heapq
import math
from dataclasses import dataclass
from typing import Callable, Optional

from .errors import DomainError, QuadratureError, RootFindingError

EPS = 2.220446049250313e-16

# Kronrod 15-point abscissae on [-1, 1] (non-negative half, descending) with
# their weights; odd-indexed abscissae are the 7-point Gauss nodes.
_XGK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
)
_WGK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
_WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)

DEFAULT_BUDGET = 1_000_000


class SingularEnd(enum.Enum):
    """Which endpoint, if any, carries an inverse-square-root singularity."""

    NONE = "none"
    LOWER = "lower"
    UPPER = "upper"


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    evaluations: int


def _checked(fn, x):
    y = fn(x)
    if not math.isfinite(y):
        raise QuadratureError(f"integrand returned {y} at {x!r}")
    return y


def _gk15(fn, lo, hi):
    """One Gauss-Kronrod 7/15 panel; returns (kronrod, error, resabs)."""
    centr = 0.5 * (lo + hi)
    hlgth = 0.5 * (hi - lo)
    fc = _checked(fn, centr)
    resg = fc * _WG[3]
    resk = fc * _WGK[7]
    resabs = abs(resk)
    fv1 = [0.0] * 7
    fv2 = [0.0] * 7
    for j in range(7):
        dx = hlgth * _XGK[j]
        f1 = _checked(fn, centr - dx)
        f2 = _checked(fn, centr + dx)
        fv1[j], fv2[j] = f1, f2
        resk += _WGK[j] * (f1 + f2)
        resabs += _WGK[j] * (abs(f1) + abs(f2))
        if j % 2 == 1:
            resg += _WG[j // 2] * (f1 + f2)
    reskh = 0.5 * resk
    resasc = _WGK[7] * abs(fc - reskh)
    for j in range(7):
        resasc += _WGK[j] * (abs(fv1[j] - reskh) + abs(fv2[j] - reskh))
    result = resk * hlgth
    resabs *= abs(hlgth)
    resasc *= abs(hlgth)
    err = abs((resk - resg) * hlgth)
    if resasc != 0.0 and err != 0.0:
        err = resasc * min(1.0, (200.0 * err / resasc) ** 1.5)
    # roundoff floor; kept well below the quadpack value so tight absolute
    # tolerances remain reachable on O(1) integrals
    err = max(err, 4.0 * EPS * resabs)
    return result, err, resabs


def _adaptive(fn, lo, hi, tol, budget):
    value, err, _ = _gk15(fn, lo, hi)
    evaluations = 15
    heap = [(-err, lo, hi, value)]
    total, total_err = value, err
    retired_val = retired_err = 0.0  # panels too narrow to split
    while total_err > tol * max(1.0, abs(total)):
        if not heap:
            raise QuadratureError(
                f"panels reached floating-point resolution with error {total_err:.3g}",
                best=QuadratureResult(total, total_err, evaluations),
            )
        if evaluations + 30 > budget:
            raise QuadratureError(
                f"evaluation budget {budget} exhausted with error {total_err:.3g}",
                best=QuadratureResult(total, total_err, evaluations),
            )
        neg_err, a, b, v = heapq.heappop(heap)
        mid = 0.5 * (a + b)
        if (b - a) <= 64.0 * EPS * max(abs(a), abs(b)) or not (a < mid < b):
            retired_val += v
            retired_err -= neg_err
            continue
        v1, e1, _ = _gk15(fn, a, mid)
        v2, e2, _ = _gk15(fn, mid, b)
        evaluations += 30
        heapq.heappush(heap, (-e1, a, mid, v1))
        heapq.heappush(heap, (-e2, mid, b, v2))
        total = retired_val + math.fsum(item[3] for item in heap)
        total_err = retired_err - math.fsum(item[0] for item in heap)
    return QuadratureResult(total, total_err, evaluations)


def integrate(
    fn: Callable[[float], float],
    a: float,
    b: float,
    tol: float = 1e-12,
    singular: SingularEnd = SingularEnd.NONE,
    *,
    offset_fn: Optional[Callable[[float], float]] = None,
    budget: int = DEFAULT_BUDGET,
) -> QuadratureResult:
    """Adaptively integrate ``fn`` over ``[a, b]``.

    Convergence is declared once the summed panel error is at most
    ``tol * max(1, |value|)``.

    When ``singular`` flags an endpoint, the integral is rewritten with
    ``distance = w**2`` to that endpoint, which turns an inverse square root
    blow-up into a smooth integrand in ``w``. If ``fn`` loses precision near
    the flagged end, ``offset_fn(d)`` may supply the integrand at distance
    ``d`` from it instead.

    Raises:
        DomainError: if ``a >= b`` or ``tol <= 0``.
        QuadratureError: on a non-finite integrand value or when the
            evaluation budget runs out; ``best`` holds the last estimate.
    """
    if not (a < b):
        raise DomainError(f"integration interval [{a}, {b}] is empty or reversed")
    if not (tol > 0.0):
        raise DomainError(f"tolerance must be positive, got {tol}")

    if singular is SingularEnd.NONE:
        return _adaptive(fn, a, b, tol, budget)

    if offset_fn is None:
        if singular is SingularEnd.UPPER:
            def offset_fn(d):
                return fn(b - d)
        else:
            def offset_fn(d):
                return fn(a + d)

    def substituted(w):
        return 2.0 * w * offset_fn(w * w)

    return _adaptive(substituted, 0.0, math.sqrt(b - a), tol, budget)


def find_root(
    fn: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = 1e-12,
    maxiter: int = 200,
) -> float:
    """Brent's method on a sign-changing bracket ``[lo, hi]``.

    Returns the bracket end with the smaller residual once the bracket is
    no wider than ``tol`` (or a few ulps when ``tol`` is 0). Inverse
    quadratic and secant steps fall back to bisection whenever they stall.
    """
    a, b = float(lo), float(hi)
    fa, fb = fn(a), fn(b)
    if math.isnan(fa) or math.isnan(fb):
        raise RootFindingError(f"NaN at bracket end: f({a})={fa}, f({b})={fb}")
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if (fa > 0) == (fb > 0):
        raise RootFindingError(f"no sign change on [{a}, {b}]: f={fa:.3g}, {fb:.3g}")

    c, fc = a, fa
    d = e = b - a
    for _ in range(maxiter):
        if (fb > 0) == (fc > 0):
            c, fc = a, fa
            d = e = b - a
        if abs(fc) < abs(fb):
            a, b, c = b, c, b
            fa, fb, fc = fb, fc, fb
        tol1 = 2.0 * EPS * abs(b) + 0.5 * tol
        xm = 0.5 * (c - b)
        if abs(xm) <= tol1 or fb == 0.0:
            return b
        if abs(e) >= tol1 and abs(fa) > abs(fb):
            s = fb / fa
            if a == c:
                p = 2.0 * xm * s
                q = 1.0 - s
            else:
                q = fa / fc
                r = fb / fc
                p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0))
                q = (q - 1.0) * (r - 1.0) * (s - 1.0)
            if p > 0.0:
                q = -q
            p = abs(p)
            if 2.0 * p < min(3.0 * xm * q - abs(tol1 * q), abs(e * q)):
                e = d
                d = p / q
            else:
                d = xm
                e = d
        else:
            d = xm
            e = d
        a, fa = b, fb
        b += d if abs(d) > tol1 else math.copysign(tol1, xm)
        fb = fn(b)
        if math.isnan(fb):
            raise RootFindingError(f"NaN at {b}")
    raise RootFindingError(f"no convergence after {maxiter} iterations")


def diff(fn: Callable[[float], float], u: float, order: int = 1, scale: float = 1.0) -> float:
    """Fourth-order central difference of ``fn`` at ``u``.

    The step is ``scale * 1e-4`` for first and ``scale * 1e-3`` for second
    derivatives.
    """
    if not (scale > 0.0):
        raise DomainError(f"scale must be positive, got {scale}")
    if order == 1:
        h = scale * 1e-4
        return (fn(u - 2 * h) - 8.0 * fn(u - h) + 8.0 * fn(u + h) - fn(u + 2 * h)) / (12.0 * h)
    if order == 2:
        h = scale * 1e-3
        return (
            -fn(u - 2 * h) + 16.0 * fn(u - h) - 30.0 * fn(u) + 16.0 * fn(u + h) - fn(u + 2 * h)
        ) / (12.0 * h * h)
    raise DomainError(f"derivative order must be 1 or 2, got {order}")
