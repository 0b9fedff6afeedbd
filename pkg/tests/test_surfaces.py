import math
from dataclasses import replace

import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from fcat import profiles
from fcat.errors import DegeneratePointError
from fcat.minkowski import AxisKind, CausalType, LVec3, lorentz_dot, rotation
from fcat.surfaces import (
    LN_2PI,
    ParametricSurface,
    cylinder,
    density,
    f_mean_curvature,
    first_fundamental,
    fundamental_forms,
    horizontal_plane,
    lemma1_distance_identity,
    max_abs_f_mean_curvature,
    mean_curvature,
    pairing,
    transformed,
    unit_normal,
    vertical_plane,
)


def flipped(S):
    """Same surface with u and v swapped, hence the opposite normal."""
    swap = lambda fn: None if fn is None else (lambda u, v: fn(v, u))
    return replace(
        S, position=swap(S.position), u_range=S.v_range, v_range=S.u_range,
        xu=swap(S.xv), xv=swap(S.xu), xuu=swap(S.xvv), xuv=swap(S.xuv), xvv=swap(S.xuu),
        periodic_v=False,
    )


# -- first form and normal ------------------------------------------------------

def test_first_fundamental_examples():
    assert first_fundamental(horizontal_plane(0.0), 0.2, 0.3) == (1.0, 0.0, 1.0)
    E, F, G = first_fundamental(cylinder(1.0), 0.2, 0.3)
    assert (E, F) == (-1.0, 0.0) and G == pytest.approx(1.0, abs=1e-15)
    S = profiles.make_surface(profiles.spacelike_catenoid(0.0))
    E, F, G = first_fundamental(S, 1.0, 0.0)
    assert E == pytest.approx(1.0 - 1.0 / (1.0 + math.e), abs=1e-14)


def test_unit_normal_examples():
    n, kind = unit_normal(horizontal_plane(2.0), 0.1, 0.2)
    assert kind is CausalType.TIMELIKE and abs(abs(n.z) - 1.0) < 1e-15 and n.x == n.y == 0.0
    n, kind = unit_normal(cylinder(1.0), 0.0, 0.4)
    assert kind is CausalType.SPACELIKE
    assert abs(abs(n.x) - math.cos(0.4)) < 1e-15 and abs(abs(n.y) - math.sin(0.4)) < 1e-15


def test_lightlike_plane_is_degenerate():
    S = ParametricSurface(lambda u, v: LVec3(u, v, -u), (-1, 1), (-1, 1))
    with pytest.raises(DegeneratePointError):
        unit_normal(S, 0.0, 0.0)


def test_dependent_partials_report_point():
    S = profiles.make_surface(profiles.spacelike_catenoid(0.0), (-1.0, 1.0))
    with pytest.raises(DegeneratePointError) as info:
        unit_normal(S, 0.0, 0.5)
    assert (info.value.u, info.value.v) == (0.0, 0.5)


@pytest.mark.parametrize("S, u, v", [
    (cylinder(2.0), 0.3, 1.1),
    (profiles.make_surface(profiles.spacelike_catenoid(0.5)), 0.8, 2.0),
    (profiles.make_surface(profiles.timelike_catenoid(1.0)), 0.6, 0.4),
])
def test_normal_is_unit_and_orthogonal(S, u, v):
    n, _ = unit_normal(S, u, v)
    xu, xv = S.first_partials(u, v)
    assert abs(abs(lorentz_dot(n, n)) - 1.0) < 1e-12
    assert abs(lorentz_dot(n, xu)) < 1e-10 and abs(lorentz_dot(n, xv)) < 1e-10


def test_eps_follows_gram_sign():
    ff, _ = fundamental_forms(horizontal_plane(0.0), 0.0, 0.0)
    assert ff.eps == -1 and ff.E * ff.G - ff.F ** 2 > 0
    ff, _ = fundamental_forms(cylinder(1.0), 0.0, 0.0)
    assert ff.eps == 1 and ff.E * ff.G - ff.F ** 2 < 0


# -- density ------------------------------------------------------------------------

@given(st.floats(-5, 5), st.floats(-5, 5), st.floats(-5, 5))
def test_density_point(x, y, z):
    d = density(LVec3(x, y, z))
    assert d.grad_f == LVec3(x, y, 0.0)
    assert d.f_value == 0.5 * (x * x + y * y) + LN_2PI


# -- curvature ----------------------------------------------------------------------

@pytest.mark.parametrize("S", [horizontal_plane(1.0), vertical_plane(2.0, 0.3)])
def test_planes_have_zero_mean_curvature(S):
    assert all(mean_curvature(S, u, v) == 0.0 for u, v in S.grid(5, 5))


@pytest.mark.parametrize("r", [0.5, 1.0, 2.0, 3.0])
def test_cylinder_curvatures(r):
    S = cylinder(r)
    for u, v in S.grid(4, 7):
        assert abs(abs(mean_curvature(S, u, v)) - 1.0 / (2.0 * r)) < 1e-14
        assert abs(abs(pairing(S, u, v)) - r) < 1e-14
        assert abs(abs(f_mean_curvature(S, u, v)) - abs(r / 2.0 - 1.0 / (2.0 * r))) < 1e-14


def test_cylinder_mean_curvature_sympy_oracle():
    u, v, r = sp.symbols("u v r", positive=True)
    X = sp.Matrix([r * sp.cos(v), r * sp.sin(v), u])
    dot = lambda a, b: a[0] * b[0] + a[1] * b[1] - a[2] * b[2]
    Xu, Xv = X.diff(u), X.diff(v)
    w = sp.Matrix([Xu[1] * Xv[2] - Xu[2] * Xv[1], Xu[2] * Xv[0] - Xu[0] * Xv[2], -(Xu[0] * Xv[1] - Xu[1] * Xv[0])])
    N = w / sp.sqrt(sp.simplify(dot(w, w)))
    E, F, G = dot(Xu, Xu), dot(Xu, Xv), dot(Xv, Xv)
    e, f, g = dot(X.diff(u, 2), N), dot(X.diff(u, v), N), dot(X.diff(v, 2), N)
    H = sp.simplify((E * g - 2 * F * f + G * e) / (2 * (E * G - F ** 2)))  # eps = +1, timelike
    Hf = sp.simplify(H + sp.Rational(1, 2) * (X[0] * N[0] + X[1] * N[1]))
    assert f_mean_curvature(cylinder(2.0), 0.1, 0.7) == pytest.approx(float(Hf.subs(r, 2)), abs=1e-14)


def test_spacelike_catenoid_revolution_formula():
    S = profiles.make_surface(profiles.spacelike_catenoid(0.0))
    gp, gpp = profiles.spacelike_gprime(1.0, 0.0), profiles.spacelike_gsecond(1.0, 0.0)
    expected = -0.5 * ((1 - gp * gp) * gp + gpp) / ((1 - gp * gp) ** 1.5)
    assert mean_curvature(S, 1.0, 0.0) == pytest.approx(expected, abs=1e-12)
    assert pairing(S, 1.0, 0.3) == pytest.approx(-gp / math.sqrt(1 - gp * gp), abs=1e-12)


def test_pairing_vanishes_on_axis():
    S = vertical_plane(0.0, 0.4)
    assert abs(pairing(S, 0.0, 2.0)) == 0.0


# -- orientation and symmetry -----------------------------------------------------------

@pytest.mark.parametrize("S", [
    cylinder(2.0),
    vertical_plane(1.0, 0.2),
    profiles.make_surface(profiles.spacelike_catenoid(1.0)),
    profiles.make_surface(profiles.timelike_catenoid(2.0)),
])
def test_orientation_flip_negates(S):
    T = flipped(S)
    for u, v in [(0.7, 0.3), (1.3, 2.0), (-0.9, 4.0)]:
        assert mean_curvature(T, v, u) == pytest.approx(-mean_curvature(S, u, v), abs=1e-12)
        assert pairing(T, v, u) == pytest.approx(-pairing(S, u, v), abs=1e-12)
        assert f_mean_curvature(T, v, u) == pytest.approx(-f_mean_curvature(S, u, v), abs=1e-12)


def _wavy_surface():
    # a generic spacelike graph, no symmetry
    return ParametricSurface(
        lambda u, v: LVec3(u, v, 0.3 * math.sin(u + 0.5 * v) + 0.1 * u * v),
        (-1.0, 1.0), (-1.0, 1.0),
    )


@settings(max_examples=25, deadline=None)
@given(st.floats(0, 2 * math.pi), st.floats(-3, 3), st.floats(-0.9, 0.9), st.floats(-0.9, 0.9))
def test_f_mean_curvature_invariant_under_z_motions(angle, shift, u, v):
    for S in (_wavy_surface(), profiles.make_surface(profiles.timelike_catenoid(2.0))):
        moved = transformed(S, rotation(AxisKind.TIMELIKE_Z, angle), LVec3(0.0, 0.0, shift))
        uu = u + 1.5 if S.periodic_v else u  # keep off the catenoid's axis
        assert abs(f_mean_curvature(moved, uu, v) - f_mean_curvature(S, uu, v)) <= 1e-8


def test_analytic_and_finite_difference_partials_agree():
    # well-conditioned interiors: the catenoids approach the light cone as |u| grows
    cases = [
        (cylinder(1.5), None),
        (vertical_plane(1.0, 0.3), None),
        (profiles.make_surface(profiles.spacelike_catenoid(0.0)), (0.3, 2.5)),
        (profiles.make_surface(profiles.spacelike_catenoid(-2.0)), (0.3, 2.5)),
        (profiles.make_surface(profiles.timelike_catenoid(1.0)), (0.2, 2.0)),
        (profiles.make_surface(profiles.timelike_catenoid(3.1)), (0.1, 0.7)),
        (profiles.make_surface(profiles.timelike_catenoid(3.1, "outer")), (1.4, 2.5)),
    ]
    for S, u_range in cases:
        if u_range:
            S = replace(S, u_range=u_range)
        F = S.without_partials()
        for u, v in S.grid(6, 5):
            assert abs(mean_curvature(S, u, v) - mean_curvature(F, u, v)) <= 1e-6


# -- grids ----------------------------------------------------------------------

def test_grid_excludes_periodic_end():
    pts = cylinder(1.0).grid(3, 4)
    assert len(pts) == 12
    assert max(v for _, v in pts) < 2 * math.pi


def test_max_abs_f_mean_curvature():
    assert max_abs_f_mean_curvature(cylinder(1.0), 8, 8) < 1e-15
    assert max_abs_f_mean_curvature(cylinder(2.0), 8, 8) == pytest.approx(0.75, abs=1e-14)


# -- pairing as a distance --------------------------------------------------------

def test_lemma1_example():
    lhs, rhs = lemma1_distance_identity(LVec3(3, 4, 5), LVec3(0.6, 0.8, 0.0))
    assert lhs == pytest.approx(5.0, abs=1e-14) and rhs == pytest.approx(5.0, abs=1e-12)


@settings(max_examples=200)
@given(st.floats(-5, 5), st.floats(-5, 5), st.floats(-5, 5), st.floats(0, 2 * math.pi), st.floats(-2, 2))
def test_lemma1_random_spacelike_normals(x, y, z, phi, t):
    # unit spacelike normal: (cosh t cos phi, cosh t sin phi, sinh t)
    n = LVec3(math.cosh(t) * math.cos(phi), math.cosh(t) * math.sin(phi), math.sinh(t))
    lhs, rhs = lemma1_distance_identity(LVec3(x, y, z), n)
    assert abs(lhs - rhs) <= 1e-12 * max(1.0, lhs)


def test_lemma1_on_axis():
    lhs, rhs = lemma1_distance_identity(LVec3(0, 0, 2.5), LVec3(0.3, 0.1, 1.05))
    assert lhs == 0.0 and rhs == pytest.approx(0.0, abs=1e-15)


def test_lemma1_matches_surface_pairing():
    S = profiles.make_surface(profiles.timelike_catenoid(1.0))
    rng = np.random.default_rng(3)
    for _ in range(20):
        u, v = rng.uniform(0.2, 2.0), rng.uniform(0, 2 * math.pi)
        n, _ = unit_normal(S, u, v)
        lhs, rhs = lemma1_distance_identity(S(u, v), n)
        assert abs(abs(pairing(S, u, v)) - lhs) < 1e-12 and abs(lhs - rhs) < 1e-10
