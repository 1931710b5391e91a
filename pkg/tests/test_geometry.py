import math
import numpy as np
import pytest
from types import SimpleNamespace
from kleinspec.core import Params, State, SQRT3_2, SQRT3_8, DomainError, ConstraintError
from kleinspec.odecore import integrate
from kleinspec.geometry import *


def test_poly_P_roots_and_value():
    pr = Params(.5)
    for r in roots_P(pr): assert poly_P(r, pr) == pytest.approx(0., abs=1e-15)
    assert poly_P(.25, pr) == pytest.approx(0.8203125, abs=1e-15)
    assert poly_Q(.25, pr) == pytest.approx(0.3515625, abs=1e-15)
    assert poly_Q(0., pr) == 0. and poly_Q(.5, pr) == 0.


@pytest.mark.parametrize('p', [.3, .5, .9])
def test_dpoly_P_matches_difference(p):
    pr, h = Params(p), 1e-6
    s = np.linspace(-1.4, .45, 9)
    fd = (poly_P(s + h, pr) - poly_P(s - h, pr))/(2*h)
    np.testing.assert_allclose(dpoly_P(s, pr), fd, atol=1e-7)
    assert isinstance(dpoly_P(.1, pr), float)


def _on_shell_points(p, n, seed=0):
    "φ from random (u, v) in the closed intervals"
    pr = Params(p)
    iv = intervals(pr)
    rng = np.random.default_rng(seed)
    u, v = rng.uniform(*iv.I1, n), rng.uniform(*iv.I2, n)
    phi1 = np.sqrt(-4/3*u*v)
    phi2 = np.sqrt((3 + 2*u)*(3 + 2*v)/12)
    return pr, u, v, phi1, phi2


@pytest.mark.parametrize('p', [.4, .7, .9])
def test_quadrics_split_into_line_factors(p):
    pr, u, v, phi1, phi2 = _on_shell_points(p, 1000)
    q = quadrics(phi1, phi2, pr)
    for w, lf in zip(q[:3], line_factors(u, v, pr)): np.testing.assert_allclose(w, lf, atol=1e-12)
    np.testing.assert_allclose(q.delta, 16/9*poly_P(u, pr)*poly_P(v, pr), atol=1e-12)


def test_quadrics_special_curves():
    "unit circle kills w1, the hyperbola makes w3 + 4w2 vanish, the axis kills Δ"
    pr = Params(SQRT3_8)
    t = np.linspace(0, 2*np.pi, 100)
    assert np.max(np.abs(quadrics(np.cos(t), np.sin(t), pr).w1)) < 1e-15
    x = np.linspace(-2, 2, 100)
    q = quadrics(x, np.sqrt((x*x + 1.5)/4), pr)
    np.testing.assert_allclose(q.w3 + 4*q.w2, 0., atol=1e-12)
    assert quadrics(0., .7, Params(.5)).delta == 0.


@pytest.mark.parametrize('p,I1,I2', [
    (.5, (0., .5), (-1., -.5)),
    (.7, (0., .5), (-.98, -.52)),
    (.9, (.12, .5), (-1.5, 0.)),
    (1., (.5, .5), (-1.5, 0.)),
])
def test_intervals(p, I1, I2):
    iv = intervals(Params(p))
    np.testing.assert_allclose(iv.I1, I1, atol=1e-15)
    np.testing.assert_allclose(iv.I2, I2, atol=1e-15)
    assert iv.disjoint


def test_intervals_disjoint_everywhere():
    for p in np.linspace(.001, 1., 1000):
        if not Params(p).is_decay: assert intervals(Params(p)).disjoint
    with pytest.raises(DomainError): intervals(Params(SQRT3_2))


@pytest.mark.parametrize('p', [.5, .9])
def test_to_parabolic_initial_point(p):
    pr = Params(p)
    ps = to_parabolic(State(0., 0., p, 2*p, 0.), pr)
    np.testing.assert_allclose(ps[:4], (0., 2*p*p - 1.5, 0., 0.) if p < SQRT3_2 else (2*p*p - 1.5, 0., 0., 0.),
                               atol=1e-15)


def test_to_parabolic_rejects_off_shell():
    with pytest.raises(ConstraintError): to_parabolic(State(0., 0., .5, 1.1, 0.), Params(.5))
    assert to_parabolic(State(0., 0., .5, 1.1, 0.), Params(.5), check=False).u == pytest.approx(0., abs=1e-15)


def test_from_parabolic_point_A():
    pr = Params(SQRT3_8)
    st = from_parabolic(ParabolicState(.5, -.75, 0., 0.), pr)
    np.testing.assert_allclose((st.phi1, st.phi2), (1/math.sqrt(2), 1/math.sqrt(2)), atol=1e-15)
    with pytest.raises(ConstraintError): from_parabolic(ParabolicState(-.8, -.5, 0., 0.), pr)


@pytest.mark.parametrize('p', [.3, .5, .7])
def test_round_trip_on_shell(p):
    "state -> (u, v) -> state -> (u, v) on random trajectory points"
    pr = Params(p)
    tr = integrate(pr, 12.)
    y = np.random.default_rng(1).uniform(.01, 12., 334)
    st = tr(y)
    ps = to_parabolic(st, pr)
    back = from_parabolic(ps, pr)
    for a, b in zip((st.phi1, st.phi2, st.dphi1, st.dphi2), (back.phi1, back.phi2, back.dphi1, back.dphi2)):
        np.testing.assert_allclose(a, b, atol=1e-10)
    ps2 = to_parabolic(back, pr)
    for a, b in zip(ps[:4], ps2[:4]): np.testing.assert_allclose(a, b, atol=1e-10)


@pytest.mark.parametrize('p', [.3, .5, .7])
def test_separated_motion(p):
    "u̇² = P(u) and v̇² = P(v) along a trajectory, with u and v inside their intervals"
    pr = Params(p)
    path = parabolic_path(integrate(pr, 10., n_dense=2001))
    np.testing.assert_allclose(path.du**2, poly_P(path.u, pr), atol=1e-7)
    np.testing.assert_allclose(path.dv**2, poly_P(path.v, pr), atol=1e-7)
    iv = intervals(pr)
    assert np.all(path.u >= iv.alpha0 - 1e-9) and np.all(path.u <= .5 + 1e-9)
    assert np.all(path.v >= iv.a0 - 1e-9) and np.all(path.v <= iv.a1 + 1e-9)
    assert path.tau[0] == 0. and np.all(np.diff(path.tau) > 0)


def test_hyperbola_keeps_v_fixed():
    pr = Params(SQRT3_8)
    path = parabolic_path(integrate(pr, 10., n_dense=501))
    np.testing.assert_allclose(path.v, -.75, atol=1e-8)


def test_accel0_values():
    np.testing.assert_allclose(accel0(Params(.5)), (1.5, 1.5), rtol=1e-15)
    assert accel0(Params(SQRT3_8))[1] == pytest.approx(0., abs=1e-14)
    assert accel0(Params(1.))[0] == pytest.approx(0., abs=1e-15)
    with pytest.raises(DomainError): accel0(Params(SQRT3_2))


@pytest.mark.parametrize('p', [.3, .5, .9])
def test_accel0_matches_polynomial(p):
    "y-acceleration at rest is P'(s)/2/(u-v)²"
    pr = Params(p)
    u0, v0 = (0., 2*p*p - 1.5) if p < SQRT3_2 else (2*p*p - 1.5, 0.)
    w2 = (u0 - v0)**2
    np.testing.assert_allclose(accel0(pr), (dpoly_P(u0, pr)/2/w2, dpoly_P(v0, pr)/2/w2), rtol=1e-12, atol=1e-14)


@pytest.mark.parametrize('p', [.5, .7])
def test_accel0_matches_trajectory(p):
    "second differences of the even functions u(y), v(y) at 0, Richardson-extrapolated over two steps"
    pr, h = Params(p), 2e-3
    tr = integrate(pr, .01, tol=1e-13)
    a = to_parabolic(tr(0.), pr)
    def d2(h):
        b = to_parabolic(tr(h), pr)
        return np.array([2*(b.u - a.u)/h**2, 2*(b.v - a.v)/h**2])
    np.testing.assert_allclose((4*d2(h/2) - d2(h))/3, accel0(pr), atol=1e-5)


def test_critical_points():
    cp = critical_points(Params(SQRT3_8))
    np.testing.assert_allclose(cp['A'], (1/math.sqrt(2), 1/math.sqrt(2)), atol=1e-15)
    np.testing.assert_allclose(cp['B'], cp['A'], atol=1e-15)
    pr = Params(.5)
    for x, y in critical_points(pr).values(): assert abs(quadrics(x, y, pr).delta) < 1e-14
    with pytest.raises(DomainError): critical_points(Params(.9))


def test_midpoint_shape():
    pr = Params(SQRT3_8)
    m = midpoint_shape(pr, SimpleNamespace(q=1, m=0))
    assert m['name'] == 'A'
    np.testing.assert_allclose((m['phi1'], m['phi2']), (1/math.sqrt(2), 1/math.sqrt(2)), atol=1e-15)
    pr = Params(.6)
    m = midpoint_shape(pr, SimpleNamespace(q=3, m=2))
    assert m['name'] == 'B' and m['u'] == .5
    np.testing.assert_allclose((m['phi1'], m['phi2']), (-math.sqrt(1 - 4*.36/3), 1.2/math.sqrt(3)), atol=1e-15)
    assert midpoint_shape(pr, SimpleNamespace(q=2, m=3))['name'] == 'axis'


def test_trajectory_parabolic_method():
    tr = integrate(Params(.5), 4., n_dense=101)
    a, b = tr.parabolic(), parabolic_path(tr)
    for x, y in zip(a, b): np.testing.assert_array_equal(x, y)
