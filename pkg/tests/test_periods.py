import math
import numpy as np
import pytest
from scipy.optimize import brentq
from kleinspec.core import Params, SQRT3_2, SQRT3_8, DomainError, DivergenceError, OutOfRange, RATIO_WINDOW
from kleinspec.elliptic import complete_elliptic_pi
from kleinspec.geometry import dpoly_P
from kleinspec.dopri import dopri5
from kleinspec.periods import *


def test_hyperbola_periods():
    "Tu = 0.8 Π(0.4, 0.25) and Tv = 8π/(3√10) at p = √(3/8)"
    pr = Params(SQRT3_8)
    np.testing.assert_allclose(period_u(pr), .8*complete_elliptic_pi(.4, .25), rtol=1e-10)
    assert period_v(pr) == TV_HYPERBOLA
    np.testing.assert_allclose(TV_HYPERBOLA, 2.649242, atol=1e-6)
    np.testing.assert_allclose(ratio(pr).R, 1.508, atol=1e-3)


@pytest.mark.parametrize('s', [-1, 1])
def test_tv_continuous_at_hyperbola(s):
    np.testing.assert_allclose(period_v(Params(math.sqrt(.375 + s*1e-7))), TV_HYPERBOLA, atol=1e-4)


def test_circle_period():
    "u is constant 1/2 at p = 1 and Tu is its small-oscillation period"
    np.testing.assert_allclose(period_u(Params(1.)), math.pi/math.sqrt(5), rtol=1e-12)


def test_decay_point_diverges():
    pr = Params(SQRT3_2)
    for fn in (period_u, period_v, ratio, moments):
        with pytest.raises(DivergenceError): fn(pr)


@pytest.mark.parametrize('p', np.linspace(.1, .8, 50))
def test_quadrature_oracle(p):
    "tanh-sinh production rules against the θ-substituted Gauss-Chebyshev rule"
    pr = Params(p)
    np.testing.assert_allclose(period_u(pr), period_u(pr, 'chebyshev'), rtol=1e-9)
    np.testing.assert_allclose(period_v(pr), period_v(pr, 'chebyshev'), rtol=1e-9)


@pytest.mark.parametrize('p', [.9, .95])
def test_periods_above_decay(p):
    pr = Params(p)
    np.testing.assert_allclose(period_u(pr), period_u(pr, 'chebyshev'), rtol=1e-9)
    np.testing.assert_allclose(period_v(pr), period_v(pr, 'chebyshev'), rtol=1e-9)


def test_tv_exceeds_tu():
    rows = tabulate(np.linspace(.05, SQRT3_2 - .05, 40))
    assert all(r.ok and 0 < r.Tu < r.Tv for r in rows)


@pytest.mark.parametrize('p', [.2, .4, .5, .7, .8])
def test_tu_matches_separated_ode(p):
    "period of ü = P'(u)/2 started at rest at u = 0"
    pr = Params(p)
    Tu = period_u(pr)
    sol = dopri5(lambda t, x: np.array([x[1], .5*dpoly_P(x[0], pr)]), 0., [0., 0.], 1.25*Tu, rtol=1e-12, atol=1e-12)
    t = np.linspace(1e-3, 1.25*Tu, 2001)
    du = sol(t)[:, 1]
    i = np.nonzero(np.sign(du[1:]) != np.sign(du[:-1]))[0]
    assert len(i) == 2
    T = brentq(lambda s: sol(s)[1], t[i[1]], t[i[1] + 1], xtol=1e-14)
    np.testing.assert_allclose(T, Tu, atol=1e-6)


def test_asymptotics_near_zero():
    "half periods grow like -⅔ ln p and -ln p"
    pr = Params(1e-4)
    lp = math.log(1e-4)
    assert .9 <= (period_u(pr)/2)/(-2/3*lp) <= 1.1
    assert .9 <= (period_v(pr)/2)/(-lp) <= 1.1
    a = asymptotic(pr)
    assert a['end'] == 0. and a['Tu'] == pytest.approx(-4/3*lp) and a['Tv'] == pytest.approx(-2*lp)
    assert abs(ratio(Params(1e-6)).R - 1.5) <= .05


def test_asymptotics_near_decay():
    eps = 1e-6
    pr = Params(SQRT3_2 - eps)
    assert .9 <= period_u(pr)/(-2/3*math.log(eps)) <= 1.1
    assert .9 <= period_v(pr)/(-math.log(eps)) <= 1.1
    assert asymptotic(pr)['end'] == SQRT3_2
    assert abs(ratio(pr).R - 1.5) <= .05


def test_tabulate_keeps_order_and_failures():
    rows = tabulate([.3, SQRT3_8, SQRT3_2])
    assert [r.p for r in rows] == [.3, SQRT3_8, SQRT3_2]
    assert rows[0].ok and rows[1].ok
    assert not rows[2].ok and 'DivergenceError' in rows[2].error and math.isnan(rows[2].R)
    assert tabulate([]) == []
    rr = ratio_range(rows)
    assert rr['min'] <= rr['max'] and {rr['p_min'], rr['p_max']} == {.3, SQRT3_8}
    with pytest.raises(DomainError): ratio_range(rows[2:])


def test_rational_target():
    t = RationalTarget.parse('3/2')
    assert (t.q, t.m, t.value, str(t)) == (3, 2, 1.5, '3/2')
    for bad in ('4/2', '2/3', '3/1', 'abc', '3/'):
        with pytest.raises(DomainError): RationalTarget.parse(bad)


def test_find_p_outside_window():
    "44/29 ≈ 1.5172 lies above the ratio window"
    with pytest.raises(OutOfRange): find_p_for_ratio(RationalTarget(44, 29))


@pytest.mark.slow
def test_ratio_window_sweep():
    rows = tabulate(np.arange(.05, SQRT3_2 - .05, 1e-3))
    rr = ratio_range(rows)
    assert all(r.ok for r in rows)
    assert RATIO_WINDOW[0] <= rr['min'] and rr['max'] <= RATIO_WINDOW[1]


@pytest.mark.slow
def test_find_p_three_halves():
    ps = find_p_for_ratio(RationalTarget(3, 2))
    assert len(ps) >= 1 and all(0 < p < SQRT3_2 for p in ps)
    for p in ps: assert abs(ratio(Params(p)).R - 1.5) <= 1e-11
