import math
import numpy as np
import pytest
from scipy.special import ellipk, ellipe, elliprf, elliprj
from scipy.integrate import quad
from kleinspec.core import DomainError, DivergenceError
from kleinspec.elliptic import *


@pytest.mark.parametrize('m', [0., .1, .25, .5, 8/9, .99, .999999])
def test_k_e_match_scipy(m):
    np.testing.assert_allclose(ellip_k(m), ellipk(m), rtol=1e-13)
    np.testing.assert_allclose(ellip_e(m), ellipe(m), rtol=1e-13)
    assert complete_elliptic(m) == (ellip_k(m), ellip_e(m))


def test_ends_of_parameter_range():
    "K diverges at m = 1 while E(1) = 1; m outside [0, 1] is rejected"
    assert ellip_e(1.) == 1.
    assert ellip_k(0.) == pytest.approx(math.pi/2, abs=1e-15)
    with pytest.raises(DivergenceError): ellip_k(1.)
    for bad in (-.1, 1.1):
        with pytest.raises(DomainError): ellip_e(bad)


def test_parameter_from_modulus():
    assert parameter(2*math.sqrt(2)/3) == pytest.approx(8/9, abs=1e-15)


@pytest.mark.parametrize('fn,args,expected', [
    (carlson_rf, (1., 2., 0.), 1.3110287771461),
    (carlson_rf, (2., 3., 4.), 0.58408284167715),
    (carlson_rc, (0., .25), math.pi),
    (carlson_rc, (2.25, 2.), math.log(2)),
    (carlson_rj, (0., 1., 2., 3.), 0.77688623778582),
    (carlson_rj, (2., 3., 4., 5.), 0.14297579667157),
])
def test_carlson_reference_values(fn, args, expected):
    np.testing.assert_allclose(fn(*args), expected, rtol=1e-12)


@pytest.mark.parametrize('n,m', [(.4, .25), (-.5, .3), (.9, .5), (.2, .95)])
def test_pi_against_quadrature(n, m):
    "Π(n, m) against direct integration of its definition"
    ref, _ = quad(lambda t: 1/((1 - n*math.sin(t)**2)*math.sqrt(1 - m*math.sin(t)**2)), 0, math.pi/2,
                  epsabs=0, epsrel=1e-13, limit=200)
    np.testing.assert_allclose(complete_elliptic_pi(n, m), ref, rtol=1e-12)


def test_pi_reduces_to_k():
    ms = np.linspace(0., .99, 100)
    np.testing.assert_allclose([complete_elliptic_pi(0., m) for m in ms], [ellip_k(m) for m in ms], rtol=1e-13)
    with pytest.raises(DomainError): complete_elliptic_pi(1., .3)


def test_target_constant():
    "λ1·A of the extremal metric is 12πE(2√2/3) ≈ 13.365π"
    t = target_constant()
    np.testing.assert_allclose(t, 12*math.pi*ellipe(8/9), rtol=1e-13)
    np.testing.assert_allclose(t, 41.98705, atol=2e-5)
    np.testing.assert_allclose(t/math.pi, 13.365, rtol=1e-4)


def test_carlson_against_scipy():
    "R_F and R_J against scipy on a spread of arguments, one of them zero in half the cases"
    rng = np.random.default_rng(7)
    for _ in range(50):
        x, y, z, p = rng.uniform(.01, 10., 4)
        if rng.random() < .5: x = 0.
        np.testing.assert_allclose(carlson_rf(x, y, z), elliprf(x, y, z), rtol=1e-13)
        np.testing.assert_allclose(carlson_rj(x, y, z, p), elliprj(x, y, z, p), rtol=1e-12)


@pytest.mark.parametrize('n,m', [(.4, .25), (-.5, .3), (.9, .5), (.2, .95), (-3., .7)])
def test_pi_carlson_form(n, m):
    "Π(n, m) = R_F(0, 1-m, 1) + (n/3) R_J(0, 1-m, 1, 1-n)"
    ref = elliprf(0., 1 - m, 1.) + n/3*elliprj(0., 1 - m, 1., 1 - n)
    np.testing.assert_allclose(complete_elliptic_pi(n, m), ref, rtol=1e-13)


def test_k_e_monotone():
    "K increases and E decreases strictly in m, with K ≥ π/2 ≥ E"
    ms = np.linspace(0., 1 - 1e-6, 2001)
    k, e = np.array([ellip_k(m) for m in ms]), np.array([ellip_e(m) for m in ms])
    assert np.all(np.diff(k) > 0) and np.all(np.diff(e) < 0)
    assert k.min() == pytest.approx(math.pi/2) and e.max() == pytest.approx(math.pi/2)
    assert np.all(e[1:] < k[1:])
