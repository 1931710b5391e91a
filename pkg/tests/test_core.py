import math, os
import numpy as np
import pytest
from kleinspec.core import *


def test_params_domain():
    "p must lie in (0, 1]"
    for bad in (0., -.1, 1.0001, math.nan):
        with pytest.raises(DomainError): Params(bad)
    assert Params(1).p == 1.


def test_params_special_points():
    "hyperbola, decay and circle flags"
    assert Params(SQRT3_8).is_hyperbola and not Params(.6).is_hyperbola
    assert Params(SQRT3_2).is_decay and not Params(.86).is_decay
    assert Params(1.).is_circle and not Params(.99).is_circle


@pytest.mark.parametrize('p', [.1, .5, SQRT3_8, .9, 1.])
def test_params_K(p):
    "K = -4p²(3-4p²)"
    assert Params(p).K == pytest.approx(-4*p*p*(3 - 4*p*p), abs=1e-15)


def test_error_hierarchy():
    "usage errors are ValueError, numerical failures RuntimeError"
    assert issubclass(DivergenceError, DomainError) and issubclass(DomainError, ValueError)
    assert issubclass(OutOfRange, ValueError) and issubclass(ConstraintError, ValueError)
    e = IntegrationError('step size underflow', 1.5)
    assert isinstance(e, RuntimeError) and e.y == 1.5 and '1.5' in str(e)


def test_state_vec():
    st = State(0., 1., 2., 3., 4.)
    np.testing.assert_array_equal(st.vec, [1., 2., 3., 4.])


def test_n_workers(monkeypatch):
    "KLEIN_NUM_THREADS: unset means all processors, 1 means serial"
    monkeypatch.delenv('KLEIN_NUM_THREADS', raising=False)
    assert n_workers() == (os.cpu_count() or 1)
    monkeypatch.setenv('KLEIN_NUM_THREADS', '1')
    assert n_workers() == 0
    monkeypatch.setenv('KLEIN_NUM_THREADS', '3')
    assert n_workers() == 3
    monkeypatch.setenv('KLEIN_NUM_THREADS', '-2')
    with pytest.raises(DomainError): n_workers()


@pytest.mark.parametrize('x', [.1, 1/3, math.pi, 1e-300, -2.5e17, 2.])
def test_fmt_float_round_trips(x):
    s = fmt_float(x)
    assert float(s) == x and len(s.replace('-', '').replace('.', '').split('e')[0]) <= 17
