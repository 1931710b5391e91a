"""Quadrature for integrands with inverse-square-root endpoint singularities"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../nbs/02_quad.ipynb.

# %% auto #0
__all__ = ['tanh_sinh', 'gauss_chebyshev', 'periodic_mean']

# %% ../nbs/02_quad.ipynb #4c2e9a71
import math
import numpy as np
from .core import AccuracyError

# %% ../nbs/02_quad.ipynb #b8d31f06
_PI_2 = math.pi/2

def _ts_nodes(t, a, w):
    u = _PI_2*np.sinh(t)
    dl = w/(1 + np.exp(-2*u))
    dr = w/(1 + np.exp(2*u))
    x = np.where(u < 0, a + dl, a + w - dr)
    return x, dl, dr, _PI_2*np.cosh(t)/np.cosh(u)**2*(w/2)

def tanh_sinh(f, a:float, b:float, rtol:float=1e-14, max_level:int=12, tmax:float=4.5):
    '''Integrate `f(x, x-a, b-x)` over [a, b] by tanh-sinh levels; returns (value, error estimate).

    `f` receives the distances to both ends as separate arrays, so factors vanishing at an endpoint
    can be evaluated without cancellation.'''
    if b < a: raise ValueError(f'need a <= b, got [{a!r}, {b!r}]')
    w = b - a
    if w == 0: return 0., 0.
    h = 1.
    x, dl, dr, wt = _ts_nodes(np.arange(-math.floor(tmax), math.floor(tmax) + 1, dtype=float), a, w)
    s = np.sum(f(x, dl, dr)*wt)
    val, err = h*s, math.inf
    for lvl in range(1, max_level + 1):
        h /= 2
        k = np.arange(1, math.floor(tmax/h) + 1, 2, dtype=float)
        t = np.concatenate([-k[::-1], k])*h
        x, dl, dr, wt = _ts_nodes(t, a, w)
        s += np.sum(f(x, dl, dr)*wt)
        new = h*s
        err = abs(new - val)
        val = new
        if lvl >= 3 and err <= rtol*abs(val): return val, err
    raise AccuracyError(f'tanh-sinh did not reach rtol={rtol!r} on [{a!r}, {b!r}] (last change {err!r})')

# %% ../nbs/02_quad.ipynb #0f6a7d25
def gauss_chebyshev(g, n:int=64, rtol:float=1e-13, max_n:int=2**20):
    'Integrate a smooth `g(θ)` over [0, π] with midpoint (Gauss-Chebyshev) nodes, doubling n until stable'
    def _rule(n):
        th = (np.arange(n) + .5)*(math.pi/n)
        return math.pi/n*np.sum(g(th))
    val = _rule(n)
    while n < max_n:
        n *= 2
        new = _rule(n)
        err = abs(new - val)
        val = new
        if err <= rtol*abs(val): return val, err
    raise AccuracyError(f'Gauss-Chebyshev did not converge with {n} nodes')

def periodic_mean(vals) -> float:
    'Mean over one period of uniformly spaced samples, endpoint excluded (spectral trapezoid)'
    return float(np.mean(np.asarray(vals, dtype=float)))
