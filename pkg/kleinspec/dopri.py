"""Dormand-Prince 5(4) integrator with continuous (dense) output"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../nbs/03_dopri.ipynb.

# %% auto #0
__all__ = ['DenseSolution', 'dopri5']

# %% ../nbs/03_dopri.ipynb #1a7e0c44
import math, sys
import numpy as np
from fastcore.all import store_attr
from .core import IntegrationError

# %% ../nbs/03_dopri.ipynb #5d92bf1e
_C = np.array([0, 1/5, 3/10, 4/5, 8/9, 1, 1])
_A = [[],
      [1/5],
      [3/40, 9/40],
      [44/45, -56/15, 32/9],
      [19372/6561, -25360/2187, 64448/6561, -212/729],
      [9017/3168, -355/33, 46732/5247, 49/176, -5103/18656],
      [35/384, 0, 500/1113, 125/192, -2187/6784, 11/84]]
_B = np.array(_A[6] + [0])
_E = np.array([71/57600, 0, -71/16695, 71/1920, -17253/339200, 22/525, -1/40])
# dense output weights of the continuous extension
_D = np.array([-12715105075/11282082432, 0, 87487479700/32700410799, -10690763975/1880347072,
               701980252875/199316789632, -1453857185/822651844, 69997945/29380423])

# %% ../nbs/03_dopri.ipynb #c3e8b570
class DenseSolution:
    'Accepted steps of a DOPRI5 run with the coefficients of its continuous extension'
    def __init__(self, t, y, cont):
        store_attr()
        self.direction = 1. if t[-1] >= t[0] else -1.

    def __len__(self): return len(self.t)

    def __call__(self, tq):
        'State at time(s) `tq` inside the integrated span; shape (..., dim)'
        tq = np.asarray(tq, dtype=float)
        d = self.direction
        i = np.clip(np.searchsorted(d*self.t, d*tq, side='right') - 1, 0, len(self.t) - 2)
        h = self.t[i + 1] - self.t[i]
        th = ((tq - self.t[i])/h)[..., None]
        r = self.cont[i]
        return r[..., 0, :] + th*(r[..., 1, :] + (1 - th)*(r[..., 2, :] + th*(r[..., 3, :] + (1 - th)*r[..., 4, :])))

# %% ../nbs/03_dopri.ipynb #8b4f2d19
def _norm(x): return math.sqrt(float(np.mean(x*x)))

def dopri5(f, t0:float, y0, t_end:float, rtol:float=1e-10, atol:float=1e-10, h0:float=None, max_steps:int=2_000_000):
    'Integrate y\' = f(t, y) from t0 to t_end (either direction); returns a `DenseSolution`'
    y = np.array(y0, dtype=float)
    span = t_end - t0
    if span == 0: raise ValueError('empty integration span')
    d = math.copysign(1., span)
    k = np.empty((7, y.size))
    k[0] = f(t0, y)
    if h0 is None:
        sc = atol + rtol*np.abs(y)
        d0, d1 = _norm(y/sc), _norm(k[0]/sc)
        h0 = .01*d0/d1 if d0 > 1e-5 and d1 > 1e-5 else 1e-6
    h = d*min(abs(h0), abs(span))
    t, ts, ys, conts = t0, [t0], [y.copy()], []
    for _ in range(max_steps):
        last = d*(t + h - t_end) >= 0
        if last: h = t_end - t
        for s in range(1, 7): k[s] = f(t + _C[s]*h, y + h*(np.dot(_A[s], k[:s])))
        ynew = y + h*(_B @ k)
        err = _norm(h*(_E @ k)/(atol + rtol*np.maximum(np.abs(y), np.abs(ynew))))
        if err <= 1:
            dy = ynew - y
            bspl = h*k[0] - dy
            conts.append(np.stack([y, dy, bspl, dy - h*k[6] - bspl, h*(_D @ k)]))
            t = t_end if last else t + h
            y = ynew
            k[0] = k[6]
            ts.append(t); ys.append(y.copy())
            if last: return DenseSolution(np.array(ts), np.array(ys), np.array(conts))
            fac = min(10., .9*err**-.2) if err > 0 else 10.
        else: fac = max(.2, .9*err**-.2)
        h *= fac
        if abs(h) < 16*sys.float_info.epsilon*max(abs(t), 1.): raise IntegrationError('step size underflow', t)
    raise IntegrationError(f'step budget of {max_steps} exhausted', t)
