"""Shared parameter and state types, error classes, numerical defaults and env configuration"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../nbs/00_core.ipynb.

# %% auto #0
__all__ = ['SQRT3_2', 'SQRT3_8', 'DEFAULT_TOL', 'DEFAULT_GRID', 'K_MAX', 'PROFILE_SAMPLES', 'SCAN_STEP', 'RATIO_WINDOW',
           'SPECIAL_TOL', 'DomainError', 'DivergenceError', 'ConstraintError', 'OutOfRange', 'IntegrationError',
           'AccuracyError', 'Params', 'State', 'n_workers', 'fmt_float']

# %% ../nbs/00_core.ipynb #3b1f0c7d
import os, math
from typing import NamedTuple
import numpy as np
from fastcore.all import store_attr, basic_repr

# %% ../nbs/00_core.ipynb #9e2d41aa
SQRT3_2 = math.sqrt(3)/2
SQRT3_8 = math.sqrt(3/8)

DEFAULT_TOL = 1e-12
DEFAULT_GRID = 1024
K_MAX = 4
PROFILE_SAMPLES = 4096
SCAN_STEP = 1e-3
RATIO_WINDOW = (1.4795, 1.5088)
SPECIAL_TOL = 1e-9

# %% ../nbs/00_core.ipynb #c07a5e16
class DomainError(ValueError):
    'Argument outside the domain of an operation'

class DivergenceError(DomainError):
    'Requested quantity is infinite at this argument'

class ConstraintError(ValueError):
    'State violates an algebraic constraint (energy surface, non-negative radicand)'

class OutOfRange(ValueError):
    'Rational target outside the certified ratio window'

class IntegrationError(RuntimeError):
    'Adaptive integration failed; `y` is the last accepted time'
    def __init__(self, msg, y):
        super().__init__(f'{msg} at y={y!r}')
        self.y = y

class AccuracyError(RuntimeError):
    'Grid refinement did not converge'

# %% ../nbs/00_core.ipynb #51f0e6b2
class Params:
    'Initial value p = φ2(0) = φ1\'(0)/2 of the ODE system, 0 < p ≤ 1'
    def __init__(self, p:float):
        p = float(p)
        if not 0 < p <= 1: raise DomainError(f'p must lie in (0, 1], got {p!r}')
        store_attr()
    __repr__ = basic_repr('p')
    def __eq__(self, o): return isinstance(o, Params) and o.p == self.p
    def __hash__(self): return hash(self.p)

    @property
    def p2(self): return self.p*self.p
    @property
    def K(self):
        'Common value of both first integrals on this solution'
        return -4*self.p2*(3 - 4*self.p2)
    @property
    def is_hyperbola(self):
        'p = √(3/8): v is constant and the orbit lies on a hyperbola'
        return abs(3 - 8*self.p2) < SPECIAL_TOL
    @property
    def is_decay(self):
        'p = √3/2: the solution decays to the origin along an ellipse'
        return abs(self.p - SQRT3_2) < SPECIAL_TOL
    @property
    def is_circle(self): return self.p == 1.

# %% ../nbs/00_core.ipynb #e8a03d94
class State(NamedTuple):
    'Point (y, φ1, φ2, φ1\', φ2\') of the ODE system; fields may be arrays of equal shape'
    y: float
    phi1: float
    phi2: float
    dphi1: float
    dphi2: float

    @property
    def vec(self): return np.array([self.phi1, self.phi2, self.dphi1, self.dphi2], dtype=float)

# %% ../nbs/00_core.ipynb #7d6c3b20
def n_workers():
    'Worker count for grid sweeps, from `KLEIN_NUM_THREADS` (default: all processors)'
    v = os.environ.get('KLEIN_NUM_THREADS')
    if v is None or not v.strip(): return os.cpu_count() or 1
    n = int(v)
    if n < 0: raise DomainError(f'KLEIN_NUM_THREADS must be >= 0, got {v!r}')
    return 0 if n == 1 else n

def fmt_float(x) -> str:
    'Shortest round-trip text for a float (at most 17 significant digits)'
    return repr(float(x))
