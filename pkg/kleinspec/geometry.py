"""Quadrics, the parabolic change of variables (u, v), the intervals they move in, and critical points"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../nbs/05_geometry.ipynb.

# %% auto #0
__all__ = ['QuadricValues', 'ParabolicState', 'IntervalData', 'roots_P', 'poly_P', 'dpoly_P', 'poly_Q', 'quadrics',
           'line_factors', 'intervals', 'to_parabolic', 'from_parabolic', 'parabolic_path', 'accel0', 'critical_points',
           'midpoint_shape']

# %% ../nbs/05_geometry.ipynb #2b6f0e1d
import math
from typing import NamedTuple
import numpy as np
from scipy.integrate import cumulative_trapezoid
from fastcore.all import store_attr, basic_repr, patch
from .core import Params, State, DomainError, ConstraintError, SQRT3_2
from .odecore import Trajectory, first_integrals, potential

# %% ../nbs/05_geometry.ipynb #61c9a4b0
_CLAMP = 1e-12
_ON_SHELL = 1e-8
_NEAR_AXIS = 1e-4

class QuadricValues(NamedTuple):
    'Quadrics w1..w4 at (φ1, φ2) and the discriminant Δ = -64 φ1² φ2² w1 w2 w3'
    w1: float
    w2: float
    w3: float
    w4: float
    delta: float

class ParabolicState(NamedTuple):
    'Parabolic coordinates, their τ-derivatives, τ, and the signs of φ1 and φ2 needed to invert'
    u: float
    v: float
    du: float
    dv: float
    tau: float = 0.
    sign1: float = 1.
    sign2: float = 1.

class IntervalData:
    'u moves in I1 = [alpha0, 1/2], v in I2 = [a0, a1]'
    def __init__(self, alpha0, a0, a1): store_attr()
    __repr__ = basic_repr('alpha0,a0,a1')
    @property
    def I1(self): return (self.alpha0, .5)
    @property
    def I2(self): return (self.a0, self.a1)
    @property
    def disjoint(self): return self.a1 < self.alpha0

# %% ../nbs/05_geometry.ipynb #c8e3d217
def roots_P(params:Params) -> tuple:
    'The five roots of P: 0, 1/2, -3/2, -2p², 2p²-3/2 (P = -8 ∏(s - r))'
    p2 = params.p2
    return 0., .5, -1.5, -2*p2, 2*p2 - 1.5

def poly_P(s, params:Params):
    'P(s) = s (1-2s) (3+2s) (2p²+s) (3-4p²+2s)'
    p2 = params.p2
    return s*(1 - 2*s)*(3 + 2*s)*(2*p2 + s)*(3 - 4*p2 + 2*s)

def dpoly_P(s, params:Params):
    'P\'(s), so that ü = P\'(u)/2 along the separated motion'
    s = np.asarray(s, dtype=float)
    d = s - np.array(roots_P(params))[:, None] if s.ndim else s - np.array(roots_P(params))
    tot = sum(np.prod(np.delete(d, i, axis=0), axis=0) for i in range(5))
    return -8*tot if s.ndim else float(-8*tot)

def poly_Q(r, params:Params):
    'P on I2 pulled back by s = (3-8p²) r + 2p² - 3/2, divided by (3-8p²)²; smooth through p = √(3/8)'
    p2 = params.p2
    c = 3 - 8*p2
    return 2*r*(1 - 2*r)*(2*p2 + c*r)*(1.5 - 2*p2 - c*r)*(4 - 4*p2 - 2*c*r)

# %% ../nbs/05_geometry.ipynb #7a90c4f2
def quadrics(phi1, phi2, params:Params) -> QuadricValues:
    p2 = params.p2
    b = 3 - 4*p2
    f1, f2 = phi1*phi1, phi2*phi2
    w1 = f1 + f2 - 1
    w2 = p2*f1 - b*f2 + p2*b
    w3 = -b*f1 + 16*p2*f2 - 4*p2*b
    w4 = (f1 + 4*f2)**2 - 12*f2
    return QuadricValues(w1, w2, w3, w4, -64*f1*f2*w1*w2*w3)

def line_factors(u, v, params:Params) -> tuple:
    '(w1, w2, w3) written in parabolic coordinates, each a product of one factor in u and one in v'
    p2 = params.p2
    return (-.25*(1 - 2*u)*(1 - 2*v), -(1.5 - 2*p2 + u)*(1.5 - 2*p2 + v), 4*(2*p2 + u)*(2*p2 + v))

def intervals(params:Params) -> IntervalData:
    p2 = params.p2
    if params.is_decay: raise DomainError('I1 and I2 touch at p = √3/2')
    if p2 < .75: alpha0 = 0.
    else: alpha0 = 2*p2 - 1.5
    if p2 <= .375: a0, a1 = 2*p2 - 1.5, -2*p2
    elif p2 < .75: a0, a1 = -2*p2, 2*p2 - 1.5
    else: a0, a1 = -1.5, 0.
    return IntervalData(alpha0, a0, a1)

# %% ../nbs/05_geometry.ipynb #e05d9b63
def _sign(x, fallback):
    s = np.sign(x)
    return np.where(s == 0, np.where(np.sign(fallback) == 0, 1., np.sign(fallback)), s)

def to_parabolic(state:State, params:Params, tau=0., check:bool=True) -> ParabolicState:
    '''Map an on-shell state (scalars or arrays) to (u, v, u̇, v̇), dτ/dy = 1/(u-v).

    u ≥ 0 ≥ v are the roots of z² - (q1²+q2²-3/2) z - (3/2) q1²; the larger-magnitude root is
    taken from the quadratic formula and the other from the product.'''
    if check:
        H1, H2 = first_integrals(state)
        dev = np.maximum(np.abs(H1 - params.K), np.abs(H2 - params.K))
        if np.any(dev > _ON_SHELL): raise ConstraintError(f'state is off the energy surface by {float(np.max(dev))!r}')
    r2 = math.sqrt(2)
    q1, q2, d1, d2 = (np.asarray(x, dtype=float) for x in
                      (state.phi1/r2, r2*state.phi2, state.dphi1/r2, r2*state.dphi2))
    S, Pr = q1*q1 + q2*q2 - 1.5, -1.5*q1*q1
    D = np.sqrt(S*S - 4*Pr)
    with np.errstate(divide='ignore', invalid='ignore'):
        big = np.where(S >= 0, (S + D)/2, (S - D)/2)
        other = np.where(big != 0, Pr/big, 0.)
    u, v = np.where(S >= 0, big, other), np.where(S >= 0, other, big)
    dS, dPr = 2*q1*d1 + 2*q2*d2, -3*q1*d1
    res = ParabolicState(u, v, dS*u - dPr, dPr - dS*v, np.asarray(tau, dtype=float),
                         _sign(state.phi1, state.dphi1), _sign(state.phi2, state.dphi2))
    return ParabolicState(*(float(x) for x in res)) if np.ndim(u) == 0 else res

def _radicand(x, name):
    if np.any(x < -_CLAMP): raise ConstraintError(f'{name} radicand is negative: {float(np.min(x))!r}')
    return np.maximum(x, 0.)

def from_parabolic(pstate:ParabolicState, params:Params) -> State:
    'Invert `to_parabolic` using the recorded signs; velocities near an axis come from the energy'
    u, v, du, dv, tau, s1, s2 = (np.asarray(x, dtype=float) for x in pstate)
    q1 = s1*np.sqrt(_radicand(-2/3*u*v, 'q1²'))
    q2 = s2*np.sqrt(_radicand((3 + 2*u)*(3 + 2*v)/6, 'q2²'))
    w = u - v
    if np.any(w <= 0): raise ConstraintError('need u > v')
    dS, dPr = (du + dv)/w, (du*v + u*dv)/w
    e = 2*(params.K/4 - potential(q1, q2))
    with np.errstate(divide='ignore', invalid='ignore'):
        dq2 = np.where(np.abs(q2) >= _NEAR_AXIS, (dS + 2*dPr/3)/(2*q2), 0.)
        dq1 = np.where(np.abs(q1) >= _NEAR_AXIS, -dPr/(3*q1), 0.)
    near1, near2 = np.abs(q1) < _NEAR_AXIS, np.abs(q2) < _NEAR_AXIS
    # speed along an axis from H = ½|q'|² + V, direction from the product relations
    dq1 = np.where(near1, _sign(-dPr, 1.)*s1*np.sqrt(_radicand(np.where(near1, e - dq2*dq2, 0.), 'q1\'²')), dq1)
    dq2 = np.where(near2, _sign(dS + 2*dPr/3, 1.)*s2*np.sqrt(_radicand(np.where(near2, e - dq1*dq1, 0.), 'q2\'²')), dq2)
    r2 = math.sqrt(2)
    res = State(tau, r2*q1, q2/r2, r2*dq1, dq2/r2)
    return State(*(float(x) for x in res)) if np.ndim(u) == 0 else res

def parabolic_path(traj) -> ParabolicState:
    'Samples of a trajectory in parabolic coordinates, with τ accumulated from dτ/dy = 1/(u-v)'
    st = State(traj.ys, *traj.xs.T)
    ps = to_parabolic(st, traj.params)
    tau = cumulative_trapezoid(1/(ps.u - ps.v), traj.ys, initial=0.)
    return ps._replace(tau=tau)

@patch
def parabolic(traj:Trajectory) -> ParabolicState:
    'Samples of this trajectory in parabolic coordinates'
    return parabolic_path(traj)

# %% ../nbs/05_geometry.ipynb #9f14d6ab
def accel0(params:Params) -> tuple:
    '(u\'\'(0), v\'\'(0)) in y at the initial point, where both τ-velocities vanish'
    if params.is_decay: raise DomainError('no parabolic initial point at p = √3/2')
    p2 = params.p2
    b = 3 - 4*p2
    a, c = 12*p2/b, 16*p2*(1 - p2)*(3 - 8*p2)/b
    return (a, c) if p2 < .75 else (c, a)

def critical_points(params:Params) -> dict:
    'Points A, B, A\', B\' where the orbit touches the boundary of its region; all have Δ = 0'
    p = params.p
    if not p < SQRT3_2: raise DomainError(f'critical points need p < √3/2, got {p!r}')
    x, y = 2*p/math.sqrt(3), math.sqrt(1 - 4*params.p2/3)
    return {'A': (x, y), 'B': (y, x), "A'": (-x, y), "B'": (-y, x)}

def midpoint_shape(params:Params, target) -> dict:
    '''Where the solution is after half a (u, v) period for the rational ratio `target` = q/m.

    u and v start at 0 and 2p²-3/2 and each sits at an end of its interval after q (resp. m) half-turns.
    The point reached is A (u = 1/2, v = -2p²), B (u = 1/2, v = 2p²-3/2) or the axis point (0, √(3/4-p²)).'''
    if not params.p < SQRT3_2: raise DomainError(f'midpoint shape needs p < √3/2, got {params.p!r}')
    q, m = target.q, target.m
    p2 = params.p2
    u = .5 if q % 2 else 0.
    v = -2*p2 if m % 2 else 2*p2 - 1.5
    # touches of u = 0 strictly inside the half period, one sign flip of φ1 each
    sign = -1. if (math.ceil(q/2) - 1) % 2 else 1.
    phi1 = sign*math.sqrt(max(-4/3*u*v, 0.))
    phi2 = math.sqrt(max((3 + 2*u)*(3 + 2*v)/12, 0.))
    name = 'axis' if u == 0 else ('A' if m % 2 or params.is_hyperbola else 'B')
    return dict(u=u, v=v, phi1=phi1, phi2=phi2, name=name)
