"""The φ1, φ2 ODE system: first integrals, Hamiltonian form, integration, period detection, admissibility"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../nbs/04_odecore.ipynb.

# %% auto #0
__all__ = ['KINDS', 'METHODS', 'Params', 'State', 'HamiltonianState', 'Trajectory', 'Period', 'SolutionClass', 'initial_state', 'rhs',
           'first_integrals', 'potential', 'to_hamiltonian', 'decay_solution', 'integrate', 'parity_defect',
           'detect_period', 'sign_changes', 'classify']

# %% ../nbs/04_odecore.ipynb #71d0e3a5
import math
from fractions import Fraction
from typing import NamedTuple
import numpy as np
from scipy.integrate import solve_ivp
from scipy.optimize import brentq
from fastcore.all import L, store_attr, basic_repr
from .core import Params, State, DomainError, IntegrationError, DEFAULT_TOL, SQRT3_2, PROFILE_SAMPLES
from .dopri import dopri5

# %% ../nbs/04_odecore.ipynb #0c9be7d4
KINDS = ('PeriodicAdmissible', 'PeriodicInadmissible', 'QuasiPeriodic', 'DecayToOrigin', 'Phi2Vanishes')

class HamiltonianState(NamedTuple):
    'Rescaled coordinates q1 = φ1/√2, q2 = √2 φ2, their velocities and the energy H'
    q1: float
    q2: float
    dq1: float
    dq2: float
    H: float

# %% ../nbs/04_odecore.ipynb #e2f8a611
def initial_state(params:Params) -> State:
    'Initial data (0, p, 2p, 0) at y = 0'
    p = params.p
    return State(0., 0., p, 2*p, 0.)

def rhs(state:State, params:Params=None) -> tuple:
    'Accelerations (φ1\'\', φ2\'\') = ((1 - 2φ1² - 8φ2²) φ1, (4 - 2φ1² - 8φ2²) φ2)'
    s = 2*state.phi1**2 + 8*state.phi2**2
    return (1 - s)*state.phi1, (4 - s)*state.phi2

def first_integrals(state:State) -> tuple:
    'The two first integrals (H1, H2); both equal -4p²(3-4p²) on the solution with parameter p'
    f1, f2, d1, d2 = state.phi1, state.phi2, state.dphi1, state.dphi2
    f1s, f2s = f1*f1, f2*f2
    H1 = (f1s + 4*f2s)**2 - f1s - 16*f2s + d1*d1 + 4*d2*d2
    H2 = 12*f2s*(f2s - 1) + 3*f1s*f2s + f2s*d1*d1 - 2*f1*d1*f2*d2 + (3 + f1s)*d2*d2
    return H1, H2

def potential(q1, q2):
    'V(q1, q2) = (q1² + q2²)² - q1²/2 - 2 q2²'
    return (q1*q1 + q2*q2)**2 - q1*q1/2 - 2*q2*q2

def to_hamiltonian(state:State) -> HamiltonianState:
    'Map to (q1, q2, q1\', q2\') with H = ½|q\'|² + V = H1/4'
    r2 = math.sqrt(2)
    q1, q2, dq1, dq2 = state.phi1/r2, r2*state.phi2, state.dphi1/r2, r2*state.dphi2
    return HamiltonianState(q1, q2, dq1, dq2, (dq1*dq1 + dq2*dq2)/2 + potential(q1, q2))

# %% ../nbs/04_odecore.ipynb #5b7a2cd0
def _field(y, x):
    f1, f2, d1, d2 = x
    s = 2*f1*f1 + 8*f2*f2
    return np.array([d1, d2, (1 - s)*f1, (4 - s)*f2])

def decay_solution(y):
    'Closed-form solution at p = √3/2 on the ellipse φ1² + 4φ2² = 2√3 φ2; rows (φ1, φ2, φ1\', φ2\')'
    y = np.asarray(y, dtype=float)
    s, t = 1/np.cosh(y), np.tanh(y)
    r3 = math.sqrt(3)
    return np.stack([r3*s*t, r3/2*s*s, r3*s*(2*s*s - 1), -r3*s*s*t], axis=-1)

class _ClosedForm:
    'Dense-output stand-in for an exact solution'
    def __init__(self, fn, t): store_attr()
    def __call__(self, tq): return self.fn(tq)

class _IVPDense:
    '`solve_ivp` dense output with the state on the last axis'
    def __init__(self, sol): store_attr()
    def __call__(self, tq): return np.moveaxis(self.sol(np.asarray(tq, dtype=float)), 0, -1)

METHODS = ('DOP853', 'RK45', 'dopri5')

def _solve(params, y_end, tol, method):
    x0 = initial_state(params)[1:]
    if method == 'dopri5':
        sol = dopri5(_field, 0., x0, y_end, rtol=tol, atol=tol)
        return sol, sol.t, sol.y
    res = solve_ivp(_field, (0., y_end), x0, method=method, rtol=tol, atol=tol, dense_output=True)
    if not res.success: raise IntegrationError(f'{method}: {res.message}', float(res.t[-1]))
    return _IVPDense(res.sol), res.t, res.y.T

# %% ../nbs/04_odecore.ipynb #a93f6e17
class Trajectory:
    'Samples of one integrated solution with first-integral monitoring and dense evaluation'
    def __init__(self, params:Params, tol:float, sol, ys, xs):
        store_attr()
        H1, H2 = first_integrals(State(ys, *xs.T))
        self.H1_0, self.H2_0 = float(H1[0]), float(H2[0])
        self.max_drift = float(max(np.max(np.abs(H1 - H1[0])), np.max(np.abs(H2 - H2[0]))))
        self.contract = 100*tol
    __repr__ = basic_repr('params,tol,max_drift')

    def __len__(self): return len(self.ys)
    def __call__(self, y) -> State:
        'Dense-output state at time(s) y'
        y = np.asarray(y, dtype=float)
        return State(y, *np.moveaxis(self.sol(y), -1, 0))
    @property
    def samples(self): return L(State(float(y), *map(float, x)) for y, x in zip(self.ys, self.xs))
    @property
    def within_contract(self): return self.max_drift <= self.contract
    @property
    def y_end(self): return float(self.ys[-1])

def integrate(params:Params, y_end:float, tol:float=DEFAULT_TOL, n_dense:int=None, method:str='DOP853') -> Trajectory:
    '''Integrate from the initial data to `y_end` (negative runs backwards) at rtol = atol = tol.

    `method` is a `solve_ivp` Runge-Kutta method, or "dopri5" for the in-house Dormand-Prince stepper.
    Samples are the accepted steps, or `n_dense` uniform dense-output points when given.
    p = √3/2 uses the closed-form decaying solution.'''
    if not tol > 0: raise DomainError(f'tol must be > 0, got {tol!r}')
    if y_end == 0: raise DomainError('y_end must be non-zero')
    if method not in METHODS: raise DomainError(f'method must be one of {METHODS}, got {method!r}')
    if params.is_decay:
        n = n_dense or 1 + math.ceil(abs(y_end)*64)
        ys = np.linspace(0., y_end, n)
        return Trajectory(params, tol, _ClosedForm(decay_solution, ys), ys, decay_solution(ys))
    sol, ys, xs = _solve(params, y_end, tol, method)
    if n_dense is None: return Trajectory(params, tol, sol, ys, xs)
    ys = np.linspace(0., y_end, n_dense)
    return Trajectory(params, tol, sol, ys, sol(ys))

def parity_defect(params:Params, y_end:float, tol:float=DEFAULT_TOL, n:int=2001) -> float:
    'Largest |φ1(y) + φ1(-y)| or |φ2(y) - φ2(-y)| on a grid, from separate forward and backward runs'
    fw, bw = integrate(params, y_end, tol), integrate(params, -y_end, tol)
    y = np.linspace(0., y_end, n)
    a, b = fw(y), bw(-y)
    return float(max(np.max(np.abs(a.phi1 + b.phi1)), np.max(np.abs(a.phi2 - b.phi2))))

# %% ../nbs/04_odecore.ipynb #3fd1c842
class Period:
    'Period of a periodic solution: `y` for (φ1, φ2), `y_uv` and `tau` for (u, v), ratio q/m'
    def __init__(self, y, y_uv, tau, q, m): store_attr()
    __repr__ = basic_repr('y,y_uv,tau,q,m')
    @property
    def doubled(self): return self.y != self.y_uv

def _flips(params, q, m):
    'Sign changes of (φ1, φ2) per (u, v) period: u touches 0, or v touches 0 and -3/2'
    return (q, 0) if params.p < SQRT3_2 else (m, m)

def detect_period(params:Params, tol:float=1e-10, target=None, max_den:int=64):
    '''y-period of the solution, or None when R(p) is not within `tol` of a rational q/m.

    Without a `target` the candidate is the best fraction with denominator ≤ `max_den`.
    p = √(3/8) (v constant) and p = 1 (u constant) are periodic with a single round trip.'''
    from .periods import period_u, period_v, moments, ratio
    if params.is_decay: raise DomainError('p = √3/2 decays to the origin and has no period')
    U, V = moments(params)
    if params.is_hyperbola:
        q, m, tau = 1, 0, period_u(params)
        y_uv = U + .75*tau
    elif params.is_circle:
        q, m, tau = 0, 1, period_v(params)
        y_uv = .5*tau - V
    else:
        R = ratio(params).R
        if target is None:
            fr = Fraction(R).limit_denominator(max_den)
            q, m = fr.numerator, fr.denominator
        else: q, m = target.q, target.m
        if abs(R - q/m) > tol: return None
        tau = q*period_u(params)
        y_uv = q*U - m*V
    f1, f2 = _flips(params, q, m)
    return Period(y_uv*(2 if f1 % 2 or f2 % 2 else 1), y_uv, tau, q, m)

# %% ../nbs/04_odecore.ipynb #d6e1f0b8
def sign_changes(traj:Trajectory, comp:str, y0:float, length:float, n:int, xtol:float=1e-12):
    'Zeros of component `comp` on [y0, y0+length]: sign changes on n cells, refined by Brent; exact sample zeros count once'
    ys = np.linspace(y0, y0 + length, n + 1)
    v = getattr(traj(ys), comp)
    f = lambda y: float(getattr(traj(y), comp))
    zero = np.abs(v) < 1e-13
    res = L(float(y) for y in ys[zero])
    for i in range(n):
        if zero[i] or zero[i + 1] or v[i]*v[i + 1] > 0: continue
        res.append(brentq(f, ys[i], ys[i + 1], xtol=xtol))
    return res.sorted()

class SolutionClass:
    'Classification of the solution with parameter p'
    def __init__(self, kind, period_y=None, zeros_phi1=None, min_phi2=None, period=None, zeros=None):
        if kind not in KINDS: raise ValueError(f'unknown solution kind {kind!r}')
        store_attr()
    __repr__ = basic_repr('kind,period_y,zeros_phi1,min_phi2')
    def __str__(self):
        s = self.kind
        if self.zeros_phi1 is not None: s += f' zeros={self.zeros_phi1}'
        return s

def classify(params:Params, tol:float=DEFAULT_TOL, target=None, ratio_tol:float=1e-10, horizon:float=40.) -> SolutionClass:
    'Decay, φ2 vanishing, quasi-periodic, or periodic (admissible iff φ1 has 2 zeros per period and φ2 > 0)'
    if params.is_decay:
        tr = integrate(params, horizon, tol)
        return SolutionClass('DecayToOrigin', min_phi2=float(tr.xs[:, 1].min()))
    if params.p > SQRT3_2:
        tr = integrate(params, horizon, tol)
        ys = np.linspace(0., horizon, 16*PROFILE_SAMPLES + 1)
        z = sign_changes(tr, 'phi2', 0., horizon, 16*PROFILE_SAMPLES)
        return SolutionClass('Phi2Vanishes', min_phi2=float(np.min(tr(ys).phi2)), zeros=z)
    per = detect_period(params, ratio_tol, target)
    if per is None:
        tr = integrate(params, horizon, tol)
        return SolutionClass('QuasiPeriodic', min_phi2=float(tr.xs[:, 1].min()))
    n = PROFILE_SAMPLES*max(1, 2*per.q)
    # start half a cell in so the zero of φ1 at y = 0 is not a sample
    y0 = .5*per.y/n
    tr = integrate(params, y0 + per.y, tol)
    z = sign_changes(tr, 'phi1', y0, per.y, n)
    min2 = float(np.min(tr(np.linspace(y0, y0 + per.y, n + 1)).phi2))
    kind = 'PeriodicAdmissible' if len(z) == 2 and min2 > 0 else 'PeriodicInadmissible'
    return SolutionClass(kind, per.y, len(z), min2, per, z)
