"""Periods Tu, Tv of the separated motion, their ratio R = Tv/Tu, sweeps, and solving R(p) = q/m"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../nbs/06_periods.ipynb.

# %% auto #0
__all__ = ['TV_HYPERBOLA', 'PeriodData', 'RationalTarget', 'period_u', 'period_v', 'ratio', 'moments', 'asymptotic',
           'tabulate', 'ratio_range', 'find_p_for_ratio']

# %% ../nbs/06_periods.ipynb #f1a2c3d4
import math
import numpy as np
from scipy.optimize import brentq
from fastcore.all import L, store_attr, basic_repr
from fastcore.parallel import parallel
from .core import Params, DomainError, DivergenceError, OutOfRange, SQRT3_2, SCAN_STEP, RATIO_WINDOW, n_workers
from .geometry import intervals, roots_P
from .quad import tanh_sinh, gauss_chebyshev

# %% ../nbs/06_periods.ipynb #0e7b5a90
TV_HYPERBOLA = 8*math.pi/(3*math.sqrt(10))
_RTOL = 1e-12

class PeriodData:
    'Periods at p, their ratio, a quadrature error estimate for R, and the error text of a failed row'
    def __init__(self, p, Tu=math.nan, Tv=math.nan, R=math.nan, err=math.nan, error=None): store_attr()
    __repr__ = basic_repr('p,Tu,Tv,R,err')
    @property
    def ok(self): return self.error is None
    def to_dict(self): return dict(p=self.p, Tu=self.Tu, Tv=self.Tv, R=self.R, err=self.err)

class RationalTarget:
    'Irreducible q/m with q > m ≥ 2'
    def __init__(self, q:int, m:int):
        q, m = int(q), int(m)
        if math.gcd(q, m) != 1: raise DomainError(f'{q}/{m} is not irreducible')
        if not q > m >= 2: raise DomainError(f'need q > m >= 2, got {q}/{m}')
        store_attr()
    __repr__ = basic_repr('q,m')
    def __str__(self): return f'{self.q}/{self.m}'
    @property
    def value(self): return self.q/self.m

    @classmethod
    def parse(cls, s:str):
        'From text "q/m"'
        q, _, m = str(s).partition('/')
        try: return cls(int(q), int(m))
        except ValueError as e:
            if isinstance(e, DomainError): raise
            raise DomainError(f'cannot read a ratio from {s!r}') from None

# %% ../nbs/06_periods.ipynb #8c31de5a
def _others(params, a, b):
    'Roots of P other than the interval ends, each with the end it is closest to'
    rs = sorted(roots_P(params), key=lambda r: min(abs(r - a), abs(r - b)))
    return rs[2:]

def _interval_integral(params, a, b, power=0, method='tanh-sinh'):
    '''∫ s^power ds/√P over [a, b], with a, b adjacent roots of P and P = 8 (s-a)(b-s) ∏(s-r).

    Distances to the ends are passed separately so roots close to an end keep full precision.
    A collapsed interval returns its small-oscillation limit.'''
    others = _others(params, a, b)
    if method == 'chebyshev' or b - a <= 0:
        mid, half = (a + b)/2, (b - a)/2
        def g(th):
            s = mid - half*np.cos(th)
            return s**power/np.sqrt(8*np.prod([s - r for r in others], axis=0))
        return gauss_chebyshev(g)
    if method != 'tanh-sinh': raise ValueError(f'unknown quadrature method {method!r}')
    def f(x, dl, dr):
        g = 8.
        for r in others: g = g*(((a - r) + dl) if abs(a - r) < abs(b - r) else ((b - r) - dr))
        return x**power/np.sqrt(dl*dr*g)
    return tanh_sinh(f, a, b, rtol=_RTOL)

def _q_form(params):
    '∫ dr/√Q over [0, 1/2]'
    p2 = params.p2
    c, e = 3 - 8*p2, 1.5 - 2*p2
    def f(r, dl, dr):
        # 1-2r = 2·dr; the middle factors sum to 3/2, each taken from the nearer end
        near = dl < dr
        f1 = np.where(near, 2*p2 + c*dl, e - c*dr)
        f2 = np.where(near, e - c*dl, 2*p2 + c*dr)
        return 1/np.sqrt(4*dl*dr*f1*f2*(4 - 4*p2 - 2*c*r))
    return tanh_sinh(f, 0., .5, rtol=_RTOL)

def _check(params):
    if params.is_decay: raise DivergenceError('periods diverge at p = √3/2')

def period_u(params:Params, method:str='tanh-sinh', full:bool=False):
    'Tu = 2∫ ds/√P over I1; `method="chebyshev"` is the independent θ-substituted rule'
    _check(params)
    val, err = _interval_integral(params, *intervals(params).I1, method=method)
    return (2*val, 2*err) if full else 2*val

def period_v(params:Params, method:str='tanh-sinh', full:bool=False):
    '''Tv = 2∫ ds/√P over I2. Below √3/2 the production rule integrates dr/√Q on [0, 1/2];
    at p = √(3/8), where I2 collapses, it is 8π/(3√10).'''
    _check(params)
    if params.is_hyperbola: val, err = TV_HYPERBOLA/2, 0.
    elif method == 'tanh-sinh' and params.p < SQRT3_2: val, err = _q_form(params)
    else: val, err = _interval_integral(params, *intervals(params).I2, method=method)
    return (2*val, 2*err) if full else 2*val

def ratio(params:Params, method:str='tanh-sinh') -> PeriodData:
    Tu, eu = period_u(params, method, full=True)
    Tv, ev = period_v(params, method, full=True)
    R = Tv/Tu
    return PeriodData(params.p, Tu, Tv, R, R*(eu/Tu + ev/Tv))

def moments(params:Params, method:str='tanh-sinh') -> tuple:
    '(U, V) = (∫u dτ over one u-period, ∫v dτ over one v-period); a (u, v) period of q u-turns has y-length qU - mV'
    _check(params)
    iv = intervals(params)
    if params.is_circle: U = .5*period_u(params, method)
    else: U = 2*_interval_integral(params, *iv.I1, power=1, method=method)[0]
    if params.is_hyperbola: V = -.75*TV_HYPERBOLA
    else: V = 2*_interval_integral(params, *iv.I2, power=1, method=method)[0]
    return U, V

def asymptotic(params:Params) -> dict:
    'Leading logarithmic terms of (Tu, Tv) at the nearer end of (0, √3/2)'
    p = params.p
    if p < SQRT3_2/2: return dict(end=0., Tu=-4/3*math.log(p), Tv=-2*math.log(p))
    e = abs(SQRT3_2 - p)
    if e == 0: raise DivergenceError('periods diverge at p = √3/2')
    return dict(end=SQRT3_2, Tu=-2/3*math.log(e), Tv=-math.log(e))

# %% ../nbs/06_periods.ipynb #5d2e8f61
def _row(p):
    try: return ratio(Params(p))
    except (ValueError, ArithmeticError, RuntimeError) as e: return PeriodData(float(p), error=f'{type(e).__name__}: {e}')

def tabulate(p_grid) -> L:
    'One `PeriodData` per grid point in grid order; failed points become rows carrying `error`'
    return L(parallel(_row, list(p_grid), n_workers=n_workers(), threadpool=True, progress=False))

def ratio_range(rows) -> dict:
    'Smallest and largest R over the successful rows, with the p where each occurs'
    ok = L(rows).filter(lambda r: r.ok)
    if not ok: raise DomainError('no successful rows')
    lo, hi = min(ok, key=lambda r: r.R), max(ok, key=lambda r: r.R)
    return dict(min=lo.R, p_min=lo.p, max=hi.R, p_max=hi.p)

def _scan_grid(step):
    ends = step*np.logspace(-6, -1, 6)
    grid = np.concatenate([ends, np.arange(step, SQRT3_2 - step/2, step), SQRT3_2 - ends[::-1]])
    return np.unique(grid)

def find_p_for_ratio(target:RationalTarget, bracket_grid_step:float=SCAN_STEP, xtol:float=1e-15) -> L:
    'All p in (0, √3/2) with R(p) = q/m: sign changes on a scan grid refined by Brent, ascending'
    t = target.value
    lo, hi = RATIO_WINDOW
    if not lo < t < hi: raise OutOfRange(f'{target} = {t!r} is outside the ratio window ({lo}, {hi})')
    grid = _scan_grid(bracket_grid_step)
    rows = tabulate(grid)
    pts = [(r.p, r.R - t) for r in rows if r.ok]
    f = lambda p: ratio(Params(p)).R - t
    res = L()
    for (a, fa), (b, fb) in zip(pts, pts[1:]):
        if fa == 0: res.append(a)
        elif fa*fb < 0: res.append(brentq(f, a, b, xtol=xtol, rtol=4*np.finfo(float).eps))
    if pts and pts[-1][1] == 0: res.append(pts[-1][0])
    return res.sorted()
