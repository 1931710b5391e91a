"""The acceptance suite: every numerical claim checked end to end, collected into a `Report`"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../nbs/09_checks.ipynb.

# %% auto #0
__all__ = ['CHECKS', 'run_checks']

# %% ../nbs/09_checks.ipynb #c41e7d02
import sys, math
import numpy as np
from .core import Params, SQRT3_2, SQRT3_8, DEFAULT_TOL, DEFAULT_GRID, RATIO_WINDOW
from .elliptic import ellip_e, complete_elliptic_pi, target_constant
from .odecore import initial_state, first_integrals, integrate, parity_defect, detect_period, classify
from .periods import TV_HYPERBOLA, RationalTarget, period_u, period_v, tabulate, ratio_range, find_p_for_ratio
from .spectral import flat_profile, lambda1, eigenspace, reconstructed_profile, verify_conjecture
from .report import Report

# %% ../nbs/09_checks.ipynb #1f6d9a3e
def _target(**kw):
    t = target_constant()
    return abs(t/(13.365*math.pi) - 1) < 1e-4, dict(value=t, E=ellip_e(8/9))

def _integrals(**kw):
    dev = max(abs(h - Params(p).K) for p in (.1, .5, SQRT3_8, .9, 1.) for h in first_integrals(initial_state(Params(p))))
    return dev < 1e-14, dict(max_dev=dev)

def _conservation(**kw):
    pr = Params(SQRT3_8)
    tr = integrate(pr, 5*detect_period(pr).y, DEFAULT_TOL)
    return tr.max_drift <= 1e-9, dict(max_drift=tr.max_drift, steps=len(tr))

def _parity(**kw):
    d = max(parity_defect(Params(p), 10.) for p in (.3, SQRT3_8, .8))
    return d <= 1e-8, dict(max_defect=d)

def _orbits(**kw):
    y = np.linspace(0, 20, 2001)
    h = integrate(Params(SQRT3_8), 20.)(y)
    c = integrate(Params(1.), 20.)(y)
    e = integrate(Params(SQRT3_2), 50.)(np.linspace(0, 50, 2001))
    devs = dict(hyperbola=float(np.max(np.abs(h.phi1**2 - 4*h.phi2**2 + 1.5))),
                circle=float(np.max(np.abs(c.phi1**2 + c.phi2**2 - 1))),
                ellipse=float(np.max(np.abs(e.phi1**2 + 4*e.phi2**2 - 2*math.sqrt(3)*e.phi2))),
                decay=float(e.phi1[-1]**2 + e.phi2[-1]**2))
    return max(devs['hyperbola'], devs['circle'], devs['ellipse']) <= 1e-8 and devs['decay'] < 1e-3, devs

def _special_periods(**kw):
    pr = Params(SQRT3_8)
    tu, tv = period_u(pr), period_v(pr)
    eu = abs(tu/(.8*complete_elliptic_pi(.4, .25)) - 1)
    near = max(abs(period_v(Params(math.sqrt(.375 + s*1e-7))) - TV_HYPERBOLA) for s in (-1, 1))
    return eu <= 1e-10 and near <= 1e-4, dict(Tu=tu, Tv=tv, Tu_rel_err=eu, Tv_jump=near)

def _window(**kw):
    rows = tabulate(np.arange(.05, SQRT3_2 - .05, 1e-3))
    rr = ratio_range(rows)
    lo, hi = RATIO_WINDOW
    bad = [r.p for r in rows if not r.ok or r.Tv <= r.Tu]
    return not bad and lo <= rr['min'] and rr['max'] <= hi, dict(rr, rows=len(rows), bad=len(bad))

def _three_halves(**kw):
    t = RationalTarget(3, 2)
    ps = find_p_for_ratio(t)
    if not ps: return False, dict(roots=0)
    c = classify(Params(ps[0]), target=t)
    return c.kind == 'PeriodicInadmissible' and c.zeros_phi1 == 6, dict(roots=list(ps), p=ps[0], kind=c.kind,
                                                                         zeros=c.zeros_phi1)

def _admissible(**kw):
    c = classify(Params(SQRT3_8))
    vs = {p: classify(Params(p)) for p in (.9, .95, 1.)}
    ok = c.kind == 'PeriodicAdmissible' and c.zeros_phi1 == 2 and c.min_phi2 > 0
    ok = ok and all(v.kind == 'Phi2Vanishes' and v.min_phi2 <= 1e-6 for v in vs.values())
    return ok, dict(hyperbola=str(c), period=c.period_y, min_phi2={str(p): v.min_phi2 for p, v in vs.items()})

def _flat(grid=DEFAULT_GRID, **kw):
    errs = {str(a): abs(lambda1(flat_profile(a), grid=grid).lambda1 - min((2*math.pi/a)**2, 4))
            for a in (1., 2., math.pi, 2*math.pi, 8.)}
    return max(errs.values()) <= 1e-8, errs

def _multiplicity(grid=DEFAULT_GRID, **kw):
    es = eigenspace(reconstructed_profile(Params(SQRT3_8)), grid=grid, rtol=1e-5)
    return es['multiplicity'] == 5, es

def _conjecture(grid=DEFAULT_GRID, **kw):
    v = verify_conjecture(grid)
    return v['passed'], dict(target=v['target'], R1=v['R1'].get('product', v['R1'].get('error')),
                             R2=v['R2'].get('product', v['R2'].get('error')), lambda1=v['R1'].get('lambda1'),
                             agree=v['agree'])

# %% ../nbs/09_checks.ipynb #8e0f4ab6
CHECKS = {
    'target-constant': _target,
    'first-integrals': _integrals,
    'conservation':    _conservation,
    'parity':          _parity,
    'orbits':          _orbits,
    'special-periods': _special_periods,
    'ratio-window':    _window,
    'ratio-3/2':       _three_halves,
    'admissibility':   _admissible,
    'flat-oracle':     _flat,
    'multiplicity':    _multiplicity,
    'conjecture':      _conjecture,
}
# sweeps and the eigenspace study; `quick` skips them
_SLOW = {'ratio-window', 'ratio-3/2', 'multiplicity'}
_GRID_SENSITIVE = {'flat-oracle', 'multiplicity', 'conjecture'}

def run_checks(grid:int=DEFAULT_GRID, quick:bool=False, out=None) -> Report:
    'Run every acceptance check (skipping the slowest when `quick`), printing progress to `out`'
    out = out or sys.stdout
    names = [n for n in CHECKS if not (quick and n in _SLOW)]
    rep = Report().meta('grid', grid).meta('quick', quick).meta('target', target_constant())
    for i, n in enumerate(names, 1):
        print(f'[{i}/{len(names)}] {n}...', file=out, flush=True)
        try: ok, vals = CHECKS[n](grid=grid, quick=quick)
        except (ValueError, ArithmeticError, RuntimeError) as e: ok, vals = False, dict(error=f'{type(e).__name__}: {e}')
        rep = rep.check(n, ok, warn=grid < DEFAULT_GRID and n in _GRID_SENSITIVE, **vals)
    print(rep.table(), file=out)
    return rep
