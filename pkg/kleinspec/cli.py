"""Command-line front end: trajectories, period tables, ratio roots, classification, spectra and the acceptance run"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../nbs/10_cli.ipynb.

# %% auto #0
__all__ = ['EXIT_OK', 'EXIT_USAGE', 'EXIT_NUMERIC', 'EXIT_VERIFY', 'Parser', 'parser', 'validate', 'cmd_integrate',
           'cmd_periods', 'cmd_find_p', 'cmd_classify', 'cmd_spectrum', 'cmd_verify', 'main']

# %% ../nbs/10_cli.ipynb #d3a0b6c2
import sys, argparse
import numpy as np
from fastcore.all import Path
from .core import (Params, DomainError, DivergenceError, ConstraintError, OutOfRange, IntegrationError, AccuracyError,
                   DEFAULT_TOL, DEFAULT_GRID, K_MAX, SQRT3_2, fmt_float)
from .odecore import integrate, first_integrals, classify
from .geometry import midpoint_shape
from .periods import RationalTarget, tabulate, find_p_for_ratio, ratio
from .spectral import flat_profile, g0_profile, reconstructed_profile, lambda1
from .checks import run_checks
from .report import Svg

# %% ../nbs/10_cli.ipynb #5e81f4a9
EXIT_OK, EXIT_USAGE, EXIT_NUMERIC, EXIT_VERIFY = 0, 1, 2, 3

class Parser(argparse.ArgumentParser):
    'argparse with usage errors mapped to exit code 1'
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f'{self.prog}: error: {message}\n')

def _common(p, need_p=False):
    p.add_argument('--p', type=float, required=need_p, help='initial value φ2(0), in (0, 1]')
    p.add_argument('--tol', type=float, default=DEFAULT_TOL, help='integration tolerance')
    p.add_argument('--out', default='-', help='output path, - for stdout')
    return p

def parser() -> Parser:
    ap = Parser(prog='kleinspec', description='First-eigenvalue extremal metric on the Klein bottle: ODE, periods, spectra')
    sub = ap.add_subparsers(dest='command', required=True)
    p = _common(sub.add_parser('integrate', help='integrate the ODE system, CSV of dense samples'), need_p=True)
    p.add_argument('--y-end', type=float, default=10.)
    p.add_argument('--samples', type=int, default=1001)
    p.add_argument('--format', choices=('csv', 'svg'), default='csv')
    p = _common(sub.add_parser('periods', help='table of Tu, Tv and R over a p grid'))
    p.add_argument('--p-min', type=float, default=.05)
    p.add_argument('--p-max', type=float, default=SQRT3_2 - .05)
    p.add_argument('--p-step', type=float, default=1e-2)
    p.add_argument('--format', choices=('csv', 'svg'), default='csv')
    p.add_argument('--plot', choices=('periods', 'ratio'), default='periods', help='curve set for --format svg')
    p = _common(sub.add_parser('find-p', help='solve R(p) = q/m'))
    p.add_argument('--ratio', required=True, help='target q/m')
    p.add_argument('--p-step', type=float, default=1e-3)
    p = _common(sub.add_parser('classify', help='classify the solution with parameter p'), need_p=True)
    p.add_argument('--ratio', help='rational ratio q/m the solution is known to have')
    p = _common(sub.add_parser('spectrum', help='λ1, area and λ1·A of a metric'))
    p.add_argument('--metric', required=True, help='flat:a | g0 | reconstructed:p')
    p.add_argument('--grid', type=int, default=DEFAULT_GRID)
    p.add_argument('--k-max', type=int, default=K_MAX)
    p = _common(sub.add_parser('verify', help='run the acceptance suite'))
    p.add_argument('--grid', type=int, default=DEFAULT_GRID)
    p.add_argument('--quick', action='store_true', help='point checks only, no sweeps')
    return ap

def validate(args):
    'Checks shared by every command; raises DomainError'
    if not args.tol > 0: raise DomainError(f'--tol must be > 0, got {args.tol!r}')
    g = getattr(args, 'grid', None)
    if g is not None and (g < 64 or g & (g - 1)): raise DomainError(f'--grid must be a power of two >= 64, got {g!r}')
    if args.p is not None: Params(args.p)
    return args

# %% ../nbs/10_cli.ipynb #93b7c0e1
def _emit(args, text):
    if args.out == '-': sys.stdout.write(text)
    else: Path(args.out).write_text(text)

def _csv(header, rows): return '\n'.join([header] + [','.join(r) for r in rows]) + '\n'

def cmd_integrate(args):
    tr = integrate(Params(args.p), args.y_end, args.tol, n_dense=args.samples)
    st = tr(tr.ys)
    H1, H2 = first_integrals(st)
    if args.format == 'svg':
        _emit(args, str(Svg().title(f'p = {args.p!r}').labels('y', 'φ').line(st.y, st.phi1, 'φ1').line(st.y, st.phi2, 'φ2')))
        return EXIT_OK
    cols = (st.y, st.phi1, st.phi2, st.dphi1, st.dphi2, H1, H2)
    _emit(args, _csv('y,phi1,phi2,dphi1,dphi2,H1,H2', ([fmt_float(c[i]) for c in cols] for i in range(len(st.y)))))
    return EXIT_OK

def cmd_periods(args):
    grid = [args.p] if args.p is not None else np.arange(args.p_min, args.p_max + args.p_step/2, args.p_step)
    rows = tabulate(grid)
    for r in rows.filter(lambda r: not r.ok): print(f'p={r.p!r}: {r.error}', file=sys.stderr)
    if args.format == 'svg':
        ok = rows.filter(lambda r: r.ok)
        s = Svg().labels('p', 'τ-period' if args.plot == 'periods' else 'Tv/Tu')
        if args.plot == 'periods': s = s.title('Tu and Tv').line(ok.attrgot('p'), ok.attrgot('Tu'), 'Tu').line(ok.attrgot('p'), ok.attrgot('Tv'), 'Tv')
        else: s = s.title('R = Tv/Tu').line(ok.attrgot('p'), ok.attrgot('R'), 'R').hline(1.5, '3/2')
        _emit(args, str(s))
    else:
        _emit(args, _csv('p,Tu,Tv,R,err', ([fmt_float(r.p), fmt_float(r.Tu), fmt_float(r.Tv), fmt_float(r.R),
                                            fmt_float(r.err) if r.ok else r.error.replace(',', ';')] for r in rows)))
    return EXIT_OK if not rows or any(r.ok for r in rows) else EXIT_NUMERIC

def cmd_find_p(args):
    t = RationalTarget.parse(args.ratio)
    ps = find_p_for_ratio(t, args.p_step)
    _emit(args, ''.join(f'p={fmt_float(p)} R={fmt_float(ratio(Params(p)).R)}\n' for p in ps))
    return EXIT_OK

def cmd_classify(args):
    pr = Params(args.p)
    c = classify(pr, args.tol, RationalTarget.parse(args.ratio) if args.ratio else None)
    lines = [str(c), f'kind={c.kind}']
    if c.period_y is not None: lines.append(f'period_y={fmt_float(c.period_y)}')
    if c.zeros_phi1 is not None: lines.append(f'zeros_phi1={c.zeros_phi1}')
    if c.min_phi2 is not None: lines.append(f'min_phi2={fmt_float(c.min_phi2)}')
    if c.period is not None and pr.p < SQRT3_2 and (c.period.m or pr.is_hyperbola):
        lines.append(f'midpoint={midpoint_shape(pr, c.period)["name"]}')
    _emit(args, '\n'.join(lines) + '\n')
    return EXIT_OK

def _metric(spec):
    kind, _, arg = spec.partition(':')
    try:
        if kind == 'flat': return flat_profile(float(arg))
        if kind == 'g0' and not arg: return g0_profile()
        if kind == 'reconstructed': return reconstructed_profile(Params(float(arg)))
    except ValueError as e:
        if isinstance(e, DomainError): raise
    raise DomainError(f'unknown metric {spec!r}; use flat:a, g0 or reconstructed:p')

def cmd_spectrum(args):
    r = lambda1(_metric(args.metric), args.k_max, args.grid)
    _emit(args, f'lambda1={fmt_float(r.lambda1)} k={r.k_min} area={fmt_float(r.area)} product={fmt_float(r.product)} '
                f'err={fmt_float(r.err)}\n')
    return EXIT_OK

def cmd_verify(args):
    # progress shares a stream with the report only when the report goes to a file
    rep = run_checks(args.grid, args.quick, sys.stderr if args.out == '-' else sys.stdout)
    _emit(args, str(rep))
    return EXIT_OK if rep.passed else EXIT_VERIFY

# %% ../nbs/10_cli.ipynb #0f2c8d57
_COMMANDS = {
    'integrate': cmd_integrate,
    'periods':   cmd_periods,
    'find-p':    cmd_find_p,
    'classify':  cmd_classify,
    'spectrum':  cmd_spectrum,
    'verify':    cmd_verify,
}

def main(argv=None) -> int:
    args = parser().parse_args(argv)
    try: return _COMMANDS[args.command](validate(args))
    except (DivergenceError, IntegrationError, AccuracyError, ConstraintError) as e:
        print(f'kleinspec: {type(e).__name__}: {e}', file=sys.stderr)
        return EXIT_NUMERIC
    except (DomainError, OutOfRange) as e:
        print(f'kleinspec: {type(e).__name__}: {e}', file=sys.stderr)
        return EXIT_USAGE

if __name__ == '__main__': sys.exit(main())
