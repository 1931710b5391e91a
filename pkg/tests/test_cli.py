import math
import numpy as np
import pytest
from kleinspec.core import SQRT3_8
from kleinspec.checks import CHECKS, run_checks
from kleinspec.cli import *

HYP = repr(SQRT3_8)


def _csv(text):
    lines = text.strip().splitlines()
    return lines[0], np.array([[float(x) for x in l.split(',')] for l in lines[1:]])


def test_integrate_csv(capsys):
    "H1 column is conserved along the hyperbola solution"
    assert main(['integrate', '--p', HYP, '--y-end', '10']) == EXIT_OK
    head, rows = _csv(capsys.readouterr().out)
    assert head == 'y,phi1,phi2,dphi1,dphi2,H1,H2'
    assert rows.shape == (1001, 7) and rows[-1, 0] == 10.
    assert np.ptp(rows[:, 5]) <= 1e-9 and np.ptp(rows[:, 6]) <= 1e-9


def test_integrate_is_deterministic(tmp_path, capsys):
    a, b = tmp_path/'a.csv', tmp_path/'b.csv'
    for f in (a, b): assert main(['integrate', '--p', '0.4', '--y-end', '3', '--samples', '31', '--out', str(f)]) == 0
    assert a.read_bytes() == b.read_bytes() and capsys.readouterr().out == ''


def test_integrate_svg(capsys):
    assert main(['integrate', '--p', '0.5', '--y-end', '2', '--format', 'svg']) == 0
    assert capsys.readouterr().out.startswith('<?xml')


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as e: main(['integrate'])
    assert e.value.code == EXIT_USAGE
    assert main(['integrate', '--p', '1.5']) == EXIT_USAGE
    assert main(['integrate', '--p', '0.5', '--tol', '0']) == EXIT_USAGE
    assert main(['spectrum', '--metric', 'g0', '--grid', '100']) == EXIT_USAGE
    assert main(['spectrum', '--metric', 'torus:1']) == EXIT_USAGE
    assert main(['find-p', '--ratio', '44/29']) == EXIT_USAGE
    assert 'OutOfRange' in capsys.readouterr().err


def test_periods_single_point(capsys):
    assert main(['periods', '--p', HYP]) == 0
    head, rows = _csv(capsys.readouterr().out)
    assert head == 'p,Tu,Tv,R,err' and rows.shape == (1, 5)
    np.testing.assert_allclose(rows[0, 2], 8*math.pi/(3*math.sqrt(10)), rtol=1e-15)


def test_periods_failed_row(capsys):
    "the decay point gives a row carrying its error, not a crash"
    assert main(['periods', '--p', repr(math.sqrt(3)/2)]) == EXIT_NUMERIC
    out = capsys.readouterr()
    assert 'DivergenceError' in out.out.splitlines()[1] and 'DivergenceError' in out.err


def test_classify(capsys):
    assert main(['classify', '--p', HYP]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == 'PeriodicAdmissible zeros=2' and 'midpoint=A' in out
    assert main(['classify', '--p', '0.5']) == 0
    assert capsys.readouterr().out.startswith('QuasiPeriodic')


def test_spectrum_flat(capsys):
    assert main(['spectrum', '--metric', f'flat:{2*math.pi!r}', '--grid', '256']) == 0
    out = dict(kv.split('=') for kv in capsys.readouterr().out.split())
    assert abs(float(out['lambda1']) - 1) < 1e-8 and out['k'] == '0'
    np.testing.assert_allclose(float(out['product']), 2*math.pi**2, rtol=1e-8)


def test_fast_checks():
    for n in ('target-constant', 'first-integrals', 'special-periods', 'admissibility'):
        ok, vals = CHECKS[n]()
        assert ok, vals


@pytest.mark.slow
def test_find_p(capsys):
    assert main(['find-p', '--ratio', '3/2']) == 0
    out = capsys.readouterr().out.split()
    assert out[0].startswith('p=') and abs(float(out[1][2:]) - 1.5) <= 1e-11


@pytest.mark.slow
def test_verify_quick(tmp_path, capsys):
    "point checks pass; the YAML report lands in --out"
    from kleinspec.report import Report
    out = tmp_path/'report.yaml'
    assert main(['verify', '--quick', '--out', str(out)]) == EXIT_OK
    rep = Report.load(out)
    assert rep.passed and rep.counts()['FAIL'] == 0
    assert 'PASS=' in capsys.readouterr().out


@pytest.mark.slow
def test_run_checks_small_grid_warns(capsys):
    rep = run_checks(grid=128, quick=True)
    assert rep.passed
    assert all(s in ('PASS', 'WARN') for _, _, s, _ in rep.checks)


def test_verify_to_stdout_keeps_progress_on_stderr(monkeypatch, capsys):
    "with --out - the YAML report owns stdout and progress moves to stderr"
    import yaml
    import kleinspec.cli as cli
    from kleinspec.report import Report
    def fake_checks(grid, quick, out):
        print('[1/1] target-constant...', file=out)
        return Report().meta('grid', grid).check('target-constant', True, value=1.)
    monkeypatch.setattr(cli, 'run_checks', fake_checks)
    assert main(['verify', '--quick', '--grid', '128']) == EXIT_OK
    o = capsys.readouterr()
    assert '[1/1]' in o.err and '[1/1]' not in o.out
    d = yaml.safe_load(o.out)
    assert d['grid'] == 128 and d['passed'] and d['checks'][0]['status'] == 'PASS'


def test_spectrum_g0(capsys):
    "the closed-form extremal metric has λ1 = 2 and λ1·A = 12πE(8/9)"
    from kleinspec.elliptic import target_constant
    assert main(['spectrum', '--metric', 'g0']) == 0
    out = dict(kv.split('=') for kv in capsys.readouterr().out.split())
    assert abs(float(out['lambda1']) - 2) < 1e-5
    np.testing.assert_allclose(float(out['product']), target_constant(), rtol=1e-5)
