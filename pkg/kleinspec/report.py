"""Fluent builders for the YAML verification report and SVG 1.1 line plots"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../nbs/08_report.ipynb.

# %% auto #0
__all__ = ['STATUSES', 'Report', 'Svg']

# %% ../nbs/08_report.ipynb #a2c9e4f1
import io
import yaml, matplotlib
from matplotlib.figure import Figure
from matplotlib.backends.backend_svg import FigureCanvasSVG
from fastcore.all import Path, L

# %% ../nbs/08_report.ipynb #6b1d08e3
STATUSES = ('PASS', 'FAIL', 'WARN')

def _plain(v):
    'numpy scalars and tuples to plain YAML types'
    if isinstance(v, dict): return {k: _plain(x) for k, x in v.items()}
    if isinstance(v, (list, tuple, L)): return [_plain(x) for x in v]
    if hasattr(v, 'item'): return v.item()
    return v

class Report(L):
    'Fluent builder for a verification report: metadata plus named checks with status and values'
    def _add(self, item): return self._new(self.items + [item])
    def meta(self, key, value): return self._add(('meta', key, _plain(value)))

    def check(self, name, passed, warn=False, **values):
        'Record a check; `warn` downgrades a failure to WARN'
        status = 'PASS' if passed else 'WARN' if warn else 'FAIL'
        return self._add(('check', name, status, _plain(values)))

    @property
    def checks(self): return self.filter(lambda o: o[0] == 'check')
    @property
    def passed(self): return all(o[2] != 'FAIL' for o in self.checks)
    def counts(self): return {s: len(self.checks.filter(lambda o: o[2] == s)) for s in STATUSES}

    def to_dict(self):
        d = {n: v for t, n, v in (o for o in self if o[0] == 'meta')}
        d['checks'] = [dict(name=n, status=s, **v) for _, n, s, v in self.checks]
        d['passed'] = self.passed
        return d

    @classmethod
    def load(cls, path='report.yaml'):
        d = yaml.safe_load(Path(path).read_text())
        it = [('meta', k, v) for k, v in d.items() if k not in ('checks', 'passed')]
        for c in d.get('checks') or []:
            c = dict(c)
            it.append(('check', c.pop('name'), c.pop('status'), c))
        return cls(it)

    def __str__(self):  return yaml.dump(self.to_dict(), default_flow_style=False, sort_keys=False)
    def __repr__(self): return str(self)
    def save(self, path='report.yaml'): Path(path).write_text(str(self))

    def table(self) -> str:
        'Human-readable status table, one check per line'
        w = max([len(o[1]) for o in self.checks] + [5])
        rows = [f'{s:<5} {n:<{w}} ' + ' '.join(f'{k}={v}' for k, v in d.items() if k != 'error') +
                (f' error={d["error"]}' if 'error' in d else '') for _, n, s, d in self.checks]
        c = self.counts()
        rows.append(' '.join(f'{s}={c[s]}' for s in STATUSES))
        return '\n'.join(rows)

# %% ../nbs/08_report.ipynb #f07c3b95
# fixed id salt and no timestamp: identical items give identical bytes
_SVG_RC = {'svg.hashsalt': 'kleinspec', 'svg.fonttype': 'none'}

class Svg(L):
    'Fluent builder for a deterministic SVG 1.1 line plot, rendered by matplotlib'
    def __init__(self, items=None, width=640, height=400):
        self.width, self.height = width, height
        super().__init__(items or [])

    def _new(self, items, **kw):
        s = type(self)(width=self.width, height=self.height)
        s.items = items
        return s

    def _add(self, item): return self._new(self.items + [item])
    def title(self, text): return self._add(('title', str(text)))
    def labels(self, x, y): return self._add(('labels', str(x), str(y)))
    def line(self, xs, ys, label=None): return self._add(('line', [float(x) for x in xs], [float(y) for y in ys], label))
    def hline(self, y, label=None): return self._add(('hline', float(y), label))

    def figure(self) -> Figure:
        'A matplotlib `Figure` (size in points) drawing every item in order'
        fig = Figure(figsize=(self.width/72, self.height/72), dpi=72)
        FigureCanvasSVG(fig)
        ax = fig.add_subplot()
        for o in self:
            if o[0] == 'title': ax.set_title(o[1])
            elif o[0] == 'labels': ax.set_xlabel(o[1]); ax.set_ylabel(o[2])
            elif o[0] == 'line': ax.plot(o[1], o[2], lw=1.5, label=o[3])
            elif o[0] == 'hline': ax.axhline(o[1], color='gray', ls='--', lw=1, label=o[2])
        if any(o[0] in ('line', 'hline') and o[-1] for o in self): ax.legend(loc='best')
        return fig

    def __str__(self):
        buf = io.StringIO()
        with matplotlib.rc_context(_SVG_RC): self.figure().savefig(buf, format='svg', metadata={'Date': None})
        return buf.getvalue()

    def save(self, path='plot.svg'): Path(path).write_text(str(self))
