"""Complete elliptic integrals K, E, Π (AGM and Carlson forms) and the extremal λ1·A constant"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../nbs/01_elliptic.ipynb.

# %% auto #0
__all__ = ['EllipticArgs', 'parameter', 'ellip_k', 'ellip_e', 'complete_elliptic', 'carlson_rf', 'carlson_rc', 'carlson_rj',
           'complete_elliptic_pi', 'target_constant']

# %% ../nbs/01_elliptic.ipynb #a4d0c1f2
import math, sys
from fastcore.all import store_attr, basic_repr
from .core import DomainError, DivergenceError

# %% ../nbs/01_elliptic.ipynb #6e0b8a51
_EPS = sys.float_info.epsilon
_M_MAX = 1 - 1e-12

class EllipticArgs:
    'Parameter m = k² in [0,1] and characteristic n < 1'
    def __init__(self, m:float, n:float=0.):
        if not 0 <= m <= 1: raise DomainError(f'parameter m must lie in [0, 1], got {m!r}')
        if not n < 1: raise DomainError(f'characteristic n must be < 1, got {n!r}')
        store_attr()
    __repr__ = basic_repr('m,n')

def parameter(k:float) -> float:
    'Parameter m from the modulus k: integrals here take m, so E(k=2√2/3) is `ellip_e(8/9)`'
    return k*k

# %% ../nbs/01_elliptic.ipynb #02c7f9b3
def _agm(m):
    'AGM limit and Σ 2^(n-1) c_n² for a0=1, b0=√(1-m)'
    a, b = 1., math.sqrt(1 - m)
    s, pw = m/2, .5
    while abs(a - b) > 2*_EPS*a:
        c = (a - b)/2
        a, b = (a + b)/2, math.sqrt(a*b)
        pw *= 2
        s += pw*c*c
    return a, s

def ellip_k(m:float) -> float:
    'Complete elliptic integral of the first kind K(m)'
    EllipticArgs(m)
    if m > _M_MAX: raise DivergenceError(f'K(m) diverges as m -> 1, got m={m!r}')
    a, _ = _agm(m)
    return math.pi/(2*a)

def ellip_e(m:float) -> float:
    'Complete elliptic integral of the second kind E(m); E(1) = 1'
    EllipticArgs(m)
    if m > _M_MAX: return 1. if m == 1 else _e_near_one(m)
    a, s = _agm(m)
    return math.pi/(2*a)*(1 - s)

def _e_near_one(m):
    # E(m) = 1 + (m1/2)(ln(4/√m1) - 1/2) + O(m1² ln m1), m1 = 1-m < 1e-12
    m1 = 1 - m
    return 1 + m1/2*(math.log(4/math.sqrt(m1)) - .5)

def complete_elliptic(m:float) -> tuple:
    'Both complete integrals (K, E) at parameter m'
    return ellip_k(m), ellip_e(m)

# %% ../nbs/01_elliptic.ipynb #d1e94f60
def carlson_rf(x, y, z):
    'Carlson R_F(x,y,z) by duplication; at most one argument may be zero'
    x0, y0 = x, y
    A0 = A = (x + y + z)/3
    Q = (3*_EPS)**(-1/8)*max(abs(A0 - x), abs(A0 - y), abs(A0 - z))
    f = 1.
    while Q*f >= abs(A):
        sx, sy, sz = math.sqrt(x), math.sqrt(y), math.sqrt(z)
        lam = sx*sy + sx*sz + sy*sz
        x, y, z, A = (x + lam)/4, (y + lam)/4, (z + lam)/4, (A + lam)/4
        f /= 4
    X = (A0 - x0)*f/A
    Y = (A0 - y0)*f/A
    Z = -(X + Y)
    E2, E3 = X*Y - Z*Z, X*Y*Z
    return (1 + E3*(1/14 + 3*E3/104) + E2*(-1/10 + E2/24 - 3*E3/44 - 5*E2*E2/208 + E2*E3/16))/math.sqrt(A)

def carlson_rc(x, y):
    'Degenerate Carlson R_C(x,y) = R_F(x,y,y), x ≥ 0, y > 0'
    if x == y: return 1/math.sqrt(x)
    if y > x:
        d = y - x
        return math.atan(math.sqrt(d/x))/math.sqrt(d) if x > 0 else math.pi/(2*math.sqrt(y))
    d = x - y
    return math.atanh(math.sqrt(d/x))/math.sqrt(d)

def _rc1(e):
    'R_C(1, 1+e) with a series for tiny |e|'
    if abs(e) < 1e-10: return 1 - e/3 + e*e/5
    return carlson_rc(1., 1 + e)

def carlson_rj(x, y, z, p):
    'Carlson R_J(x,y,z,p) for x,y,z ≥ 0 (at most one zero) and p > 0'
    x0, y0, z0 = x, y, z
    A0 = A = (x + y + z + 2*p)/5
    delta = (p - x)*(p - y)*(p - z)
    Q = (_EPS/5)**(-1/8)*max(abs(A0 - x), abs(A0 - y), abs(A0 - z), abs(A0 - p))
    f, s = 1., 0.
    while f*Q >= A:
        rx, ry, rz, rp = math.sqrt(x), math.sqrt(y), math.sqrt(z), math.sqrt(p)
        D = (rp + rx)*(rp + ry)*(rp + rz)
        s += f/D*_rc1(delta/(D*D))
        lam = rx*ry + rx*rz + ry*rz
        x, y, z, p, A = (x + lam)/4, (y + lam)/4, (z + lam)/4, (p + lam)/4, (A + lam)/4
        delta /= 64
        f /= 4
    X, Y, Z = f*(A0 - x0)/A, f*(A0 - y0)/A, f*(A0 - z0)/A
    P = -(X + Y + Z)/2
    E2 = X*Y + X*Z + Y*Z - 3*P*P
    E3 = X*Y*Z + 2*E2*P + 4*P**3
    E4 = (2*X*Y*Z + E2*P + 3*P**3)*P
    E5 = X*Y*Z*P*P
    ser = (1 - 3*E2/14 + E3/6 + 9*E2*E2/88 - 3*E4/22 - 9*E2*E3/52 + 3*E5/26 - E2**3/16
           + 3*E3*E3/40 + 3*E2*E4/20 + 45*E2*E2*E3/272 - 9*(E3*E4 + E2*E5)/68)
    return f*A**-1.5*ser + 6*s

# %% ../nbs/01_elliptic.ipynb #f3b7e21c
def complete_elliptic_pi(n:float, m:float) -> float:
    'Complete elliptic integral of the third kind Π(n, m) = ∫ dθ / ((1 - n sin²θ) √(1 - m sin²θ)) over [0, π/2]'
    EllipticArgs(m, n)
    if m >= 1: raise DomainError(f'Π(n, m) needs m < 1, got m={m!r}')
    rf = carlson_rf(0., 1 - m, 1.)
    return rf if n == 0 else rf + n/3*carlson_rj(0., 1 - m, 1., 1 - n)

def target_constant() -> float:
    'Extremal value λ1·A = 12π E(k=2√2/3) = 12π E(m=8/9)'
    return 12*math.pi*ellip_e(8/9)
