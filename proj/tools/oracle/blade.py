"""Independent Clifford-blade oracle for the boundary case values.

Elements are dicts over (c-mask, cb-mask) blades with sympy coefficients in
xi_n (x), h = h'(0) and the tangential unit covector k1..k_{n-1}.  It shares
no code with the C++ engine: products use blade sign rules rather than Wick
contraction or matrices.
"""
from types import SimpleNamespace

import sympy as sp
from sympy import I as iu

x, h = sp.symbols("x h")


def _popcount(v):
    return bin(v).count("1")


def _reorder_sign(a, b, n):
    s = 0
    for j in range(n):
        if b >> j & 1:
            s += _popcount(a >> (j + 1))
    return -1 if s & 1 else 1


class Cl:
    n = 4

    def __init__(self, d=None):
        self.d = {k: v for k, v in (d or {}).items() if v != 0}

    def __add__(self, o):
        d = dict(self.d)
        for k, v in o.d.items():
            d[k] = d.get(k, 0) + v
        return Cl(d)

    def __neg__(self):
        return Cl({k: -v for k, v in self.d.items()})

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, o):
        if not isinstance(o, Cl):
            return Cl({k: v * o for k, v in self.d.items()})
        d = {}
        for (c1, b1), v1 in self.d.items():
            for (c2, b2), v2 in o.d.items():
                # c squares to -1, cb to +1, c and cb anticommute
                sign = -1 if _popcount(b1) * _popcount(c2) % 2 else 1
                sign *= _reorder_sign(c1, c2, Cl.n)
                if _popcount(c1 & c2) % 2:
                    sign = -sign
                sign *= _reorder_sign(b1, b2, Cl.n)
                k = (c1 ^ c2, b1 ^ b2)
                d[k] = d.get(k, 0) + sign * v1 * v2
        return Cl(d)

    def __rmul__(self, o):
        return Cl({k: v * o for k, v in self.d.items()})

    def map(self, f):
        return Cl({k: f(v) for k, v in self.d.items()})

    def tr(self):
        return self.d.get((0, 0), 0) * 2**Cl.n


def c(j):
    return Cl({(1 << j, 0): 1})


def cb(j):
    return Cl({(0, 1 << j): 1})


_t = sp.Symbol("t")


def _principal_term(f):
    num, den = sp.fraction(sp.cancel(f))
    p = sp.Poly(sp.expand(num.subs(x, iu + _t)), _t)
    d = sp.Poly(sp.expand(den.subs(x, iu + _t)), _t)
    dc = d.all_coeffs()[::-1]
    a = next(k for k, v in enumerate(dc) if v != 0)
    dc = dc[a:]
    pc = p.all_coeffs()[::-1]
    out = {}
    ser = []
    for k in range(a):
        acc = pc[k] if k < len(pc) else 0
        for j in range(1, min(k, len(dc) - 1) + 1):
            acc -= dc[j] * ser[k - j]
        ser.append(acc / dc[0])
        out[a - k] = ser[-1]
    return out


def _principal(f):
    """Principal part of f at x = i as {k: coefficient of (x - i)^-k}, one additive term at a time."""
    out = {}
    for term in sp.Add.make_args(sp.expand(f)):
        for k, v in _principal_term(term).items():
            out[k] = out.get(k, 0) + v
    return {k: sp.expand(v) for k, v in out.items() if sp.expand(v) != 0}


def _pp_plus(f):
    return sum(v / (x - iu) ** k for k, v in _principal(f).items())


def trace_product(p, q):
    """tr(p q) using only the blade pairs that multiply to a scalar."""
    tot = 0
    for k, v1 in p.d.items():
        v2 = q.d.get(k)
        if v2 is not None:
            tot += (Cl({k: 1}) * Cl({k: 1})).d.get((0, 0), 0) * v1 * v2
    return tot * 2**Cl.n


def piplus(p):
    return p.map(_pp_plus)


def dxi(p):
    return p.map(lambda e: sp.diff(e, x))


def init(n):
    """Boundary data at x0 for the metric dx_n^2 + h(x_n) g' with h'(0) = h."""
    Cl.n = n
    m = n - 1
    xs = sp.symbols("k1:%d" % n)
    one = Cl({(0, 0): 1})
    cxp = Cl()
    for k in range(m):
        cxp = cxp + c(k) * xs[k]
    cn = c(n - 1)
    b01, b02 = Cl(), Cl()
    for i in range(m):
        for s, t, v in [(n - 1, i, h / 2), (i, n - 1, -h / 2)]:
            b01 = b01 + c(i) * cb(s) * cb(t) * (v / 4)
            b02 = b02 - c(i) * c(s) * c(t) * (v / 4)

    def sphere(expr):
        expr = sp.expand(expr)
        if expr == 0:
            return 0
        tot = 0
        for mon, co in sp.Poly(expr, *xs).terms():
            if any(e % 2 for e in mon):
                continue
            num = 1
            for e in mon:
                num *= sp.factorial2(e - 1) if e > 0 else 1
            den = 1
            for j in range(sum(mon) // 2):
                den *= m + 2 * j
            tot += co * sp.Rational(num, den)
        return tot

    def bint(expr):
        # xi_n line integral by the residue at +i, then the sphere average (in units of Omega)
        res = _principal(expr).get(1, 0)
        return sp.simplify(sphere(sp.expand(2 * sp.pi * iu * res)))

    return SimpleNamespace(
        n=n, m=m, xs=xs, one=one, cxp=cxp, cn=cn, cxi=cxp + cn * x, q=1 + x**2,
        dxnc=cxp * (h / 2), b01=b01, b02=b02, sphere=sphere, bint=bint,
    )
