"""n = 6 cases b) and c) of the pairing with the triple operator."""
import sympy as sp
from sympy import I as iu

from blade import Cl, c, cb, dxi, h, piplus, trace_product, x

import blade

B = blade.init(6)
X = sp.symbols("X1:7")
ax = Cl()
for j in range(6):
    ax = ax + c(j) * X[j]

cbxp = Cl()
for k in range(B.m):
    cbxp = cbxp + cb(k) * B.xs[k]
cbn = cb(B.n - 1)
n2 = B.q


def sigma2(a, astar):
    # order-2 symbol of the triple operator at x0
    base = B.cn * h + B.cxi * (B.cxp * B.cn * h - cbxp * cbn * h - B.one * (5 * h * x)) + (B.b01 + B.b02) * n2
    return base + (a * n2 - B.cxi * astar * B.cxi) * 2 + astar * n2


def q4(a, astar):
    # q_{-4} = -q_{-3} sigma_2 q_{-3} plus the x_n-derivative terms of sigma_3
    return B.cxi * sigma2(a, astar) * B.cxi * (1 / B.q**4) + B.cxi * (
        B.cn * B.dxnc * B.q - B.cn * B.cxi * (2 * h) + B.cxi * B.dxnc * (2 * x) + B.one * (4 * x * h)
    ) * (1 / B.q**4)


q1 = B.cxi * (iu / B.q)
q3 = B.cxi * (iu / B.q**2)


def q2(sig0):
    return (B.cxi * sig0 * B.cxi) * (1 / B.q**2) + B.cxi * B.cn * (B.dxnc * B.q - B.cxi * h) * (1 / B.q**3)


def cases(a, astar):
    Cl.n = B.n  # the blade product and trace read the dimension from Cl
    b = -iu * B.bint(trace_product(piplus(q1), dxi(q4(a, astar))))
    cc = -iu * B.bint(trace_product(piplus(q2(B.b01 + B.b02 + a)), dxi(q3)))
    return sp.simplify(b), sp.simplify(cc)


if __name__ == "__main__":
    print("A=0 (b, c), in units of Omega dx':", cases(Cl(), Cl()), flush=True)
    print("A=c(X) (b, c):", cases(ax, -ax))
