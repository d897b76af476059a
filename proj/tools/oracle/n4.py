"""n = 4 cases b) and c) of the mixed pairing, for A = 0 and A = c(X)."""
import sympy as sp
from sympy import I as iu

from blade import Cl, c, dxi, h, piplus, trace_product

import blade

B = blade.init(4)
X = sp.symbols("X1:5")


def q1():
    return B.cxi * (iu / B.q)


def q2(sig0):
    return (B.cxi * sig0 * B.cxi) * (1 / B.q**2) + B.cxi * B.cn * (B.dxnc * B.q - B.cxi * h) * (1 / B.q**3)


def cases(a, astar):
    Cl.n = B.n  # the blade product and trace read the dimension from Cl
    b = -iu * B.bint(trace_product(piplus(q2(B.b01 + B.b02 + a)), dxi(q1())))
    cc = -iu * B.bint(trace_product(piplus(q1()), dxi(q2(B.b01 + B.b02 + astar))))
    return sp.simplify(b), sp.simplify(cc)


if __name__ == "__main__":
    ax = Cl()
    for j in range(4):
        ax = ax + c(j) * X[j]
    print("A=0 (b, c), in units of Omega dx':", cases(Cl(), Cl()))
    print("A=c(X) (b, c):", cases(ax, -ax))
