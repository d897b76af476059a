"""Compare the oracle with the engine's frozen boundary case values; exit 1 on mismatch."""
import sys

import sympy as sp

from blade import Cl, c, h

import n4
import n6

failed = []


def expect(name, got, want):
    ok = sp.simplify(got - want) == 0
    print(("ok   " if ok else "FAIL ") + name + ": " + str(sp.simplify(got)))
    if not ok:
        failed.append(name)


pi = sp.pi
X4 = sp.symbols("X1:5")
b, cc = n4.cases(Cl(), Cl())
expect("n=4 b) A=0", b, 9 * pi * h / 2)
expect("n=4 c) A=0", cc, -9 * pi * h / 2)
ax = Cl()
for j in range(4):
    ax = ax + c(j) * X4[j]
b, cc = n4.cases(ax, -ax)
# 1/4 tr[A c(dxn)] = -4 g(X,dxn) for A = c(X)
expect("n=4 b) A=c(X)", b, pi * (9 * h / 2 - 4 * X4[3]))
expect("n=4 c) A=c(X)", cc, pi * (-9 * h / 2 - 4 * X4[3]))

b, cc = n6.cases(Cl(), Cl())
expect("n=6 b) A=0", b, -85 * pi * h / 2)
expect("n=6 c) A=0", cc, 55 * pi * h / 2)
X6 = n6.X
b, cc = n6.cases(n6.ax, -n6.ax)
# -3/8 tr[A c(dxn)] + 1/16 tr[A* c(dxn)] = 28 g(X,dxn) and 1/4 tr[A c(dxn)] = -16 g(X,dxn)
expect("n=6 b) A=c(X)", b, pi * (-85 * h / 2 + 28 * X6[5]))
expect("n=6 c) A=c(X)", cc, pi * (55 * h / 2 - 16 * X6[5]))

sys.exit(1 if failed else 0)
