#include "ncres/xi_rational.hpp"
#include "ncres/wick.hpp"

namespace ncres {

ScalarExpr line_integral(const XiScalar& f_in) {
    XiScalar f = f_in.reduced();
    if (f.is_zero()) return 0;
    if (f.degree() > f.a + f.b - 2)
        throw std::invalid_argument("line_integral: improper integrand " + f.str());
    if (f.a == 0) return 0;
    auto g = f.laurent_head(true);
    return g[f.a - 1] * (Gauss(2) * Gauss::I()) * pi_tok();
}

XiScalar trace(const XiClifford& f) {
    return f.map<ScalarExpr>([](const CliffordElem& c) { return trace(c); });
}

}  // namespace ncres
