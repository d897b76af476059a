#pragma once

#include "ncres/scalar.hpp"

namespace ncres {

// Integral over the unit sphere of R^m (m = n - 1) of a polynomial in the
// g(V, xi') tokens.  Odd degrees vanish; 2d-th moments follow the pairing
// rule Omega / (m (m+2) ... (m+2d-2)) * sum over pairings of g_tan.
ScalarExpr integrate_sphere(const ScalarExpr& integrand, int m);

// g(V,W) - g(V,dxn) g(W,dxn)
ScalarExpr tangential_pairing(const std::string& v, const std::string& w);

// vol(S^{n-2}) for n in {4, 6}
double omega_value(int n);

}  // namespace ncres
