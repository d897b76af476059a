#pragma once

#include "ncres/wick.hpp"

#include <string>

namespace ncres {

// SQ: D_A^2, STAR: D_A* D_A, SQ4 / STAR4: the n = 6 interiors of D_A^4 and (D_A* D_A)^2
enum class InteriorVariant { SQ, STAR, SQ4, STAR4 };

std::string variant_name(InteriorVariant v);
InteriorVariant variant_from_string(const std::string& s);

struct InteriorReport {
    int n{4};
    InteriorVariant variant{InteriorVariant::STAR};
    ScalarExpr prefactor;  // (n-2)(4 pi)^{n/2} / (n/2-1)!
    ScalarExpr integrand;  // fiber trace of the second heat coefficient, TR_ID symbolic
    ScalarExpr value;      // prefactor * integrand with TR_ID = 2^n
};

ScalarExpr interior_prefactor(int n);

InteriorReport interior_integrand(int n, InteriorVariant v, const PerturbationSpec& a);

// wick_trace[cb(e_i) cb(e_j) c(e_k) c(e_l)] for basis indices 1..n
ScalarExpr curvature_trace(int i, int j, int k, int l);

// sum over i,j,k,l of R_{ijkl} times the trace above for a random tensor
// antisymmetric in (i,j); exactly 0
ScalarExpr curvature_term_vanishes(int n, unsigned seed = 11);

}  // namespace ncres
