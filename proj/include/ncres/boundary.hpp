#pragma once

#include "ncres/symbols.hpp"

#include <map>
#include <string>
#include <vector>

namespace ncres {

// Derived: inverse symbols from the recursion / closed form;
// Display: the printed x0 expressions for the order -2 and -4 symbols
enum class SymbolSource { Derived, Display };

struct CaseSpec {
    std::string label;  // "a)I", "a)II", "a)III", "b)", "c)"
    int index{0};       // 1..5
    int r{0}, l{0}, j{0}, k{0}, alpha{0};
    OpTag t1{OpTag::InvDA}, t2{OpTag::InvDA};

    int residual(int n) const { return r + l - k - j - alpha - 1 + n; }
};

std::vector<CaseSpec> enumerate_cases(int n, OpTag t1, OpTag t2);

struct CaseResult {
    CaseSpec spec;
    Gauss prefactor;
    XiClifford left, right;  // for |alpha| = 1 the e_1 component
    XiScalar trace;          // traced integrand summed over alpha, TR_ID symbolic
    XiScalar trace_ibp;      // j = k = |alpha| = 0 only: trace[d_xi_n(left) * right], integrates to -trace
    ScalarExpr value;        // prefactor * sphere * line integral * dx', TR_ID = 2^n
    // named pieces of the integrand: Clifford parts and their traces
    std::map<std::string, XiClifford> parts;
    std::map<std::string, XiScalar> part_traces;
};

CaseResult evaluate_case(const CaseSpec& c, const PerturbationSpec& a, int n,
                         SymbolSource src = SymbolSource::Derived);

struct BoundaryReport {
    int n{4};
    OpTag t1{OpTag::InvDA}, t2{OpTag::InvDA};
    SymbolSource source{SymbolSource::Derived};
    std::vector<CaseResult> cases;
    ScalarExpr total;
};

// evaluated for generic A, then specialized to the given perturbation
BoundaryReport boundary_total(int n, OpTag t1, OpTag t2, const PerturbationSpec& a,
                              SymbolSource src = SymbolSource::Derived);

// the same report with every case value specialized to a concrete A
BoundaryReport specialize(const BoundaryReport& generic, const PerturbationSpec& a);

// average over the unit sphere of R^{n-1}, coefficient-wise (Omega -> 1)
XiScalar sphere_average(const XiScalar& f, int n);

// fiber-trace normalization: TR_ID -> 2^n
ScalarExpr fix_trid(const ScalarExpr& e, int n);
XiScalar fix_trid(const XiScalar& f, int n);

}  // namespace ncres
