#pragma once

#include "ncres/clifford.hpp"
#include "ncres/wick.hpp"
#include "ncres/xi_rational.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace ncres {

// Geometry at the boundary point x0 in normalized coordinates,
// g = dx_n^2 + g^{dM}/h(x_n) with h(0) = 1.  Indices run 1..n, e_n = dx_n.
struct BoundaryData {
    int n{4};
    std::map<std::tuple<int, int, int>, ScalarExpr> omega;        // (i,s,t): omega_{s,t}(e_i)
    std::map<std::tuple<int, int, int>, ScalarExpr> christoffel;  // (k,s,t): Gamma^k_{st}
    std::vector<ScalarExpr> gamma;                                // Gamma^k, slot k-1
    std::vector<ScalarExpr> d_norm2;                              // d_{x_j}|xi|^2 on |xi'| = 1
    ScalarExpr dc_scale;                                          // d_{x_n} c(xi') = dc_scale c(xi')
    CliffordElem b01, b02;
    ScalarExpr c0;                                                // b02 = c0 c(dx_n)
    std::vector<CliffordElem> sigma_up, a_up;                     // sigma^k, a^k, slot k-1

    VectorSym vec(int i) const { return i == n ? VectorSym::dxn() : VectorSym::basis(i); }
    ScalarExpr omega_at(int i, int s, int t) const;
};

const BoundaryData& boundary_data(int n);

enum class OpTag { DA, DAstar, InvDA, InvDAstar, Triple, Cube, InvTriple, InvCube };

std::string op_tag_name(OpTag t);
OpTag op_tag_from_string(const std::string& s);

// value with its x_n derivative and the (common) x_j derivative for j < n
struct Jet {
    XiClifford v, dn, dt;

    static Jet constant(const XiClifford& c) { return {c, {}, {}}; }
    Jet operator+(const Jet& o) const { return {v + o.v, dn + o.dn, dt + o.dt}; }
    Jet operator-(const Jet& o) const { return {v - o.v, dn - o.dn, dt - o.dt}; }
    friend Jet operator*(const Jet& x, const Jet& y) {
        return {x.v * y.v, x.dn * y.v + x.v * y.dn, x.dt * y.v + x.v * y.dt};
    }
    friend Jet operator*(Jet x, const Gauss& g) { return {x.v * g, x.dn * g, x.dt * g}; }
};

// elementary x0 quantities as functions of x = xi_n on |xi'| = 1
struct XiBasics {
    const BoundaryData* bd;
    XiClifford cxi;      // c(xi) = c(xi') + x c(dx_n)
    XiClifford cxi_p;    // c(xi')
    XiClifford cdxn;     // c(dx_n)
    XiClifford dcp;      // d_{x_n} c(xi')
    XiClifford norm2;    // |xi|^2

    explicit XiBasics(const BoundaryData& b);
    Jet cxi_jet() const;
    Jet inv_norm_jet(int k) const;  // |xi|^{-2k}
    Jet norm_jet(int k) const;      // |xi|^{2k}
    XiClifford lift(const CliffordElem& e) const { return XiClifford::constant(e); }
};

struct OperatorSymbol {
    OpTag tag{OpTag::DA};
    int order{0};
    XiClifford value;
    Jet jet;  // leading orders carry derivatives, lower orders only value
};

OperatorSymbol sigma_order(OpTag tag, int order, const PerturbationSpec& a, int n);

struct InverseCheck {
    XiClifford recursion, closed;
    bool agree{false};
};

// recursion and closed form, asserted equal by exact matrix instantiation;
// throws std::runtime_error on mismatch
OperatorSymbol inverse_symbol(OpTag tag, int order, const PerturbationSpec& a, int n);
InverseCheck inverse_check(OpTag tag, int order, const PerturbationSpec& a, int n);

// the x0 expressions exactly as displayed for q_{-2} (D_A^{-1}, D_A*^{-1})
// and q_{-4} of the triple and cube operators
XiClifford display_symbol(OpTag tag, int order, const PerturbationSpec& a, int n);

// d_{xi_m} pi^+ sigma_{-1}(D_A^{-1}) on |xi'| = 1, m < n
XiClifford d_xi_tangential_leading(int m, int n);

// zero test for Clifford-valued rational functions by exact instantiation
// at random rational data (a nonzero element survives with probability 1)
bool vanishes(const XiClifford& f, int n, const PerturbationSpec& a, unsigned seed = 7, int trials = 2);
bool vanishes(const CliffordElem& e, int n, const PerturbationSpec& a, unsigned seed = 7, int trials = 2);

}  // namespace ncres
