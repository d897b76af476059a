#include "ncres/symbols.hpp"
#include "ncres/matrix.hpp"

#include <memory>
#include <mutex>
#include <random>
#include <stdexcept>

namespace ncres {

ScalarExpr BoundaryData::omega_at(int i, int s, int t) const {
    auto it = omega.find({i, s, t});
    return it == omega.end() ? ScalarExpr() : it->second;
}

namespace {

BoundaryData build_boundary_data(int n) {
    BoundaryData bd;
    bd.n = n;
    const ScalarExpr hp = hprime_tok();
    const ScalarExpr half_hp = hp * Gauss::frac(1, 2);
    for (int i = 1; i < n; ++i) {
        bd.omega[{i, n, i}] = half_hp;
        bd.omega[{i, i, n}] = -half_hp;
        bd.christoffel[{n, i, i}] = half_hp;
        bd.christoffel[{i, n, i}] = -half_hp;
        bd.christoffel[{i, i, n}] = -half_hp;
    }
    bd.gamma.assign(n, ScalarExpr());
    for (const auto& [key, v] : bd.christoffel) {
        auto [k, s, t] = key;
        if (s == t) bd.gamma[k - 1] += v;
    }
    bd.d_norm2.assign(n, ScalarExpr());
    bd.d_norm2[n - 1] = hp;
    bd.dc_scale = half_hp;

    for (const auto& [key, w] : bd.omega) {
        auto [i, s, t] = key;
        CliffordElem ci = CliffordElem::c(bd.vec(i));
        bd.b01 += ci * CliffordElem::cb(bd.vec(s)) * CliffordElem::cb(bd.vec(t)) * (w * Gauss::frac(1, 4));
        bd.b02 += ci * CliffordElem::c(bd.vec(s)) * CliffordElem::c(bd.vec(t)) * (w * Gauss::frac(-1, 4));
    }
    // b02 = c0 c(dx_n): read c0 off the trace against c(dx_n), c(dx_n)^2 = -1
    ScalarExpr t = trace(bd.b02 * CliffordElem::c(VectorSym::dxn()));
    bd.c0 = -t.coefficient_of(Token::trid());

    bd.sigma_up.assign(n, CliffordElem());
    bd.a_up.assign(n, CliffordElem());
    for (const auto& [key, w] : bd.omega) {
        auto [k, s, tt] = key;
        bd.sigma_up[k - 1] += CliffordElem::c(bd.vec(s)) * CliffordElem::c(bd.vec(tt)) * (w * Gauss::frac(-1, 4));
        bd.a_up[k - 1] += CliffordElem::cb(bd.vec(s)) * CliffordElem::cb(bd.vec(tt)) * (w * Gauss::frac(1, 4));
    }
    return bd;
}

}  // namespace

const BoundaryData& boundary_data(int n) {
    if (n != 4 && n != 6) throw std::invalid_argument("boundary_data: unsupported dimension " + std::to_string(n));
    static std::mutex mu;
    static std::map<int, std::unique_ptr<BoundaryData>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<BoundaryData>(build_boundary_data(n));
    return *slot;
}

std::string op_tag_name(OpTag t) {
    switch (t) {
        case OpTag::DA: return "D_A";
        case OpTag::DAstar: return "D_A*";
        case OpTag::InvDA: return "INV(D_A)";
        case OpTag::InvDAstar: return "INV(D_A*)";
        case OpTag::Triple: return "TRIPLE";
        case OpTag::Cube: return "CUBE";
        case OpTag::InvTriple: return "INV_TRIPLE";
        case OpTag::InvCube: return "INV_CUBE";
    }
    return "?";
}

OpTag op_tag_from_string(const std::string& s) {
    for (OpTag t : {OpTag::DA, OpTag::DAstar, OpTag::InvDA, OpTag::InvDAstar, OpTag::Triple, OpTag::Cube,
                    OpTag::InvTriple, OpTag::InvCube})
        if (op_tag_name(t) == s) return t;
    throw std::invalid_argument("unknown operator tag " + s);
}

XiBasics::XiBasics(const BoundaryData& b) : bd(&b) {
    cxi_p = XiClifford::constant(CliffordElem::c(VectorSym::xi_prime()));
    cdxn = XiClifford::constant(CliffordElem::c(VectorSym::dxn()));
    cxi = cxi_p + XiClifford::monomial(CliffordElem::c(VectorSym::dxn()), 1);
    dcp = lift(CliffordElem(b.dc_scale)) * cxi_p;
    norm2 = XiClifford::norm_pow(1);
}

Jet XiBasics::cxi_jet() const {
    // d_{x_n} c(dx_n) = 0 and all x' derivatives vanish at x0
    return {cxi, dcp, XiClifford()};
}

Jet XiBasics::inv_norm_jet(int k) const {
    XiClifford d = XiClifford::inv_norm(k + 1) * Gauss(-k);
    return {XiClifford::inv_norm(k), lift(CliffordElem(bd->d_norm2[bd->n - 1])) * d,
            lift(CliffordElem(bd->d_norm2[0])) * d};
}

Jet XiBasics::norm_jet(int k) const {
    XiClifford d = k ? XiClifford::norm_pow(k - 1) * Gauss(k) : XiClifford();
    return {XiClifford::norm_pow(k), lift(CliffordElem(bd->d_norm2[bd->n - 1])) * d,
            lift(CliffordElem(bd->d_norm2[0])) * d};
}

namespace {

bool first_order(OpTag t) { return t == OpTag::DA || t == OpTag::DAstar || t == OpTag::InvDA || t == OpTag::InvDAstar; }

bool uses_star(OpTag t) { return t == OpTag::DAstar || t == OpTag::InvDAstar; }

OpTag base_of(OpTag t) {
    switch (t) {
        case OpTag::InvDA: return OpTag::DA;
        case OpTag::InvDAstar: return OpTag::DAstar;
        case OpTag::InvTriple: return OpTag::Triple;
        case OpTag::InvCube: return OpTag::Cube;
        default: return t;
    }
}

XiClifford xi_k(const BoundaryData& bd, int k) {
    // k-th covector component on |xi'| = 1: g(e_k, xi') for k < n, xi_n for k = n
    if (k == bd.n) return XiClifford::monomial(CliffordElem::one(), 1);
    return XiClifford::constant(CliffordElem(pairing(VectorSym::basis(k), VectorSym::xi_prime())));
}

// sigma_2 of D_A* D_A D_A* (star = true) or D_A^3
XiClifford sigma2_triple(const BoundaryData& bd, const XiBasics& x, const PerturbationSpec& a, bool triple) {
    const int n = bd.n;
    CliffordElem A = perturbation_elem(a, false);
    CliffordElem As = triple ? perturbation_elem(a, true) : A;

    XiClifford term1;
    for (int l = 1; l <= n; ++l) term1 += x.lift(CliffordElem::c(bd.vec(l)) * bd.d_norm2[l - 1]);

    XiClifford inner;
    for (int k = 1; k <= n; ++k) {
        CliffordElem w = bd.sigma_up[k - 1] * Gauss(4) + bd.a_up[k - 1] * Gauss(4) -
                         CliffordElem(bd.gamma[k - 1]) * Gauss(2);
        inner += x.lift(w) * xi_k(bd, k);
    }
    XiClifford term2 = x.cxi * inner;

    XiClifford term3 = (x.norm2 * x.lift(A) - x.cxi * x.lift(As) * x.cxi) * Gauss(2);

    CliffordElem conn;
    for (const auto& [key, w] : bd.omega) {
        auto [l, s, t] = key;
        CliffordElem cl = CliffordElem::c(bd.vec(l));
        conn += (cl * CliffordElem::cb(bd.vec(s)) * CliffordElem::cb(bd.vec(t)) -
                 cl * CliffordElem::c(bd.vec(s)) * CliffordElem::c(bd.vec(t))) *
                w;
    }
    XiClifford term4 = x.norm2 * x.lift(conn * Gauss::frac(1, 4));
    XiClifford term5 = x.norm2 * x.lift(As);
    return term1 + term2 + term3 + term4 + term5;
}

CliffordElem sigma0(const BoundaryData& bd, const PerturbationSpec& a, bool star) {
    return bd.b01 + bd.b02 + perturbation_elem(a, star);
}

}  // namespace

OperatorSymbol sigma_order(OpTag tag, int order, const PerturbationSpec& a, int n) {
    const BoundaryData& bd = boundary_data(n);
    XiBasics x(bd);
    OperatorSymbol out{tag, order, {}, {}};
    if (first_order(tag) && tag != OpTag::InvDA && tag != OpTag::InvDAstar) {
        if (order == 1) {
            out.jet = x.cxi_jet() * Gauss::I();
        } else if (order == 0) {
            out.jet = Jet::constant(x.lift(sigma0(bd, a, uses_star(tag))));
        } else {
            throw std::invalid_argument("sigma_order: unsupported order for " + op_tag_name(tag));
        }
    } else if (tag == OpTag::Triple || tag == OpTag::Cube) {
        if (order == 3) {
            out.jet = x.cxi_jet() * x.norm_jet(1) * Gauss::I();
        } else if (order == 2) {
            out.jet = Jet::constant(sigma2_triple(bd, x, a, tag == OpTag::Triple));
        } else {
            throw std::invalid_argument("sigma_order: unsupported order for " + op_tag_name(tag));
        }
    } else {
        throw std::invalid_argument("sigma_order: use inverse_symbol for " + op_tag_name(tag));
    }
    out.value = out.jet.v;
    return out;
}

namespace {

struct InverseParts {
    Jet lead;
    XiClifford recursion, closed;
};

InverseParts compute_inverse(OpTag tag, int order, const PerturbationSpec& a, int n) {
    const BoundaryData& bd = boundary_data(n);
    XiBasics x(bd);
    const OpTag base = base_of(tag);
    const bool first = first_order(tag);
    const int lead_order = first ? -1 : -3;
    if (tag == base || (order != lead_order && order != lead_order - 1))
        throw std::invalid_argument("inverse_symbol: unsupported (" + op_tag_name(tag) + ", " + std::to_string(order) + ")");

    // p = i c(xi) |xi|^{2m}; c(xi)^{-1} = -c(xi)/|xi|^2 gives p^{-1} = i c(xi)/|xi|^{2m+2}
    const int m = first ? 0 : 1;
    OperatorSymbol p_lead = sigma_order(base, first ? 1 : 3, a, n);
    Jet inv_c = x.cxi_jet() * x.inv_norm_jet(1) * Gauss(-1);
    Jet lead = inv_c * x.inv_norm_jet(m) * (Gauss(1) / Gauss::I());

    InverseParts out;
    out.lead = lead;
    if (order == lead_order) {
        out.recursion = lead.v;
        out.closed = x.lift(CliffordElem(ScalarExpr(Gauss::I()))) * x.cxi * (first ? XiClifford::inv_norm(1) : XiClifford::inv_norm(2));
        return out;
    }

    // q_{-k-1} = -q_{-k} [p_{k-1} q_{-k} + sum_j d_{xi_j} p_k D_{x_j} q_{-k}],  D_x = -i d_x
    OperatorSymbol p_next = sigma_order(base, first ? 0 : 2, a, n);
    XiClifford bracket = p_next.value * lead.v;
    const Gauss minus_i = -Gauss::I();
    bracket += p_lead.value.derivative() * lead.dn * minus_i;
    for (int j = 1; j < n; ++j) {
        // d_{xi_j} p for j < n, paired with the vanishing x_j derivative
        XiClifford dpj = x.lift(CliffordElem::c(VectorSym::basis(j))) * Gauss::I();
        if (!first) dpj = dpj * x.norm2 + x.cxi * xi_k(bd, j) * Gauss(2) * Gauss::I();
        bracket += dpj * lead.dt * minus_i;
    }
    out.recursion = -(lead.v * bracket);

    const ScalarExpr hp = bd.d_norm2[n - 1];
    if (first) {
        // c(xi) sigma_0 c(xi) / |xi|^4 + c(xi)/|xi|^6 sum_j c(dx_j)[d_j c(xi) |xi|^2 - c(xi) d_j |xi|^2]
        Jet cj = x.cxi_jet();
        XiClifford sum;
        for (int j = 1; j <= n; ++j) {
            const XiClifford& dc = j == n ? cj.dn : cj.dt;
            sum += x.lift(CliffordElem::c(bd.vec(j))) *
                   (dc * x.norm2 - x.cxi * x.lift(CliffordElem(bd.d_norm2[j - 1])));
        }
        out.closed = x.cxi * p_next.value * x.cxi * XiClifford::inv_norm(2) + x.cxi * sum * XiClifford::inv_norm(3);
    } else {
        XiClifford xn = XiClifford::monomial(CliffordElem::one(), 1);
        XiClifford h = x.lift(CliffordElem(hp));
        XiClifford extra = x.norm2 * x.cdxn * x.dcp - h * x.cdxn * x.cxi * Gauss(2) + xn * x.cxi * x.dcp * Gauss(2) +
                           xn * h * Gauss(4);
        out.closed = x.cxi * p_next.value * x.cxi * XiClifford::inv_norm(4) + x.cxi * extra * XiClifford::inv_norm(4);
    }
    return out;
}

Instantiation random_instantiation(int n, const PerturbationSpec& a, std::mt19937& rng) {
    std::uniform_int_distribution<int> small(-4, 4);
    Instantiation inst;
    inst.n = n;
    // rational point on the unit sphere of R^{n-1} by inverse stereographic projection
    std::vector<Rational> u(n - 2);
    Rational q = 0;
    for (auto& v : u) {
        v = Rational(small(rng), 1 + std::abs(small(rng)));
        v.canonicalize();
        q += v * v;
    }
    inst.xi_prime.assign(n, Rational(0));
    for (int i = 0; i < n - 2; ++i) inst.xi_prime[i] = Rational(2) * u[i] / (q + 1);
    inst.xi_prime[n - 2] = (q - 1) / (q + 1);
    for (auto& v : inst.xi_prime) v.canonicalize();
    for (const auto& f : a.field_names()) {
        std::vector<Rational> comps(n);
        for (auto& c : comps) c = small(rng);
        inst.fields[f] = comps;
    }
    if (a.generic) {
        for (const char* name : {"A", "A*"}) {
            CliffMatrix m(n);
            for (size_t i = 0; i < m.dim(); ++i)
                for (size_t j = 0; j < m.dim(); ++j) m.at(i, j) = Gauss(Rational(small(rng)), Rational(small(rng)));
            inst.opaque[name] = m;
        }
    }
    inst.tokens[Token::hprime().str()] = Gauss(Rational(small(rng) * 2 + 1, 3));
    return inst;
}

}  // namespace

bool vanishes(const CliffordElem& e, int n, const PerturbationSpec& a, unsigned seed, int trials) {
    if (e.is_zero()) return true;
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> small(-3, 3);
    for (int t = 0; t < trials; ++t) {
        Instantiation inst = random_instantiation(n, a, rng);
        std::vector<Gauss> v(size_t{1} << n);
        for (auto& g : v) g = Gauss(Rational(small(rng)), Rational(small(rng)));
        for (const auto& y : apply(e, v, inst))
            if (!y.is_zero()) return false;
    }
    return true;
}

bool vanishes(const XiClifford& f, int n, const PerturbationSpec& a, unsigned seed, int trials) {
    for (size_t k = 0; k < f.num.size(); ++k)
        if (!vanishes(f.num[k], n, a, seed + static_cast<unsigned>(k), trials)) return false;
    return true;
}

InverseCheck inverse_check(OpTag tag, int order, const PerturbationSpec& a, int n) {
    InverseParts p = compute_inverse(tag, order, a, n);
    InverseCheck c{p.recursion, p.closed, false};
    c.agree = vanishes(p.recursion - p.closed, n, a);
    if (c.agree && (order == -1 || order == -3)) {
        // the leading inverse must invert the leading symbol
        OperatorSymbol lead = sigma_order(base_of(tag), -order, a, n);
        c.agree = vanishes(lead.value * p.recursion - XiClifford::constant(CliffordElem::one()), n, a);
    }
    return c;
}

OperatorSymbol inverse_symbol(OpTag tag, int order, const PerturbationSpec& a, int n) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int, std::string>, OperatorSymbol> cache;
    const std::string akey = a.generic ? "#generic" : a.zero ? "#zero" : a.text;
    auto key = std::make_tuple(n, static_cast<int>(tag), order, akey);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    InverseParts p = compute_inverse(tag, order, a, n);
    if (!vanishes(p.recursion - p.closed, n, a))
        throw std::runtime_error("inverse_symbol: recursion and closed form disagree for " + op_tag_name(tag) +
                                 " order " + std::to_string(order));
    OperatorSymbol out{tag, order, p.closed, {}};
    if (order == -1 || order == -3) out.jet = p.lead;
    else out.jet = Jet::constant(p.closed);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, out);
    return out;
}

XiClifford display_symbol(OpTag tag, int order, const PerturbationSpec& a, int n) {
    const BoundaryData& bd = boundary_data(n);
    XiBasics x(bd);
    XiClifford h = x.lift(CliffordElem(hprime_tok()));
    if ((tag == OpTag::InvDA || tag == OpTag::InvDAstar) && order == -2) {
        XiClifford s0 = x.lift(sigma0(bd, a, tag == OpTag::InvDAstar));
        return x.cxi * s0 * x.cxi * XiClifford::inv_norm(2) +
               x.cxi * x.cdxn * (x.dcp * x.norm2 - x.cxi * h) * XiClifford::inv_norm(3);
    }
    if ((tag == OpTag::InvTriple || tag == OpTag::InvCube) && order == -4 && n == 6) {
        CliffordElem A = perturbation_elem(a, false);
        CliffordElem As = tag == OpTag::InvTriple ? perturbation_elem(a, true) : A;
        const VectorSym en = VectorSym::dxn();
        XiClifford sum_c, sum_cb, sum_b;
        for (int k = 1; k < n; ++k) {
            const VectorSym ek = VectorSym::basis(k);
            sum_c += x.lift(CliffordElem::c(ek) * CliffordElem::c(en)) * xi_k(bd, k);
            sum_cb += x.lift(CliffordElem::cb(ek) * CliffordElem::cb(en)) * xi_k(bd, k);
            sum_b += x.lift(CliffordElem::c(ek) * CliffordElem::cb(en) * CliffordElem::cb(ek));
        }
        XiClifford xn = XiClifford::monomial(CliffordElem::one(), 1);
        XiClifford inner = h * x.cxi * sum_c - h * x.cxi * sum_cb - h * xn * x.cxi * Gauss(5) +
                           (x.norm2 * x.lift(A) - x.cxi * x.lift(As) * x.cxi) * Gauss(2) +
                           x.norm2 * h * sum_b * Gauss::frac(5, 4) - x.norm2 * h * x.cdxn * Gauss::frac(1, 4) +
                           x.norm2 * x.lift(As);
        XiClifford extra = x.norm2 * x.cdxn * x.dcp - h * x.cdxn * x.cxi * Gauss(2) + xn * x.cxi * x.dcp * Gauss(2) +
                           xn * h * Gauss(4);
        return x.cxi * inner * x.cxi * XiClifford::inv_norm(4) + x.cxi * extra * XiClifford::inv_norm(4);
    }
    throw std::invalid_argument("display_symbol: no displayed form for " + op_tag_name(tag) + " order " +
                                std::to_string(order) + " at n=" + std::to_string(n));
}

XiClifford d_xi_tangential_leading(int m, int n) {
    if (m < 1 || m >= n) throw std::invalid_argument("d_xi_tangential_leading: index out of range");
    const BoundaryData& bd = boundary_data(n);
    XiBasics x(bd);
    // d_m of (c(xi') + i rho c(dx_n)) / (2 rho (x - i rho)) at rho = |xi'| = 1
    XiClifford em = x.lift(CliffordElem::c(VectorSym::basis(m)));
    XiClifford xm = xi_k(bd, m);
    XiClifford two_i = x.lift(CliffordElem(ScalarExpr(Gauss(0, 2))));
    XiClifford xn = XiClifford::monomial(CliffordElem::one(), 1);
    return em * XiClifford::pole(1) * Gauss::frac(1, 2) -
           xm * (x.cxi_p * (xn - two_i) + x.cdxn) * XiClifford::pole(2) * Gauss::frac(1, 2);
}

}  // namespace ncres
