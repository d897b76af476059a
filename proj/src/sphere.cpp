#include "ncres/sphere.hpp"
#include "ncres/wick.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace ncres {

namespace {

const std::string kXi = "xi'";

void pairings(const std::vector<std::string>& vs, std::vector<bool>& used, const ScalarExpr& acc, ScalarExpr& out) {
    size_t first = 0;
    while (first < vs.size() && used[first]) ++first;
    if (first == vs.size()) {
        out += acc;
        return;
    }
    used[first] = true;
    for (size_t k = first + 1; k < vs.size(); ++k) {
        if (used[k]) continue;
        ScalarExpr g = tangential_pairing(vs[first], vs[k]);
        if (!g.is_zero()) {
            used[k] = true;
            pairings(vs, used, acc * g, out);
            used[k] = false;
        }
    }
    used[first] = false;
}

bool trace_has_xi(const Token& t) { return t.kind == TokKind::Trace && t.a.find("(" + kXi + ")") != std::string::npos; }

}  // namespace

ScalarExpr tangential_pairing(const std::string& v, const std::string& w) {
    VectorSym a = parse_vector_key(v), b = parse_vector_key(w), n = VectorSym::dxn();
    return pairing(a, b) - pairing(a, n) * pairing(b, n);
}

ScalarExpr integrate_sphere(const ScalarExpr& integrand, int m) {
    if (m < 1) throw std::invalid_argument("integrate_sphere: dimension must be positive");
    ScalarExpr out;
    for (const auto& [mono, c] : integrand.terms()) {
        std::vector<std::string> vs;
        Monomial rest;
        int slot_degree = 0;
        for (const auto& [t, e] : mono) {
            if (t.kind == TokKind::Pair && (t.a == kXi || t.b == kXi)) {
                if (t.a == kXi && t.b == kXi) throw std::invalid_argument("integrate_sphere: unreduced g(xi',xi')");
                const std::string& other = t.a == kXi ? t.b : t.a;
                for (int k = 0; k < e; ++k) vs.push_back(other);
            } else {
                if (trace_has_xi(t)) slot_degree += e;
                rest.emplace_back(t, e);
            }
        }
        const int degree = static_cast<int>(vs.size()) + slot_degree;
        if (degree % 2) continue;
        if (slot_degree) throw std::invalid_argument("integrate_sphere: even xi' degree inside a trace token");
        ScalarExpr moment;
        std::vector<bool> used(vs.size(), false);
        pairings(vs, used, ScalarExpr::one(), moment);
        Rational scale = 1;
        for (int j = 0; j < degree / 2; ++j) scale /= (m + 2 * j);
        ScalarExpr base;
        base.add_term(rest, c);
        out += base * moment * Gauss(scale) * omega_tok();
    }
    return out;
}

double omega_value(int n) {
    if (n != 4 && n != 6) throw std::invalid_argument("omega_value: unsupported dimension " + std::to_string(n));
    const double k = (n - 1) / 2.0;
    return 2.0 * std::pow(M_PI, k) / std::tgamma(k);
}

}  // namespace ncres
