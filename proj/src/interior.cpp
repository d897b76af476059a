#include "ncres/interior.hpp"
#include "ncres/boundary.hpp"

#include <random>
#include <stdexcept>

namespace ncres {

std::string variant_name(InteriorVariant v) {
    switch (v) {
        case InteriorVariant::SQ: return "SQ";
        case InteriorVariant::STAR: return "STAR";
        case InteriorVariant::SQ4: return "SQ4";
        case InteriorVariant::STAR4: return "STAR4";
    }
    return "?";
}

InteriorVariant variant_from_string(const std::string& s) {
    if (s == "SQ") return InteriorVariant::SQ;
    if (s == "STAR") return InteriorVariant::STAR;
    if (s == "SQ4") return InteriorVariant::SQ4;
    if (s == "STAR4") return InteriorVariant::STAR4;
    throw std::invalid_argument("unknown interior variant " + s);
}

ScalarExpr interior_prefactor(int n) {
    if (n != 4 && n != 6) throw std::invalid_argument("interior_prefactor: n must be 4 or 6, got " + std::to_string(n));
    const int h = n / 2;
    Rational c = (n - 2);
    for (int k = 0; k < h; ++k) c *= 4;
    for (int k = 2; k <= h - 1; ++k) c /= k;
    return ScalarExpr(Gauss(c)) * ScalarExpr(Token::pi(), h);
}

InteriorReport interior_integrand(int n, InteriorVariant v, const PerturbationSpec& a) {
    const bool quartic = v == InteriorVariant::SQ4 || v == InteriorVariant::STAR4;
    if (quartic && n != 6) throw std::invalid_argument("interior_integrand: " + variant_name(v) + " needs n = 6");
    InteriorReport r;
    r.n = n;
    r.variant = v;
    r.prefactor = interior_prefactor(n);
    // (n/2 - 1) is 1 at n = 4 and the doubled 2 at n = 6
    const Gauss lead(Rational(n, 2) - 1);
    const Gauss q = Gauss::frac(1, 4), h = Gauss::frac(1, 2);
    ScalarExpr e = ScalarExpr(Gauss::frac(-1, 12)) * ScalarExpr(Token::scurv()) * trid_tok();
    auto t = [&](TraceId id) { return trace_identity(id, a, n); };
    if (v == InteriorVariant::STAR || v == InteriorVariant::STAR4) {
        e += lead * t(TraceId::TrAstarA);
        e -= q * t(TraceId::SumAcAc);
        e -= q * t(TraceId::SumAstarcAstarc);
        e += h * t(TraceId::SumNablaAstarC);
        e -= h * t(TraceId::SumCNablaA);
    } else {
        e += lead * t(TraceId::TrASq);
        e -= h * t(TraceId::SumAcAc);
    }
    r.integrand = e;
    r.value = fix_trid(r.prefactor * e, n);
    return r;
}

ScalarExpr curvature_trace(int i, int j, int k, int l) {
    Word w = {Gen::cb(VectorSym::basis(i)), Gen::cb(VectorSym::basis(j)), Gen::c(VectorSym::basis(k)),
              Gen::c(VectorSym::basis(l))};
    return wick_trace(w);
}

ScalarExpr curvature_term_vanishes(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> d(-9, 9);
    ScalarExpr total;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l) {
                    Gauss rv(d(rng));
                    // R_{ijkl} = -R_{jikl}
                    total += rv * (curvature_trace(i, j, k, l) - curvature_trace(j, i, k, l));
                }
    return total;
}

}  // namespace ncres
