// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include "ncres/boundary.hpp"
#include "ncres/expr_parse.hpp"
#include "ncres/interior.hpp"
#include "ncres/matrix.hpp"
#include "ncres/runner.hpp"
#include "ncres/wick.hpp"
#include "ncres/xi_rational.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace ncres;

namespace {

ScalarExpr E(const std::string& t) { return parse_result_expr(t); }
ScalarExpr B(const std::string& t) { return E("(" + t + ")*pi*Omega*dx'"); }

// collects sub-check outcomes for one criterion
struct Check {
    bool ok = true;
    std::vector<std::string> failed;
    int count = 0;

    void operator()(bool cond, const std::string& what) {
        ++count;
        if (!cond) {
            ok = false;
            failed.push_back(what);
        }
    }
    void equal(const ScalarExpr& got, const ScalarExpr& want, const std::string& what) {
        (*this)(got == want, what + ": engine " + got.str() + ", expected " + want.str());
    }
};

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    return Rational(num(rng), den(rng));
}

Check clifford_relations() {
    Check ck;
    for (int n : {4, 6}) {
        const Generators& g = generators(n);
        const CliffMatrix id = CliffMatrix::identity(n);
        const CliffMatrix zero(n);
        ck(id.dim() == (size_t{1} << n), "fiber size");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const Gauss d(i == j ? 2 : 0);
                std::string at = " n=" + std::to_string(n) + " i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1);
                ck(g.c[i] * g.c[j] + g.c[j] * g.c[i] == id * -d, "c c" + at);
                ck(g.cb[i] * g.cb[j] + g.cb[j] * g.cb[i] == id * d, "cb cb" + at);
                ck(g.c[i] * g.cb[j] + g.cb[j] * g.c[i] == zero, "c cb" + at);
            }
    }
    return ck;
}

Check wick_oracle() {
    Check ck;
    std::mt19937 rng(20240601);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = trial % 2 ? 6 : 4;
        const int len = 1 + static_cast<int>(rng() % 8);
        Word w;
        std::vector<NumGen> num;
        Instantiation inst;
        inst.n = n;
        for (int k = 0; k < len; ++k) {
            const Flavor f = rng() % 2 ? Flavor::C : Flavor::CB;
            std::string name = "V" + std::to_string(k);
            std::vector<Rational> comps(n);
            for (auto& c : comps) c = random_rational(rng);
            inst.fields[name] = comps;
            w.push_back(f == Flavor::C ? Gen::c(VectorSym::field(name)) : Gen::cb(VectorSym::field(name)));
            num.push_back({f, comps});
        }
        Gauss symbolic = eval_exact(wick_trace(w), [&](const Token& t) { return inst.token_value(t); });
        ck(symbolic == word_trace(num, n), word_str(w));
    }
    return ck;
}

XiScalar random_xi(std::mt19937& rng, bool proper) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
    const int a = static_cast<int>(rng() % 4), b = static_cast<int>(rng() % 4);
    int deg = static_cast<int>(rng() % (a + b + 3));
    if (proper) deg = a + b >= 2 ? static_cast<int>(rng() % (a + b - 1)) : -1;
    std::vector<ScalarExpr> n;
    for (int k = 0; k <= deg; ++k)
        n.emplace_back(Gauss(Rational(num(rng), den(rng)), Rational(num(rng), den(rng))));
    if (n.empty()) n.emplace_back(1);
    const bool bump = proper && a + b < 2;
    return XiScalar(std::move(n), bump ? 1 : a, bump ? 1 : b);
}

Check pi_plus_ground_truth() {
    Check ck;
    CliffordElem cp = CliffordElem::c(VectorSym::xi_prime()), cn = CliffordElem::c(VectorSym::dxn());
    XiClifford f = XiClifford({cp, cn}, 0, 0) * XiClifford::inv_norm(1) * Gauss::I();
    ck(xi_equal(f.pi_plus(), XiClifford({(cp + cn * Gauss::I()) * Gauss::frac(1, 2)}, 1, 0)),
       "pi+[i c(xi)/(1+xi_n^2)]");
    std::mt19937 rng(3141);
    for (int t = 0; t < 200; ++t) {
        XiScalar g = random_xi(rng, false);
        XiScalar p = g.pi_plus(), m = g.pi_minus();
        const std::string id = "random rational " + std::to_string(t);
        ck(xi_equal(p + m, g), id + ": pi+ + pi- = f");
        ck(xi_equal(p.pi_plus(), p) && m.pi_plus().is_zero() && p.pi_minus().is_zero(), id + ": idempotent");
        auto pf = g.partial_fractions();
        ck(xi_equal(pf.plus + pf.minus + pf.poly, g), id + ": partial fractions");
    }
    return ck;
}

std::complex<double> quadrature(const XiScalar& f) {
    const std::complex<double> I(0, 1);
    const int N = 20000;
    const double h = M_PI / N;
    std::complex<double> s = 0;
    for (int k = 0; k < N; ++k) {
        const double t = -M_PI / 2 + (k + 0.5) * h, x = std::tan(t), c = std::cos(t);
        std::complex<double> num = 0, p = 1;
        for (const auto& co : f.num) {
            num += co.constant_term().to_complex() * p;
            p *= x;
        }
        s += num / (std::pow(x - I, f.a) * std::pow(x + I, f.b)) / (c * c);
    }
    return s * h;
}

Check residues() {
    Check ck;
    ck.equal(line_integral(XiScalar::inv_norm(3)), E("3/8*pi"), "integral of (1+xi_n^2)^-3");
    std::mt19937 rng(2718);
    for (int t = 0; t < 100; ++t) {
        XiScalar f = random_xi(rng, true);
        const double err = std::abs(quadrature(f) - eval_complex(line_integral(f), {{"pi", M_PI}}));
        ck(err < 1e-6, "quadrature " + std::to_string(t));
    }
    return ck;
}

Check n4_mixed() {
    Check ck;
    BoundaryReport r = boundary_total(4, OpTag::InvDA, OpTag::InvDAstar, PerturbationSpec::make_generic());
    ck.equal(case_value(r, "a)"), ScalarExpr(), "a)I+a)II+a)III");
    ck.equal(case_value(r, "b)"), B("9/2*h' + 1/4*tr[A c(dxn)]"), "case b)");
    ck.equal(case_value(r, "c)"), B("-9/2*h' - 1/4*tr[A* c(dxn)]"), "case c)");
    ck.equal(r.total, B("1/4*tr[A c(dxn)] - 1/4*tr[A* c(dxn)]"), "total");
    return ck;
}

Check n4_same() {
    Check ck;
    BoundaryReport r = boundary_total(4, OpTag::InvDA, OpTag::InvDA, PerturbationSpec::make_generic());
    ScalarExpr b = case_value(r, "b)"), c = case_value(r, "c)");
    ck.equal(b, B("9/2*h' + 1/4*tr[A c(dxn)]"), "case b)");
    ck.equal(c, B("-9/2*h' - 1/4*tr[A c(dxn)]"), "case c)");
    ck((b + c).is_zero(), "b) = -c)");
    ck.equal(r.total, ScalarExpr(), "total");
    return ck;
}

Check n6_boundary() {
    Check ck;
    const PerturbationSpec G = PerturbationSpec::make_generic();
    BoundaryReport t = boundary_total(6, OpTag::InvDA, OpTag::InvTriple, G);
    BoundaryReport q = boundary_total(6, OpTag::InvDA, OpTag::InvCube, G);
    ck.equal(case_value(t, "a)"), B("5*h'"), "a) sum");
    // printed case values
    ck.equal(case_value(t, "b)"), B("111/2*h' - 3/8*tr[A c(dxn)] + 1/16*tr[A* c(dxn)]"), "case b)");
    ck.equal(case_value(t, "c)"), B("-105/4*h' + 161/512*tr[A c(dxn)]"), "case c)");
    ck.equal(t.total, B("137/4*h' - 31/512*tr[A c(dxn)] + 1/16*tr[A* c(dxn)]"), "total");
    ck.equal(q.total, B("137/4*h' + 1/512*tr[A c(dxn)]"), "cube total");
    // the ledger identities are arithmetic statements about the printed coefficients
    ck(Rational(-3, 8) + Rational(161, 512) == Rational(-31, 512), "-3/8 + 161/512 = -31/512");
    ck(Rational(-5, 16) + Rational(161, 512) == Rational(1, 512), "-5/16 + 161/512 = 1/512");
    return ck;
}

Check prefactors() {
    Check ck;
    ck.equal(interior_prefactor(4), E("32*pi^2"), "n=4");
    ck.equal(interior_prefactor(6), E("128*pi^3"), "n=6");
    return ck;
}

Check catalog() {
    Check ck;
    auto cc = parse_perturbation("c(X) c(Y)");
    auto ccc = parse_perturbation("c(X) c(Y) c(Z)");
    const int n = 4;
    ck.equal(trace_identity(TraceId::TrAstarA, cc, n), E("|X|^2*|Y|^2*trid"), "tr[A*A] cc");
    ck.equal(trace_identity(TraceId::TrACdxn, cc, n), ScalarExpr(), "tr[A c(dxn)] cc");
    ck.equal(trace_identity(TraceId::TrAstarCdxn, cc, n), ScalarExpr(), "tr[A* c(dxn)] cc");
    ck.equal(trace_identity(TraceId::SumNablaAstarC, cc, n), ScalarExpr(), "sum nabla A* c cc");
    ck.equal(trace_identity(TraceId::SumCNablaA, cc, n), ScalarExpr(), "sum c nabla A cc");
    ck.equal(trace_identity(TraceId::SumAcAc, cc, n), E("-4*g(X,Y)^2*trid"), "sum A c A c cc");
    ck.equal(trace_identity(TraceId::SumAstarcAstarc, cc, n), E("-4*g(X,Y)^2*trid"), "sum A* c A* c cc");
    ck.equal(trace_identity(TraceId::TrAstarA, ccc, n), E("|X|^2*|Y|^2*|Z|^2*trid"), "tr[A*A] ccc");
    // (n-6)|X|^2|Y|^2|Z|^2 + (8-2n)(|X|^2 g(Y,Z)^2 + ...) + (4n-16) g(X,Y)g(X,Z)g(Y,Z)
    ck.equal(trace_identity(TraceId::SumAcAc, ccc, 4), E("-2*|X|^2*|Y|^2*|Z|^2*trid"), "sum A c A c ccc n=4");
    ck.equal(trace_identity(TraceId::SumAcAc, ccc, 6),
             E("(-4*|X|^2*g(Y,Z)^2 - 4*|Y|^2*g(X,Z)^2 - 4*|Z|^2*g(X,Y)^2 + 8*g(X,Y)*g(X,Z)*g(Y,Z))*trid"),
             "sum A c A c ccc n=6");
    ck.equal(trace_identity(TraceId::SumAcAc, cc, 6), E("(2*|X|^2*|Y|^2 - 8*g(X,Y)^2)*trid"), "sum A c A c cc n=6");
    ck.equal(trace_identity(TraceId::TrACdxn, ccc, n),
             E("(g(dxn,X)*g(Y,Z) - g(dxn,Y)*g(X,Z) + g(dxn,Z)*g(X,Y))*trid"), "tr[A c(dxn)] ccc");
    ck.equal(trace_identity(TraceId::TrAstarCdxn, ccc, n),
             E("(-g(dxn,X)*g(Y,Z) + g(dxn,Y)*g(X,Z) - g(dxn,Z)*g(X,Y))*trid"), "tr[A* c(dxn)] ccc");
    ck.equal(trace_identity(TraceId::SumNablaAstarC, ccc, n),
             E("(-div(Z)*g(X,Y) + g(X,nabla_{Y}Z) - g(Y,nabla_{X}Z) - g(X,nabla_{Z}Y) + div(Y)*g(X,Z)"
               " - g(Z,nabla_{X}Y) - g(Y,nabla_{Z}X) + g(Z,nabla_{Y}X) - div(X)*g(Y,Z))*trid"),
             "sum nabla A* c ccc");
    ck.equal(trace_identity(TraceId::SumCNablaA, ccc, n),
             E("(g(Y,nabla_{Z}X) - g(Z,nabla_{Y}X) + g(Y,Z)*div(X) + g(X,nabla_{Z}Y) - g(X,Z)*div(Y)"
               " + g(Z,nabla_{X}Y) + div(Z)*g(X,Y) - g(X,nabla_{Y}Z) + g(Y,nabla_{X}Z))*trid"),
             "sum c nabla A ccc");
    ck.equal(trace_identity(TraceId::TrAstarA, ccc, n).substitute(Token::trid(), ScalarExpr(16)),
             E("16*|X|^2*|Y|^2*|Z|^2"), "tr[A*A] ccc with trid = 16");
    return ck;
}

Check corollaries(const std::string& dir) {
    Check ck;
    VerificationReport r = run_manifest(dir + "/reference.yaml");
    std::set<std::string> ids;
    for (const auto& e : r.entries) {
        ids.insert(e.id);
        ck(e.verdict != Verdict::Fail, e.id + " failed");
        if (e.verdict == Verdict::Finding) ck(!e.trace.empty() && !e.cases.empty(), e.id + " finding without trace");
    }
    std::vector<std::string> want{"T3.8", "T3.18", "T4.3", "T4.12"};
    for (int k = 9; k <= 17; ++k) want.push_back("C3." + std::to_string(k));
    for (int k = 19; k <= 27; ++k) want.push_back("C3." + std::to_string(k));
    for (int k = 4; k <= 11; ++k) want.push_back("C4." + std::to_string(k));
    for (int k = 13; k <= 20; ++k) want.push_back("C4." + std::to_string(k));
    for (const auto& id : want) ck(ids.count(id) == 1, id + " missing");
    std::ostringstream s;
    s << r.pass << " PASS, " << r.finding << " FINDING, " << r.fail << " FAIL";
    ck.failed.insert(ck.failed.begin(), s.str());
    return ck;
}

Check negative_control(const std::string& dir) {
    Check ck;
    VerificationReport r = run_manifest(dir + "/negative_control.yaml");
    ck(r.fail == 1, "exactly one FAIL");
    for (const auto& e : r.entries) ck((e.verdict == Verdict::Fail) == (e.id == "T3.8/b"), e.id);
    return ck;
}

Check zero_baseline() {
    Check ck;
    const PerturbationSpec Z = PerturbationSpec::make_zero();
    for (auto [n, v] : {std::pair{4, InteriorVariant::STAR}, {4, InteriorVariant::SQ}, {6, InteriorVariant::STAR4},
                        {6, InteriorVariant::SQ4}})
        ck.equal(interior_integrand(n, v, Z).value,
                 interior_prefactor(n) * Gauss(1 << n) * E("-1/12*s"),
                 "interior " + variant_name(v));
    struct P {
        int n;
        OpTag t2;
    };
    for (P p : {P{4, OpTag::InvDAstar}, P{4, OpTag::InvDA}, P{6, OpTag::InvTriple}, P{6, OpTag::InvCube}}) {
        ScalarExpr total = boundary_total(p.n, OpTag::InvDA, p.t2, Z).total;
        ck(!total.contains(TokKind::Trace), "A-trace terms vanish " + op_tag_name(p.t2));
        ck.equal(total, p.n == 4 ? ScalarExpr() : B("137/4*h'"), "boundary " + op_tag_name(p.t2));
    }
    return ck;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string dir = argc > 1 ? argv[1] : "manifests";
    std::vector<std::pair<std::string, std::function<Check()>>> criteria{
        {"Clifford relations as 16x16 and 64x64 matrix identities", clifford_relations},
        {"wick_trace equals the matrix trace on 1000 random words", wick_oracle},
        {"pi+ ground truth and pi+/pi- splits of 200 random rationals", pi_plus_ground_truth},
        {"residue integrals against quadrature on 100 random rationals", residues},
        {"n=4 boundary, mixed pairing", n4_mixed},
        {"n=4 boundary, same-operator pairing", n4_same},
        {"n=6 boundary cases and totals against the printed values", n6_boundary},
        {"interior prefactors", prefactors},
        {"trace identity catalog", catalog},
        {"corollary regression manifest", [&] { return corollaries(dir); }},
        {"negative control fails exactly the corrupted entry", [&] { return negative_control(dir); }},
        {"A=0 baseline", zero_baseline},
    };
    bool all = true;
    for (size_t i = 0; i < criteria.size(); ++i) {
        Check ck;
        try {
            ck = criteria[i].second();
        } catch (const std::exception& e) {
            ck.ok = false;
            ck.failed.push_back(std::string("exception: ") + e.what());
        }
        all = all && ck.ok;
        std::cout << (ck.ok ? "PASS " : "FAIL ") << i + 1 << ": " << criteria[i].first << " (" << ck.count
                  << " checks)";
        if (!ck.failed.empty()) {
            std::cout << " --";
            for (size_t k = 0; k < ck.failed.size(); ++k) std::cout << (k ? "; " : " ") << ck.failed[k];
        }
        std::cout << "\n" << std::flush;
    }
    return all ? 0 : 1;
}
