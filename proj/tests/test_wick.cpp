#include "ncres/expr_parse.hpp"
#include "ncres/matrix.hpp"
#include "ncres/wick.hpp"

#include <doctest.h>

#include <random>

using namespace ncres;

namespace {

ScalarExpr E(const char* t) { return parse_result_expr(t); }

Gen cx(const char* v) { return Gen::c(VectorSym::field(v)); }
Gen cbx(const char* v) { return Gen::cb(VectorSym::field(v)); }

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("wick_trace on the module examples") {
    CHECK(wick_trace({cx("X"), cx("Y")}) == E("-g(X,Y)*trid"));
    CHECK(wick_trace({cx("X"), cx("Y"), cx("Z"), cx("W")}) ==
          E("(g(X,Y)*g(Z,W) - g(X,Z)*g(Y,W) + g(X,W)*g(Y,Z))*trid"));
    CHECK(wick_trace({cx("X"), cbx("Y")}).is_zero());
    CHECK(wick_trace({cbx("X"), cbx("Y")}) == E("g(X,Y)*trid"));
    CHECK(wick_trace({}) == E("trid"));
    CHECK(wick_trace({cx("X"), cx("Y"), cx("Z")}).is_zero());
}

TEST_CASE("wick_trace equals the matrix trace on 1000 random words") {
    std::mt19937 rng(20240601);
    int checked = 0;
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
        Gauss matrix = word_trace(num, n);
        CHECK_MESSAGE(symbolic == matrix, word_str(w), " n=", n);
        ++checked;
    }
    CHECK(checked == 1000);
}

TEST_CASE("cyclicity holds symbolically") {
    std::mt19937 rng(7);
    const char* names[] = {"X", "Y", "Z", "W"};
    for (int trial = 0; trial < 100; ++trial) {
        Word u, v;
        for (int k = 0, lu = 1 + static_cast<int>(rng() % 3); k < lu; ++k)
            u.push_back(rng() % 2 ? cx(names[rng() % 4]) : cbx(names[rng() % 4]));
        for (int k = 0, lv = 1 + static_cast<int>(rng() % 4); k < lv; ++k)
            v.push_back(rng() % 2 ? cx(names[rng() % 4]) : cbx(names[rng() % 4]));
        Word uv = u, vu = v;
        uv.insert(uv.end(), v.begin(), v.end());
        vu.insert(vu.end(), u.begin(), u.end());
        CHECK(wick_trace(uv) == wick_trace(vu));
    }
}

TEST_CASE("adjoint reverses the word with a sign per c factor") {
    auto a = parse_perturbation("c(X)");
    auto s = adjoint(a);
    CHECK(s.sign == -1);
    CHECK(word_str(s.word) == word_str(a.word));
    CHECK(adjoint(parse_perturbation("cb(X)")).sign == 1);
    auto b = adjoint(parse_perturbation("c(X) c(Y)"));
    CHECK(b.sign == 1);
    CHECK(word_str(b.word) == word_str(parse_perturbation("c(Y) c(X)").word));
    for (const char* t : {"c(X) cb(Y)", "cb(X) cb(Y) c(Z)", "c(X) c(Y) c(Z)"}) {
        auto p = parse_perturbation(t);
        auto pp = adjoint(adjoint(p));
        CHECK(pp.sign == p.sign);
        CHECK(pp.word == p.word);
    }
}

TEST_CASE("perturbation grammar") {
    CHECK(parse_perturbation("A").generic);
    CHECK(parse_perturbation("0").zero);
    CHECK(parse_perturbation("A=0").zero);
    CHECK(parse_perturbation("cb(X)cb(Y) c(Z)").word.size() == 3);
    CHECK_THROWS(parse_perturbation("d(X)"));
    CHECK_THROWS(parse_perturbation("c(X"));
    CHECK_THROWS(parse_perturbation(""));
}

TEST_CASE("basis sums") {
    const VectorSym j = VectorSym::sum_index("j");
    for (int n : {4, 6}) {
        CliffordElem cc = CliffordElem::c(j) * CliffordElem::c(j);
        CHECK(basis_sum(cc, "j", n) == E("-trid") * Gauss(n));
    }
    auto a = parse_perturbation("c(X) c(Y)");
    CliffordElem A = perturbation_elem(a, false);
    for (int n : {4, 6}) {
        CliffordElem w = A * CliffordElem::c(j) * A * CliffordElem::c(j);
        ScalarExpr expect = E("|X|^2*|Y|^2*trid") * Gauss(n - 4) + E("g(X,Y)^2*trid") * Gauss(4 - 2 * n);
        CHECK(basis_sum(w, "j", n) == expect);
    }
}

TEST_CASE("trace identity catalog, TR_ID symbolic then 16") {
    const int n = 4;
    auto cc = parse_perturbation("c(X) c(Y)");
    CHECK(trace_identity(TraceId::TrAstarA, cc, n) == E("|X|^2*|Y|^2*trid"));
    CHECK(trace_identity(TraceId::TrACdxn, cc, n).is_zero());
    CHECK(trace_identity(TraceId::TrAstarCdxn, cc, n).is_zero());
    CHECK(trace_identity(TraceId::SumNablaAstarC, cc, n).is_zero());
    CHECK(trace_identity(TraceId::SumCNablaA, cc, n).is_zero());
    for (int m : {4, 6}) {
        ScalarExpr expect = E("|X|^2*|Y|^2*trid") * Gauss(m - 4) + E("g(X,Y)^2*trid") * Gauss(4 - 2 * m);
        CHECK(trace_identity(TraceId::SumAcAc, cc, m) == expect);
        CHECK(trace_identity(TraceId::SumAstarcAstarc, cc, m) == expect);
    }

    auto ccc = parse_perturbation("c(X) c(Y) c(Z)");
    CHECK(trace_identity(TraceId::TrAstarA, ccc, n) == E("|X|^2*|Y|^2*|Z|^2*trid"));
    for (int m : {4, 6}) {
        ScalarExpr expect = E("|X|^2*|Y|^2*|Z|^2*trid") * Gauss(m - 6) +
                            E("(|X|^2*g(Y,Z)^2 + |Y|^2*g(X,Z)^2 + |Z|^2*g(X,Y)^2)*trid") * Gauss(8 - 2 * m) +
                            E("g(X,Y)*g(X,Z)*g(Y,Z)*trid") * Gauss(4 * m - 16);
        CHECK(trace_identity(TraceId::SumAcAc, ccc, m) == expect);
        CHECK(trace_identity(TraceId::SumAstarcAstarc, ccc, m) == expect);
    }
    CHECK(trace_identity(TraceId::SumNablaAstarC, ccc, n) ==
          E("(-div(Z)*g(X,Y) + g(X,nabla_{Y}Z) - g(Y,nabla_{X}Z) - g(X,nabla_{Z}Y) + div(Y)*g(X,Z)"
            " - g(Z,nabla_{X}Y) - g(Y,nabla_{Z}X) + g(Z,nabla_{Y}X) - div(X)*g(Y,Z))*trid"));
    CHECK(trace_identity(TraceId::SumCNablaA, ccc, n) ==
          E("(g(Y,nabla_{Z}X) - g(Z,nabla_{Y}X) + g(Y,Z)*div(X) + g(X,nabla_{Z}Y) - g(X,Z)*div(Y)"
            " + g(Z,nabla_{X}Y) + div(Z)*g(X,Y) - g(X,nabla_{Y}Z) + g(Y,nabla_{X}Z))*trid"));
    CHECK(trace_identity(TraceId::TrAstarCdxn, ccc, n) ==
          E("(-g(dxn,X)*g(Y,Z) + g(dxn,Y)*g(X,Z) - g(dxn,Z)*g(X,Y))*trid"));
    CHECK(trace_identity(TraceId::TrACdxn, ccc, n) ==
          E("(g(dxn,X)*g(Y,Z) - g(dxn,Y)*g(X,Z) + g(dxn,Z)*g(X,Y))*trid"));

    // the same identities with the fiber trace normalized
    ScalarExpr sixteen = trace_identity(TraceId::TrAstarA, cc, n).substitute(Token::trid(), ScalarExpr(16));
    CHECK(sixteen == E("16*|X|^2*|Y|^2"));

    auto x = parse_perturbation("c(X)");
    CHECK(trace_identity(TraceId::TrAstarA, x, n) == E("|X|^2*trid"));
    CHECK(trace_identity(TraceId::TrACdxn, x, n) == E("-g(X,dxn)*trid"));
    CHECK(trace_identity(TraceId::SumCNablaA, x, n) == E("-div(X)*trid"));
    CHECK(trace_identity(TraceId::TrAstarA, parse_perturbation("0"), n).is_zero());
}

TEST_CASE("trace identity names round-trip") {
    for (TraceId id : {TraceId::TrAstarA, TraceId::TrASq, TraceId::SumAcAc, TraceId::SumAstarcAstarc,
                       TraceId::TrACdxn, TraceId::TrAstarCdxn, TraceId::SumNablaAstarC, TraceId::SumCNablaA,
                       TraceId::CurvTerm})
        CHECK(trace_id_from_string(trace_id_name(id)) == id);
    CHECK_THROWS(trace_id_from_string("TR_BOGUS"));
}
