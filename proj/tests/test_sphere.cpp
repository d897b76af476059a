#include "ncres/expr_parse.hpp"
#include "ncres/sphere.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace ncres;

namespace {

ScalarExpr E(const char* t) { return parse_result_expr(t); }
ScalarExpr gx(const std::string& v) { return pair_tok(v, "xi'"); }

}  // namespace

TEST_CASE("low moments") {
    CHECK(integrate_sphere(ScalarExpr(1), 3) == omega_tok());
    CHECK(integrate_sphere(gx("X"), 3).is_zero());
    CHECK(integrate_sphere(gx("X") * gx("Y") * gx("Z"), 5).is_zero());
    CHECK(integrate_sphere(gx("X") * gx("Y"), 3) == E("1/3*Omega*(g(X,Y) - g(X,dxn)*g(Y,dxn))"));
    CHECK(integrate_sphere(gx("X").pow(4), 5) == E("3/35*Omega*(|X|^2 - g(X,dxn)^2)^2"));
    CHECK(tangential_pairing("X", "Y") == E("g(X,Y) - g(X,dxn)*g(Y,dxn)"));
}

TEST_CASE("component moments") {
    // xi_1^2 integrates to Omega/m; the xi_i^2 add up to Omega
    for (int m : {3, 5}) {
        ScalarExpr sum;
        for (int i = 1; i <= m; ++i) {
            std::string e = "e" + std::to_string(i);
            ScalarExpr one = integrate_sphere(gx(e) * gx(e), m);
            CHECK(one == omega_tok() * Gauss(Rational(1, m)));
            sum += one;
        }
        CHECK(sum == omega_tok());
        CHECK(integrate_sphere(gx("e1") * gx("e2"), m).is_zero());
    }
}

TEST_CASE("sphere volumes") {
    CHECK(omega_value(4) == doctest::Approx(4 * M_PI));
    CHECK(omega_value(6) == doctest::Approx(8 * M_PI * M_PI / 3));
    CHECK_THROWS(omega_value(3));
}

TEST_CASE("moments agree with Monte Carlo on S^2 and S^4") {
    std::mt19937 rng(4242);
    std::normal_distribution<double> normal;
    const char* names[] = {"V1", "V2", "V3", "V4"};
    for (int t = 0; t < 50; ++t) {
        const int n = t % 2 ? 6 : 4, m = n - 1;
        const int deg = static_cast<int>(rng() % 5);
        std::map<std::string, std::vector<double>> vec;
        ScalarExpr f(1);
        for (int k = 0; k < deg; ++k) {
            std::vector<double> v(n);
            for (auto& x : v) x = static_cast<double>(static_cast<int>(rng() % 7) - 3);
            vec[names[k]] = v;
            f = f * gx(names[k]);
        }
        ScalarExpr ex = integrate_sphere(f, m);
        std::map<std::string, double> bind{{"Omega", omega_value(n)}};
        for (const auto& [a, va] : vec) {
            bind["g(" + a + ",dxn)"] = va[n - 1];
            for (const auto& [b, vb] : vec) {
                double s = 0;
                for (int i = 0; i < n; ++i) s += va[i] * vb[i];
                bind[Token::pair(a, b).str()] = s;
            }
        }
        const double want = eval_numeric(ex, bind);

        const int N = 400000;
        double acc = 0, acc2 = 0;
        std::vector<double> xi(m);
        for (int s = 0; s < N; ++s) {
            double r = 0;
            for (auto& x : xi) {
                x = normal(rng);
                r += x * x;
            }
            r = std::sqrt(r);
            double val = 1;
            for (int k = 0; k < deg; ++k) {
                const auto& v = vec[names[k]];
                double p = 0;
                for (int i = 0; i < m; ++i) p += v[i] * xi[i] / r;
                val *= p;
            }
            acc += val;
            acc2 += val * val;
        }
        const double mean = acc / N, sd = std::sqrt(std::max(0.0, acc2 / N - mean * mean));
        const double mc = mean * omega_value(n), err = sd / std::sqrt(N) * omega_value(n);
        CAPTURE(t);
        CAPTURE(ex.str());
        CHECK(std::abs(mc - want) <= std::max(5 * err, 1e-3 * std::abs(want)) + 1e-12);
    }
}
