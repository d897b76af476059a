#pragma once

#include "ncres/clifford.hpp"
#include "ncres/scalar.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ncres {

namespace detail {

inline Rational binom(long n, long k) {
    mpz_class r;
    mpz_bin_ui(r.get_mpz_t(), mpz_class(n).get_mpz_t(), static_cast<unsigned long>(k));
    return Rational(r);
}

}  // namespace detail

// f(x) = sum_k num[k] x^k / ((x - i)^a (x + i)^b), x = xi_n, coefficients in C.
// C is ScalarExpr or CliffordElem (noncommutative, so products keep order).
template <class C>
class XiRational {
public:
    std::vector<C> num;
    int a = 0;
    int b = 0;

    XiRational() = default;
    XiRational(std::vector<C> n, int pa, int pb) : num(std::move(n)), a(pa), b(pb) { trim(); }

    static XiRational constant(const C& c) { return XiRational({c}, 0, 0); }
    static XiRational monomial(const C& c, int power) {
        std::vector<C> n(power + 1);
        n[power] = c;
        return XiRational(std::move(n), 0, 0);
    }
    // 1 / (1 + x^2)^k
    static XiRational inv_norm(int k) { return XiRational({C::one()}, k, k); }
    // (1 + x^2)^k
    static XiRational norm_pow(int k) {
        XiRational r = constant(C::one());
        r.num = mul_linear_pow(r.num, 1, k);
        r.num = mul_linear_pow(r.num, -1, k);
        return r;
    }
    // 1 / (x - i)^k, or 1 / (x + i)^k for upper = false
    static XiRational pole(int k, bool upper = true) { return XiRational({C::one()}, upper ? k : 0, upper ? 0 : k); }

    bool is_zero() const { return num.empty(); }
    int degree() const { return static_cast<int>(num.size()) - 1; }

    void trim() {
        while (!num.empty() && num.back().is_zero()) num.pop_back();
        if (num.empty()) a = b = 0;
    }

    // divide out (x -+ i) factors visible as structural zeros of the numerator
    XiRational reduced() const {
        XiRational r = *this;
        while (r.a > 0 && !r.num.empty() && eval_poly(r.num, Gauss::I()).is_zero()) {
            r.num = div_linear(r.num, Gauss::I());
            --r.a;
        }
        while (r.b > 0 && !r.num.empty() && eval_poly(r.num, -Gauss::I()).is_zero()) {
            r.num = div_linear(r.num, -Gauss::I());
            --r.b;
        }
        r.trim();
        return r;
    }

    // numerator over the target denominator (x-i)^A (x+i)^B, A >= a, B >= b
    std::vector<C> raised(int A, int B) const {
        std::vector<C> n = mul_linear_pow(num, 1, A - a);
        return mul_linear_pow(n, -1, B - b);
    }

    XiRational operator-() const {
        XiRational r = *this;
        for (auto& c : r.num) c = -c;
        return r;
    }
    XiRational& operator+=(const XiRational& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) return *this = o;
        int A = std::max(a, o.a), B = std::max(b, o.b);
        std::vector<C> x = raised(A, B), y = o.raised(A, B);
        if (y.size() > x.size()) x.resize(y.size());
        for (size_t k = 0; k < y.size(); ++k) x[k] += y[k];
        num = std::move(x);
        a = A;
        b = B;
        trim();
        return *this;
    }
    XiRational& operator-=(const XiRational& o) { return *this += -o; }
    friend XiRational operator+(XiRational x, const XiRational& y) { return x += y; }
    friend XiRational operator-(XiRational x, const XiRational& y) { return x -= y; }

    friend XiRational operator*(const XiRational& x, const XiRational& y) {
        if (x.is_zero() || y.is_zero()) return {};
        std::vector<C> n(x.num.size() + y.num.size() - 1);
        for (size_t i = 0; i < x.num.size(); ++i) {
            if (x.num[i].is_zero()) continue;
            for (size_t j = 0; j < y.num.size(); ++j) {
                if (y.num[j].is_zero()) continue;
                n[i + j] += x.num[i] * y.num[j];
            }
        }
        return XiRational(std::move(n), x.a + y.a, x.b + y.b);
    }
    friend XiRational operator*(XiRational x, const Gauss& g) {
        for (auto& c : x.num) c = c * g;
        x.trim();
        return x;
    }
    friend XiRational operator*(const Gauss& g, XiRational x) { return x * g; }

    // d/dx
    XiRational derivative(int order = 1) const {
        XiRational r = *this;
        for (int t = 0; t < order; ++t) r = r.derivative_once();
        return r;
    }

    // principal part at +i (upper = true) or -i
    XiRational principal_part(bool upper) const {
        const int order = upper ? a : b;
        if (is_zero() || order == 0) return {};
        std::vector<C> g = laurent_head(upper);
        // sum_k g_k (x - r)^k / (x - r)^order
        std::vector<C> n;
        for (int k = 0; k < order; ++k) {
            if (g[k].is_zero()) continue;
            std::vector<C> term = mul_linear_pow({g[k]}, upper ? 1 : -1, k);
            if (term.size() > n.size()) n.resize(term.size());
            for (size_t m = 0; m < term.size(); ++m) n[m] += term[m];
        }
        return XiRational(std::move(n), upper ? order : 0, upper ? 0 : order);
    }

    // Laurent coefficients g_0..g_{order-1} of (x - r)^order f at r = +-i
    std::vector<C> laurent_head(bool upper) const {
        const int order = upper ? a : b;
        const int other = upper ? b : a;
        const Gauss r = upper ? Gauss::I() : -Gauss::I();
        // numerator in powers of t = x - r
        std::vector<C> shifted(order);
        for (int k = 0; k < order; ++k) {
            for (size_t m = k; m < num.size(); ++m) {
                if (num[m].is_zero()) continue;
                shifted[k] += num[m] * (Gauss(detail::binom(static_cast<long>(m), k)) * r.pow(static_cast<int>(m) - k));
            }
        }
        // (t + 2r)^{-other} = (2r)^{-other} sum_q binom(-other, q) (t / 2r)^q
        const Gauss two_r = Gauss(2) * r;
        std::vector<Gauss> series(order);
        for (int q = 0; q < order; ++q) {
            Gauss bq(detail::binom(other + q - 1, q));
            if (q % 2) bq = -bq;
            if (other == 0) bq = q == 0 ? Gauss(1) : Gauss(0);
            series[q] = bq * two_r.pow(-other - q);
        }
        std::vector<C> g(order);
        for (int k = 0; k < order; ++k)
            for (int p = 0; p <= k; ++p)
                if (!shifted[p].is_zero() && !series[k - p].is_zero()) g[k] += shifted[p] * series[k - p];
        return g;
    }

    // polynomial part by long division of the numerator by the monic denominator
    XiRational polynomial_part() const {
        if (is_zero()) return {};
        const int dd = a + b;
        if (degree() < dd) return {};
        std::vector<Gauss> den = mul_linear_pow_scalar({Gauss(1)}, 1, a);
        den = mul_linear_pow_scalar(den, -1, b);
        std::vector<C> rem = num;
        std::vector<C> q(num.size() - dd);
        for (int k = degree(); k >= dd; --k) {
            C lead = rem[k];
            q[k - dd] = lead;
            if (lead.is_zero()) continue;
            for (int m = 0; m <= dd; ++m) rem[k - dd + m] -= lead * den[m];
        }
        return XiRational(std::move(q), 0, 0);
    }

    struct Fractions {
        XiRational plus, minus, poly;
    };
    Fractions partial_fractions() const { return {principal_part(true), principal_part(false), polynomial_part()}; }

    // holomorphic in the lower half plane and vanishing at infinity;
    // polynomial parts belong to pi_minus
    XiRational pi_plus() const { return principal_part(true); }
    XiRational pi_minus() const { return *this - pi_plus(); }

    C eval_at(const Gauss& x) const {
        C v = eval_poly(num, x);
        Gauss den = (x - Gauss::I()).pow(a) * (x + Gauss::I()).pow(b);
        return v * (Gauss(1) / den);
    }

    template <class D, class F>
    XiRational<D> map(F&& f) const {
        std::vector<D> n;
        n.reserve(num.size());
        for (const auto& c : num) n.push_back(f(c));
        return XiRational<D>(std::move(n), a, b);
    }

    std::string str() const {
        std::string s = "[";
        for (size_t k = 0; k < num.size(); ++k) {
            if (num[k].is_zero()) continue;
            if (s.size() > 1) s += " + ";
            s += "(" + num[k].str() + ")";
            if (k) s += "*x^" + std::to_string(k);
        }
        s += "] / ((x-i)^" + std::to_string(a) + " (x+i)^" + std::to_string(b) + ")";
        return s;
    }

    static std::vector<C> mul_linear_pow(std::vector<C> p, int sign, int times) {
        // multiply by (x - sign*i)^times
        const Gauss r = sign > 0 ? Gauss::I() : -Gauss::I();
        for (int t = 0; t < times; ++t) {
            std::vector<C> out(p.size() + 1);
            for (size_t k = 0; k < p.size(); ++k) {
                if (p[k].is_zero()) continue;
                out[k + 1] += p[k];
                out[k] -= p[k] * r;
            }
            p = std::move(out);
        }
        return p;
    }

private:
    static std::vector<Gauss> mul_linear_pow_scalar(std::vector<Gauss> p, int sign, int times) {
        const Gauss r = sign > 0 ? Gauss::I() : -Gauss::I();
        for (int t = 0; t < times; ++t) {
            std::vector<Gauss> out(p.size() + 1);
            for (size_t k = 0; k < p.size(); ++k) {
                out[k + 1] += p[k];
                out[k] -= p[k] * r;
            }
            p = std::move(out);
        }
        return p;
    }

    static C eval_poly(const std::vector<C>& p, const Gauss& x) {
        C v;
        for (size_t k = p.size(); k-- > 0;) v = v * x + p[k];
        return v;
    }

    // p / (x - r), assuming exact divisibility
    static std::vector<C> div_linear(const std::vector<C>& p, const Gauss& r) {
        if (p.empty()) return p;
        std::vector<C> q(p.size() - 1);
        C carry;
        for (size_t k = p.size() - 1; k >= 1; --k) {
            carry = p[k] + carry * r;
            q[k - 1] = carry;
        }
        return q;
    }

    XiRational derivative_once() const {
        if (is_zero()) return {};
        // (N' (x^2+1) - a N (x+i) - b N (x-i)) / ((x-i)^{a+1} (x+i)^{b+1})
        std::vector<C> dn;
        for (size_t k = 1; k < num.size(); ++k) dn.push_back(num[k] * Gauss(static_cast<long>(k)));
        std::vector<C> t1 = mul_linear_pow(mul_linear_pow(dn, 1, 1), -1, 1);
        std::vector<C> t2 = mul_linear_pow(num, -1, 1);
        std::vector<C> t3 = mul_linear_pow(num, 1, 1);
        std::vector<C> out(std::max({t1.size(), t2.size(), t3.size()}));
        for (size_t k = 0; k < t1.size(); ++k) out[k] += t1[k];
        for (size_t k = 0; k < t2.size() && a; ++k) out[k] -= t2[k] * Gauss(a);
        for (size_t k = 0; k < t3.size() && b; ++k) out[k] -= t3[k] * Gauss(b);
        return XiRational(std::move(out), a + 1, b + 1);
    }
};

template <class C>
bool xi_equal(const XiRational<C>& f, const XiRational<C>& g) {
    int A = std::max(f.a, g.a), B = std::max(f.b, g.b);
    auto x = f.raised(A, B), y = g.raised(A, B);
    size_t n = std::max(x.size(), y.size());
    x.resize(n);
    y.resize(n);
    for (size_t k = 0; k < n; ++k)
        if (!(x[k] - y[k]).is_zero()) return false;
    return true;
}

using XiScalar = XiRational<ScalarExpr>;
using XiClifford = XiRational<CliffordElem>;

// 2 pi i Res_{x=i} f, carrying the PI token; requires deg num <= a + b - 2
ScalarExpr line_integral(const XiScalar& f);

// coefficient-wise fiber trace
XiScalar trace(const XiClifford& f);

}  // namespace ncres
