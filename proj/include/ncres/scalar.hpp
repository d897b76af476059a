#pragma once

#include <gmpxx.h>

#include <complex>
#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ncres {

using Rational = mpq_class;

// a + b*i with exact rational parts
struct Gauss {
    Rational re{0}, im{0};

    Gauss() = default;
    Gauss(long v) : re(v) {}
    Gauss(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {
        re.canonicalize();
        im.canonicalize();
    }
    static Gauss frac(long p, long q) { return Gauss(Rational(p) / Rational(q)); }
    static Gauss I() { return Gauss(0, 1); }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }
    Gauss conj() const { return Gauss(re, -im); }

    Gauss operator-() const { return Gauss(-re, -im); }
    Gauss& operator+=(const Gauss& o) { re += o.re; im += o.im; return *this; }
    Gauss& operator-=(const Gauss& o) { re -= o.re; im -= o.im; return *this; }
    Gauss& operator*=(const Gauss& o);
    Gauss& operator/=(const Gauss& o);

    friend Gauss operator+(Gauss a, const Gauss& b) { return a += b; }
    friend Gauss operator-(Gauss a, const Gauss& b) { return a -= b; }
    friend Gauss operator*(Gauss a, const Gauss& b) { return a *= b; }
    friend Gauss operator/(Gauss a, const Gauss& b) { return a /= b; }
    friend bool operator==(const Gauss& a, const Gauss& b) { return a.re == b.re && a.im == b.im; }

    Gauss pow(int e) const;
    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
    std::string str() const;
};

enum class TokKind : unsigned char { Hprime, Pi, Omega, Scurv, TrId, Pair, DxPrime, Trace, Div };

// A formal scalar symbol.  Pair(a,b) is g(a,b); Trace holds an unevaluated
// fiber trace such as "A c(dxn)"; Div(X) is sum_j g(nabla_{e_j}X, e_j).
struct Token {
    TokKind kind{TokKind::Pi};
    std::string a, b;

    static Token hprime() { return {TokKind::Hprime, {}, {}}; }
    static Token pi() { return {TokKind::Pi, {}, {}}; }
    static Token omega() { return {TokKind::Omega, {}, {}}; }
    static Token scurv() { return {TokKind::Scurv, {}, {}}; }
    static Token trid() { return {TokKind::TrId, {}, {}}; }
    static Token dxprime() { return {TokKind::DxPrime, {}, {}}; }
    static Token pair(std::string v, std::string w);
    static Token trace(std::string body) { return {TokKind::Trace, std::move(body), {}}; }
    static Token div(std::string x) { return {TokKind::Div, std::move(x), {}}; }

    std::string name() const;
    std::string str() const;  // one factor, e.g. "g(X,Y)" or "h'"

    friend bool operator==(const Token& x, const Token& y) = default;
    friend std::strong_ordering operator<=>(const Token& x, const Token& y);
};

using Monomial = std::vector<std::pair<Token, int>>;  // sorted, exponents > 0

Monomial mono_mul(const Monomial& x, const Monomial& y);

class ScalarExpr {
public:
    ScalarExpr() = default;
    ScalarExpr(Gauss c);
    ScalarExpr(long c) : ScalarExpr(Gauss(c)) {}
    explicit ScalarExpr(const Token& t, int e = 1);

    static ScalarExpr zero() { return {}; }
    static ScalarExpr one() { return ScalarExpr(Gauss(1)); }

    const std::map<Monomial, Gauss>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Gauss constant_term() const;
    // single token^1 with unit coefficient
    std::optional<Token> as_token() const;

    void add_term(const Monomial& m, const Gauss& c);

    ScalarExpr operator-() const;
    ScalarExpr& operator+=(const ScalarExpr& o);
    ScalarExpr& operator-=(const ScalarExpr& o);
    ScalarExpr& operator*=(const Gauss& c);
    friend ScalarExpr operator+(ScalarExpr a, const ScalarExpr& b) { return a += b; }
    friend ScalarExpr operator-(ScalarExpr a, const ScalarExpr& b) { return a -= b; }
    friend ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b);
    friend ScalarExpr operator*(ScalarExpr a, const Gauss& c) { return a *= c; }
    friend ScalarExpr operator*(const Gauss& c, ScalarExpr a) { return a *= c; }
    friend bool operator==(const ScalarExpr& a, const ScalarExpr& b) { return a.terms_ == b.terms_; }
    friend bool operator<(const ScalarExpr& a, const ScalarExpr& b);

    ScalarExpr pow(int e) const;

    // Replace tokens; the callback returns nullopt to keep a token as is.
    ScalarExpr substitute(const std::function<std::optional<ScalarExpr>(const Token&)>& f) const;
    ScalarExpr substitute(const Token& t, const ScalarExpr& v) const;

    // coefficient of token^e, everything else kept in the returned expression
    ScalarExpr coefficient_of(const Token& t, int e = 1) const;
    int degree_in(TokKind k) const;
    bool contains(TokKind k) const;

    std::string str() const;

private:
    std::map<Monomial, Gauss> terms_;
};

// Rebuild from scratch: merge like monomials, sort, drop zeros.
ScalarExpr canonicalize(const ScalarExpr& e);

// bindings keyed by Token::str(); throws on unbound tokens or an imaginary
// residue above 1e-12 relative to the magnitude of the terms
double eval_numeric(const ScalarExpr& e, const std::map<std::string, double>& bindings);
std::complex<double> eval_complex(const ScalarExpr& e, const std::map<std::string, double>& bindings);
Gauss eval_exact(const ScalarExpr& e, const std::function<Gauss(const Token&)>& value);

ScalarExpr pi_tok();
ScalarExpr hprime_tok();
ScalarExpr omega_tok();
ScalarExpr trid_tok();
ScalarExpr pair_tok(const std::string& v, const std::string& w);

}  // namespace ncres
