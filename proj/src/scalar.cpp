#include "ncres/scalar.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ncres {

Gauss& Gauss::operator*=(const Gauss& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

Gauss& Gauss::operator/=(const Gauss& o) {
    Rational d = o.re * o.re + o.im * o.im;
    if (sgn(d) == 0) throw std::domain_error("Gauss: division by zero");
    Rational r = (re * o.re + im * o.im) / d;
    Rational i = (im * o.re - re * o.im) / d;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

Gauss Gauss::pow(int e) const {
    if (e < 0) return Gauss(1) / pow(-e);
    Gauss out(1), b = *this;
    while (e) {
        if (e & 1) out *= b;
        b *= b;
        e >>= 1;
    }
    return out;
}

static std::string qstr(const Rational& q) { return q.get_str(); }

std::string Gauss::str() const {
    if (is_real()) return qstr(re);
    std::string imag = (im == 1) ? "i" : (im == -1) ? "-i" : qstr(im) + "*i";
    if (sgn(re) == 0) return imag;
    if (sgn(im) < 0) return "(" + qstr(re) + imag + ")";
    return "(" + qstr(re) + "+" + imag + ")";
}

Token Token::pair(std::string v, std::string w) {
    if (w < v) std::swap(v, w);
    return {TokKind::Pair, std::move(v), std::move(w)};
}

std::string Token::name() const {
    switch (kind) {
        case TokKind::Hprime: return "h'";
        case TokKind::Pi: return "pi";
        case TokKind::Omega: return "Omega";
        case TokKind::Scurv: return "s";
        case TokKind::TrId: return "trid";
        case TokKind::Pair: return "g";
        case TokKind::DxPrime: return "dx'";
        case TokKind::Trace: return "tr";
        case TokKind::Div: return "div";
    }
    return "?";
}

std::string Token::str() const {
    switch (kind) {
        case TokKind::Pair: return a == b ? "|" + a + "|^2" : "g(" + a + "," + b + ")";
        case TokKind::Trace: return "tr[" + a + "]";
        case TokKind::Div: return "div(" + a + ")";
        default: return name();
    }
}

std::strong_ordering operator<=>(const Token& x, const Token& y) {
    if (auto c = x.name() <=> y.name(); c != 0) return c;
    if (auto c = x.a <=> y.a; c != 0) return c;
    return x.b <=> y.b;
}

Monomial mono_mul(const Monomial& x, const Monomial& y) {
    Monomial out;
    out.reserve(x.size() + y.size());
    size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.push_back(x[i++]);
        } else if (i == x.size() || y[j].first < x[i].first) {
            out.push_back(y[j++]);
        } else {
            out.emplace_back(x[i].first, x[i].second + y[j].second);
            ++i;
            ++j;
        }
    }
    return out;
}

ScalarExpr::ScalarExpr(Gauss c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, std::move(c));
}

ScalarExpr::ScalarExpr(const Token& t, int e) {
    if (e == 0) terms_.emplace(Monomial{}, Gauss(1));
    else terms_.emplace(Monomial{{t, e}}, Gauss(1));
}

bool ScalarExpr::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Gauss ScalarExpr::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Gauss(0) : it->second;
}

std::optional<Token> ScalarExpr::as_token() const {
    if (terms_.size() != 1) return std::nullopt;
    const auto& [m, c] = *terms_.begin();
    if (m.size() != 1 || m[0].second != 1 || !(c == Gauss(1))) return std::nullopt;
    return m[0].first;
}

void ScalarExpr::add_term(const Monomial& m, const Gauss& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ScalarExpr ScalarExpr::operator-() const {
    ScalarExpr out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

ScalarExpr& ScalarExpr::operator+=(const ScalarExpr& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ScalarExpr& ScalarExpr::operator-=(const ScalarExpr& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

ScalarExpr& ScalarExpr::operator*=(const Gauss& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

bool operator<(const ScalarExpr& a, const ScalarExpr& b) {
    auto less_g = [](const Gauss& x, const Gauss& y) { return x.re != y.re ? x.re < y.re : x.im < y.im; };
    return std::lexicographical_compare(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
                                        [&](const auto& x, const auto& y) {
                                            if (x.first != y.first) return x.first < y.first;
                                            return less_g(x.second, y.second);
                                        });
}

ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b) {
    ScalarExpr out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(mono_mul(ma, mb), ca * cb);
    return out;
}

ScalarExpr ScalarExpr::pow(int e) const {
    if (e < 0) throw std::invalid_argument("ScalarExpr::pow: negative exponent");
    ScalarExpr out = one();
    for (int i = 0; i < e; ++i) out = out * *this;
    return out;
}

ScalarExpr ScalarExpr::substitute(const std::function<std::optional<ScalarExpr>(const Token&)>& f) const {
    ScalarExpr out;
    for (const auto& [m, c] : terms_) {
        ScalarExpr term(c);
        Monomial kept;
        for (const auto& [t, e] : m) {
            if (auto v = f(t)) term = term * v->pow(e);
            else kept.emplace_back(t, e);
        }
        ScalarExpr rest;
        rest.terms_.emplace(kept, Gauss(1));
        out += term * rest;
    }
    return out;
}

ScalarExpr ScalarExpr::substitute(const Token& tok, const ScalarExpr& v) const {
    return substitute([&](const Token& t) -> std::optional<ScalarExpr> {
        if (t == tok) return v;
        return std::nullopt;
    });
}

ScalarExpr ScalarExpr::coefficient_of(const Token& t, int e) const {
    ScalarExpr out;
    for (const auto& [m, c] : terms_) {
        Monomial rest;
        int found = 0;
        for (const auto& [tk, ex] : m) {
            if (tk == t) found = ex;
            else rest.emplace_back(tk, ex);
        }
        if (found == e) out.add_term(rest, c);
    }
    return out;
}

int ScalarExpr::degree_in(TokKind k) const {
    int best = 0;
    for (const auto& [m, c] : terms_) {
        int d = 0;
        for (const auto& [t, e] : m)
            if (t.kind == k) d += e;
        best = std::max(best, d);
    }
    return best;
}

bool ScalarExpr::contains(TokKind k) const {
    for (const auto& [m, c] : terms_)
        for (const auto& [t, e] : m)
            if (t.kind == k) return true;
    return false;
}

static std::string factor_str(const Token& t, int e) {
    if (e == 1) return t.str();
    if (t.kind == TokKind::Pair && t.a == t.b) return "|" + t.a + "|^" + std::to_string(2 * e);
    return t.str() + "^" + std::to_string(e);
}

std::string ScalarExpr::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Gauss coef = c;
        bool neg = false;
        if (coef.is_real() && sgn(coef.re) < 0) neg = true;
        else if (sgn(coef.re) == 0 && sgn(coef.im) < 0) neg = true;
        if (neg) coef = -coef;
        if (first) os << (neg ? "-" : "");
        else os << (neg ? " - " : " + ");
        first = false;
        bool unit = coef == Gauss(1);
        if (!unit || m.empty()) os << coef.str();
        for (size_t i = 0; i < m.size(); ++i) {
            if (i > 0 || !unit) os << "*";
            os << factor_str(m[i].first, m[i].second);
        }
    }
    return os.str();
}

ScalarExpr canonicalize(const ScalarExpr& e) {
    ScalarExpr out;
    for (const auto& [m, c] : e.terms()) {
        std::map<Token, int> merged;
        for (const auto& [t, ex] : m) {
            Token key = t.kind == TokKind::Pair ? Token::pair(t.a, t.b) : t;
            merged[key] += ex;
        }
        Monomial mm;
        for (const auto& [t, ex] : merged)
            if (ex != 0) mm.emplace_back(t, ex);
        out.add_term(mm, c);
    }
    return out;
}

std::complex<double> eval_complex(const ScalarExpr& e, const std::map<std::string, double>& bindings) {
    std::complex<double> total = 0;
    for (const auto& [m, c] : e.terms()) {
        std::complex<double> v = c.to_complex();
        for (const auto& [t, ex] : m) {
            auto it = bindings.find(t.str());
            if (it == bindings.end()) throw std::invalid_argument("eval_numeric: unbound token " + t.str());
            v *= std::pow(it->second, ex);
        }
        total += v;
    }
    return total;
}

double eval_numeric(const ScalarExpr& e, const std::map<std::string, double>& bindings) {
    std::complex<double> total = 0;
    double scale = 0;
    for (const auto& [m, c] : e.terms()) {
        ScalarExpr single;
        single.add_term(m, c);
        auto v = eval_complex(single, bindings);
        total += v;
        scale = std::max(scale, std::abs(v));
    }
    if (std::abs(total.imag()) > 1e-12 * std::max(1.0, scale))
        throw std::runtime_error("eval_numeric: imaginary residue " + std::to_string(total.imag()));
    return total.real();
}

Gauss eval_exact(const ScalarExpr& e, const std::function<Gauss(const Token&)>& value) {
    Gauss total;
    for (const auto& [m, c] : e.terms()) {
        Gauss v = c;
        for (const auto& [t, ex] : m) v *= value(t).pow(ex);
        total += v;
    }
    return total;
}

ScalarExpr pi_tok() { return ScalarExpr(Token::pi()); }
ScalarExpr hprime_tok() { return ScalarExpr(Token::hprime()); }
ScalarExpr omega_tok() { return ScalarExpr(Token::omega()); }
ScalarExpr trid_tok() { return ScalarExpr(Token::trid()); }
ScalarExpr pair_tok(const std::string& v, const std::string& w) { return ScalarExpr(Token::pair(v, w)); }

}  // namespace ncres
