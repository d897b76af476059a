#include "ncres/expr_parse.hpp"

#include <cctype>

namespace ncres {

namespace {

class Parser {
public:
    explicit Parser(const std::string& t) : s_(t) {}

    XiScalar parse() {
        XiScalar v = expr();
        skip();
        if (p_ != s_.size()) fail("unexpected '" + std::string(1, s_[p_]) + "'");
        return v;
    }

private:
    const std::string& s_;
    size_t p_ = 0;

    [[noreturn]] void fail(const std::string& m) const { throw ParseError(m, p_); }

    void skip() {
        while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
    }
    bool eat(const std::string& tok) {
        skip();
        if (s_.compare(p_, tok.size(), tok) == 0) {
            p_ += tok.size();
            return true;
        }
        return false;
    }
    void expect(const std::string& tok) {
        if (!eat(tok)) fail("expected '" + tok + "'");
    }
    bool peek_word(const std::string& w) {
        skip();
        if (s_.compare(p_, w.size(), w) != 0) return false;
        size_t e = p_ + w.size();
        return e >= s_.size() || !(std::isalnum(static_cast<unsigned char>(s_[e])) || s_[e] == '_');
    }

    static XiScalar scalar(const ScalarExpr& e) { return XiScalar::constant(e); }

    XiScalar expr() {
        XiScalar v;
        bool neg = eat("-");
        if (!neg) eat("+");
        v = term();
        if (neg) v = -v;
        for (;;) {
            if (eat("+")) v += term();
            else if (eat("-")) v -= term();
            else return v;
        }
    }

    XiScalar term() {
        XiScalar v = unary();
        for (;;) {
            if (eat("*")) v = v * unary();
            else if (eat("/")) v = divide(v, unary());
            else return v;
        }
    }

    XiScalar unary() {
        if (eat("-")) return -unary();
        return power();
    }

    XiScalar power() {
        XiScalar b = atom();
        if (eat("^")) {
            long e = integer();
            XiScalar r = scalar(ScalarExpr::one());
            for (long k = 0; k < e; ++k) r = r * b;
            return r;
        }
        return b;
    }

    long integer() {
        skip();
        size_t st = p_;
        while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
        if (st == p_) fail("expected an integer");
        return std::stol(s_.substr(st, p_ - st));
    }

    std::string key() {
        skip();
        size_t st = p_;
        int depth = 0;
        while (p_ < s_.size()) {
            char c = s_[p_];
            if (c == '{') ++depth;
            if (c == '}') --depth;
            if (depth == 0 && (c == ',' || c == ')' || c == '|')) break;
            ++p_;
        }
        std::string k = s_.substr(st, p_ - st);
        while (!k.empty() && std::isspace(static_cast<unsigned char>(k.back()))) k.pop_back();
        if (k.empty()) fail("expected a vector name");
        return k;
    }

    static std::string normalize_body(const std::string& b) {
        std::string out;
        bool space = false;
        for (char c : b) {
            if (std::isspace(static_cast<unsigned char>(c))) {
                space = true;
                continue;
            }
            if (space && !out.empty()) out += ' ';
            space = false;
            out += c;
        }
        return out;
    }

    XiScalar atom() {
        skip();
        if (p_ >= s_.size()) fail("unexpected end of expression");
        char c = s_[p_];
        if (std::isdigit(static_cast<unsigned char>(c))) return scalar(ScalarExpr(Gauss(integer())));
        if (eat("(")) {
            XiScalar v = expr();
            expect(")");
            return v;
        }
        if (eat("|")) {
            std::string k = key();
            expect("|");
            expect("^");
            long e = integer();
            if (e % 2) fail("odd power of a norm");
            return scalar(ScalarExpr(Token::pair(k, k), static_cast<int>(e / 2)));
        }
        if (eat("tr[")) {
            size_t st = p_;
            int depth = 1;
            while (p_ < s_.size() && depth) {
                if (s_[p_] == '[') ++depth;
                if (s_[p_] == ']') --depth;
                if (depth) ++p_;
            }
            if (depth) fail("unterminated tr[");
            std::string body = normalize_body(s_.substr(st, p_ - st));
            ++p_;
            return scalar(ScalarExpr(Token::trace(body)));
        }
        if (eat("g(")) {
            std::string a = key();
            expect(",");
            std::string b = key();
            expect(")");
            return scalar(pair_tok(a, b));
        }
        if (eat("div(")) {
            std::string a = key();
            expect(")");
            return scalar(ScalarExpr(Token::div(a)));
        }
        if (eat("h'")) {
            eat("(0)");
            return scalar(hprime_tok());
        }
        if (eat("dx'")) return scalar(ScalarExpr(Token::dxprime()));
        if (peek_word("pi")) {
            p_ += 2;
            return scalar(pi_tok());
        }
        if (peek_word("Omega")) {
            p_ += 5;
            return scalar(omega_tok());
        }
        if (peek_word("trid")) {
            p_ += 4;
            return scalar(trid_tok());
        }
        if (peek_word("s")) {
            p_ += 1;
            return scalar(ScalarExpr(Token::scurv()));
        }
        if (peek_word("i")) {
            p_ += 1;
            return scalar(ScalarExpr(Gauss::I()));
        }
        if (peek_word("x") || peek_word("xi_n")) {
            p_ += s_.compare(p_, 4, "xi_n") == 0 ? 4 : 1;
            return XiScalar::monomial(ScalarExpr::one(), 1);
        }
        fail("unknown symbol");
    }

    // v / d where d is a nonzero number times (x-i)^a (x+i)^b
    XiScalar divide(const XiScalar& v, const XiScalar& d) {
        if (d.is_zero()) fail("division by zero");
        std::vector<Gauss> num;
        for (const auto& c : d.num) {
            if (!c.is_constant() && !c.is_zero()) fail("division by a non-numeric expression");
            num.push_back(c.is_zero() ? Gauss(0) : c.constant_term());
        }
        int pa = -d.a, pb = -d.b;
        auto eval = [&](const Gauss& r) {
            Gauss s;
            for (size_t k = num.size(); k-- > 0;) s = s * r + num[k];
            return s;
        };
        auto divide_out = [&](const Gauss& r) {
            std::vector<Gauss> q(num.size() - 1);
            Gauss carry;
            for (size_t k = num.size() - 1; k >= 1; --k) {
                carry = num[k] + carry * r;
                q[k - 1] = carry;
            }
            num = q;
        };
        while (num.size() > 1 && eval(Gauss::I()).is_zero()) {
            divide_out(Gauss::I());
            ++pa;
        }
        while (num.size() > 1 && eval(-Gauss::I()).is_zero()) {
            divide_out(-Gauss::I());
            ++pb;
        }
        if (num.size() != 1) fail("denominator must factor into (x-i) and (x+i)");
        XiScalar r = v * (Gauss(1) / num[0]);
        // multiply by (x-i)^{-pa} (x+i)^{-pb}
        if (pa < 0 || pb < 0) {
            XiScalar up = XiScalar(XiScalar::mul_linear_pow(XiScalar::mul_linear_pow({ScalarExpr::one()}, 1, std::max(0, -pa)), -1,
                                                            std::max(0, -pb)),
                                   0, 0);
            r = r * up;
        }
        r = XiScalar(r.num, r.a + std::max(0, pa), r.b + std::max(0, pb));
        return r.reduced();
    }
};

}  // namespace

XiScalar parse_xi_expr(const std::string& text) { return Parser(text).parse(); }

ScalarExpr parse_result_expr(const std::string& text) {
    XiScalar v = Parser(text).parse();
    if (v.is_zero()) return {};
    if (v.a || v.b || v.degree() > 0) throw ParseError("result expression depends on xi_n", 0);
    return canonicalize(v.num[0]);
}

}  // namespace ncres
