#pragma once

#include "ncres/scalar.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace ncres {

enum class VecKind : unsigned char { Basis, Dxn, XiPrime, Field, DField, SumIndex };

// Basis(i) is e_i with i < n; Dxn is the unit normal e_n = dx_n at x0;
// DField carries base field `name` differentiated along `dir`.
struct VectorSym {
    VecKind kind{VecKind::Field};
    int index{0};
    std::string name;
    std::string dir;

    static VectorSym basis(int i) { return {VecKind::Basis, i, {}, {}}; }
    static VectorSym dxn() { return {VecKind::Dxn, 0, {}, {}}; }
    static VectorSym xi_prime() { return {VecKind::XiPrime, 0, {}, {}}; }
    static VectorSym field(std::string n) { return {VecKind::Field, 0, std::move(n), {}}; }
    static VectorSym dfield(std::string dir, std::string base) {
        return {VecKind::DField, 0, std::move(base), std::move(dir)};
    }
    static VectorSym sum_index(std::string j) { return {VecKind::SumIndex, 0, std::move(j), {}}; }

    std::string key() const;
    friend bool operator==(const VectorSym&, const VectorSym&) = default;
    friend auto operator<=>(const VectorSym&, const VectorSym&) = default;
};

enum class Flavor : unsigned char { C, CB, Opaque };

// one letter of a word: c(v), cb(v), or an opaque operator named v.name
struct Gen {
    Flavor flavor{Flavor::C};
    VectorSym v;

    static Gen c(VectorSym v) { return {Flavor::C, std::move(v)}; }
    static Gen cb(VectorSym v) { return {Flavor::CB, std::move(v)}; }
    static Gen opaque(std::string name) { return {Flavor::Opaque, VectorSym::field(std::move(name))}; }

    std::string str() const;
    friend bool operator==(const Gen&, const Gen&) = default;
    friend auto operator<=>(const Gen&, const Gen&) = default;
};

using Word = std::vector<Gen>;

std::string word_str(const Word& w);

// Free linear combination of words; nothing is simplified inside a word.
class CliffordElem {
public:
    CliffordElem() = default;
    explicit CliffordElem(const Word& w, ScalarExpr c = ScalarExpr::one());
    CliffordElem(ScalarExpr scalar);  // scalar * identity

    static CliffordElem one() { return CliffordElem(Word{}); }
    static CliffordElem zero() { return {}; }
    static CliffordElem gen(const Gen& g) { return CliffordElem(Word{g}); }
    static CliffordElem c(const VectorSym& v) { return gen(Gen::c(v)); }
    static CliffordElem cb(const VectorSym& v) { return gen(Gen::cb(v)); }

    const std::map<Word, ScalarExpr>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    void add_term(const Word& w, const ScalarExpr& c);

    CliffordElem operator-() const;
    CliffordElem& operator+=(const CliffordElem& o);
    CliffordElem& operator-=(const CliffordElem& o);
    CliffordElem& operator*=(const ScalarExpr& s);
    CliffordElem& operator*=(const Gauss& s);
    friend CliffordElem operator+(CliffordElem a, const CliffordElem& b) { return a += b; }
    friend CliffordElem operator-(CliffordElem a, const CliffordElem& b) { return a -= b; }
    friend CliffordElem operator*(const CliffordElem& a, const CliffordElem& b);
    friend CliffordElem operator*(CliffordElem a, const ScalarExpr& s) { return a *= s; }
    friend CliffordElem operator*(const ScalarExpr& s, CliffordElem a) { return a *= s; }
    friend CliffordElem operator*(CliffordElem a, const Gauss& s) { return a *= s; }
    friend CliffordElem operator*(const Gauss& s, CliffordElem a) { return a *= s; }
    friend bool operator==(const CliffordElem& a, const CliffordElem& b) { return a.terms_ == b.terms_; }

    // apply a map to every scalar coefficient
    CliffordElem map_coeffs(const std::function<ScalarExpr(const ScalarExpr&)>& f) const;

    std::string str() const;

private:
    std::map<Word, ScalarExpr> terms_;
};

}  // namespace ncres
