#include "ncres/clifford.hpp"

#include <sstream>

namespace ncres {

std::string VectorSym::key() const {
    switch (kind) {
        case VecKind::Basis: return "e" + std::to_string(index);
        case VecKind::Dxn: return "dxn";
        case VecKind::XiPrime: return "xi'";
        case VecKind::Field: return name;
        case VecKind::DField: return "nabla_{" + dir + "}" + name;
        case VecKind::SumIndex: return "e_" + name;
    }
    return "?";
}

std::string Gen::str() const {
    switch (flavor) {
        case Flavor::C: return "c(" + v.key() + ")";
        case Flavor::CB: return "cb(" + v.key() + ")";
        case Flavor::Opaque: return v.name;
    }
    return "?";
}

std::string word_str(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += " ";
        s += w[i].str();
    }
    return s;
}

CliffordElem::CliffordElem(const Word& w, ScalarExpr c) {
    if (!c.is_zero()) terms_.emplace(w, std::move(c));
}

CliffordElem::CliffordElem(ScalarExpr scalar) {
    if (!scalar.is_zero()) terms_.emplace(Word{}, std::move(scalar));
}

void CliffordElem::add_term(const Word& w, const ScalarExpr& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CliffordElem CliffordElem::operator-() const {
    CliffordElem out = *this;
    for (auto& [w, c] : out.terms_) c = -c;
    return out;
}

CliffordElem& CliffordElem::operator+=(const CliffordElem& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

CliffordElem& CliffordElem::operator-=(const CliffordElem& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

CliffordElem& CliffordElem::operator*=(const ScalarExpr& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    auto old = std::move(terms_);
    terms_.clear();
    for (auto& [w, c] : old) add_term(w, c * s);
    return *this;
}

CliffordElem& CliffordElem::operator*=(const Gauss& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
}

CliffordElem operator*(const CliffordElem& a, const CliffordElem& b) {
    CliffordElem out;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add_term(w, ca * cb);
        }
    return out;
}

CliffordElem CliffordElem::map_coeffs(const std::function<ScalarExpr(const ScalarExpr&)>& f) const {
    CliffordElem out;
    for (const auto& [w, c] : terms_) out.add_term(w, f(c));
    return out;
}

std::string CliffordElem::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (!w.empty()) os << " " << word_str(w);
    }
    return os.str();
}

}  // namespace ncres
