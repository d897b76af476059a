#include "ncres/wick.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ncres {

namespace {

bool symbolic_kind(VecKind k) {
    return k == VecKind::Field || k == VecKind::DField || k == VecKind::SumIndex;
}

}  // namespace

ScalarExpr pairing(const VectorSym& v, const VectorSym& w) {
    if (symbolic_kind(v.kind) || symbolic_kind(w.kind)) return pair_tok(v.key(), w.key());
    const VectorSym& a = v.kind <= w.kind ? v : w;
    const VectorSym& b = v.kind <= w.kind ? w : v;
    switch (a.kind) {
        case VecKind::Basis:
            if (b.kind == VecKind::Basis) return a.index == b.index ? 1 : 0;
            if (b.kind == VecKind::Dxn) return 0;
            return pair_tok(a.key(), b.key());  // component xi_i
        case VecKind::Dxn:
            return b.kind == VecKind::Dxn ? 1 : 0;
        case VecKind::XiPrime:
            return 1;
        default:
            break;
    }
    throw std::logic_error("pairing: unreachable");
}

ScalarExpr contraction(const Gen& a, const Gen& b) {
    if (a.flavor == Flavor::Opaque || b.flavor == Flavor::Opaque)
        throw std::invalid_argument("contraction: opaque letter");
    if (a.flavor != b.flavor) return 0;
    ScalarExpr g = pairing(a.v, b.v);
    return a.flavor == Flavor::C ? -g : g;
}

namespace {

void wick_rec(const Word& w, const std::vector<int>& rest, const ScalarExpr& acc, ScalarExpr& out) {
    if (rest.empty()) {
        out += acc;
        return;
    }
    const Gen& first = w[rest[0]];
    for (size_t t = 1; t < rest.size(); ++t) {
        ScalarExpr b = contraction(first, w[rest[t]]);
        if (b.is_zero()) continue;
        std::vector<int> next;
        next.reserve(rest.size() - 2);
        for (size_t u = 1; u < rest.size(); ++u)
            if (u != t) next.push_back(rest[u]);
        ScalarExpr term = acc * b;
        if ((t - 1) % 2) term = -term;
        wick_rec(w, next, term, out);
    }
}

void expand_rec(const Word& w, const std::vector<int>& rest, const ScalarExpr& acc, Word& unm,
                std::vector<WickTerm>& out) {
    if (rest.empty()) {
        out.push_back({acc, unm});
        return;
    }
    const Gen& first = w[rest[0]];
    std::vector<int> tail(rest.begin() + 1, rest.end());
    unm.push_back(first);
    expand_rec(w, tail, acc, unm, out);
    unm.pop_back();
    for (size_t t = 1; t < rest.size(); ++t) {
        ScalarExpr b = contraction(first, w[rest[t]]);
        if (b.is_zero()) continue;
        std::vector<int> next;
        for (size_t u = 1; u < rest.size(); ++u)
            if (u != t) next.push_back(rest[u]);
        ScalarExpr term = acc * b;
        if ((t - 1) % 2) term = -term;
        expand_rec(w, next, term, unm, out);
    }
}

std::string slot_body(const std::string& name, const Word& slots) {
    std::string s = name;
    for (size_t i = 0; i < slots.size(); ++i) s += (i == 0 ? " " : "^") + slots[i].str();
    return s;
}

}  // namespace

ScalarExpr wick_trace(const Word& w) {
    for (const auto& g : w)
        if (g.flavor == Flavor::Opaque) throw std::invalid_argument("wick_trace: opaque letter " + g.str());
    if (w.size() % 2) return 0;
    std::vector<int> idx(w.size());
    std::iota(idx.begin(), idx.end(), 0);
    ScalarExpr out;
    wick_rec(w, idx, trid_tok(), out);
    return out;
}

std::vector<WickTerm> wick_expand(const Word& w) {
    std::vector<int> idx(w.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<WickTerm> out;
    Word unm;
    expand_rec(w, idx, ScalarExpr::one(), unm, out);
    return out;
}

ScalarExpr trace_word(const Word& w) {
    int opaque = -1, count = 0;
    for (size_t i = 0; i < w.size(); ++i)
        if (w[i].flavor == Flavor::Opaque) {
            opaque = static_cast<int>(i);
            ++count;
        }
    if (count == 0) return wick_trace(w);
    if (count > 1) throw std::invalid_argument("trace: more than one opaque letter in " + word_str(w));

    Word rest(w.begin() + opaque + 1, w.end());
    rest.insert(rest.end(), w.begin(), w.begin() + opaque);
    const std::string& name = w[opaque].v.name;
    ScalarExpr out;
    for (auto& term : wick_expand(rest)) {
        Word slots = term.unmatched;
        for (const auto& g : slots)
            if (g.v.kind == VecKind::SumIndex)
                throw std::invalid_argument("trace: summation index left beside an opaque letter");
        int sign = 1;
        for (size_t i = 0; i < slots.size(); ++i)
            for (size_t j = 0; j + 1 < slots.size() - i; ++j)
                if (slots[j + 1] < slots[j]) {
                    std::swap(slots[j], slots[j + 1]);
                    sign = -sign;
                }
        bool repeated = false;
        for (size_t i = 0; i + 1 < slots.size(); ++i)
            if (slots[i] == slots[i + 1]) repeated = true;
        if (repeated) continue;
        ScalarExpr t = term.coeff * ScalarExpr(Token::trace(slot_body(name, slots)));
        out += sign > 0 ? t : -t;
    }
    return out;
}

ScalarExpr trace(const CliffordElem& e) {
    ScalarExpr out;
    for (const auto& [w, c] : e.terms()) {
        ScalarExpr t = trace_word(w);
        if (!t.is_zero()) out += c * t;
    }
    return out;
}

PerturbationSpec PerturbationSpec::make_zero() {
    PerturbationSpec p;
    p.zero = true;
    p.text = "0";
    return p;
}

PerturbationSpec PerturbationSpec::make_generic() {
    PerturbationSpec p;
    p.generic = true;
    p.text = "A";
    return p;
}

std::vector<std::string> PerturbationSpec::field_names() const {
    std::vector<std::string> out;
    for (const auto& g : word)
        if (std::find(out.begin(), out.end(), g.v.name) == out.end()) out.push_back(g.v.name);
    return out;
}

PerturbationSpec adjoint(const PerturbationSpec& a) {
    PerturbationSpec out = a;
    if (a.zero || a.generic) return out;
    std::reverse(out.word.begin(), out.word.end());
    int t = 0;
    for (const auto& g : a.word)
        if (g.flavor == Flavor::C) ++t;
    if (t % 2) out.sign = -out.sign;
    return out;
}

namespace {

bool reserved_name(const std::string& s) {
    if (s == "dxn" || s == "A" || s == "i" || s == "pi" || s == "s") return true;
    if (s.size() >= 2 && s[0] == 'e' && (std::isdigit(static_cast<unsigned char>(s[1])) || s[1] == '_')) return true;
    return false;
}

[[noreturn]] void parse_fail(size_t pos, const std::string& what) {
    throw std::invalid_argument("perturbation parse error at position " + std::to_string(pos) + ": " + what);
}

}  // namespace

PerturbationSpec parse_perturbation(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t == "0" || t == "A=0") {
        auto p = PerturbationSpec::make_zero();
        p.text = text;
        return p;
    }
    if (t == "A") return PerturbationSpec::make_generic();

    PerturbationSpec p;
    p.text = text;
    size_t i = 0;
    const std::string& s = text;
    auto skip = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    skip();
    if (i == s.size()) parse_fail(i, "empty perturbation");
    while (i < s.size()) {
        Flavor f;
        if (s.compare(i, 3, "cb(") == 0) {
            f = Flavor::CB;
            i += 3;
        } else if (s.compare(i, 2, "c(") == 0) {
            f = Flavor::C;
            i += 2;
        } else {
            parse_fail(i, "expected c( or cb(");
        }
        skip();
        size_t start = i;
        if (i >= s.size() || !std::isalpha(static_cast<unsigned char>(s[i]))) parse_fail(i, "expected a field name");
        while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
        std::string name = s.substr(start, i - start);
        if (reserved_name(name)) parse_fail(start, "reserved name '" + name + "'");
        skip();
        if (i >= s.size() || s[i] != ')') parse_fail(i, "expected )");
        ++i;
        p.word.push_back({f, VectorSym::field(name)});
        skip();
    }
    return p;
}

CliffordElem perturbation_elem(const PerturbationSpec& a, bool star) {
    if (a.zero) return {};
    if (a.generic) return CliffordElem::gen(Gen::opaque(star ? "A*" : "A"));
    PerturbationSpec w = star ? adjoint(a) : a;
    return CliffordElem(w.word, ScalarExpr(Gauss(w.sign)));
}

VectorSym parse_vector_key(const std::string& key) {
    if (key == "dxn") return VectorSym::dxn();
    if (key == "xi'") return VectorSym::xi_prime();
    if (key.size() > 2 && key.rfind("e_", 0) == 0) return VectorSym::sum_index(key.substr(2));
    if (key.size() > 1 && key[0] == 'e' &&
        std::all_of(key.begin() + 1, key.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        return VectorSym::basis(std::stoi(key.substr(1)));
    if (key.rfind("nabla_{", 0) == 0) {
        int depth = 0;
        for (size_t i = 6; i < key.size(); ++i) {
            if (key[i] == '{') ++depth;
            if (key[i] == '}' && --depth == 0) return VectorSym::dfield(key.substr(7, i - 7), key.substr(i + 1));
        }
        throw std::invalid_argument("bad vector key " + key);
    }
    return VectorSym::field(key);
}

Word parse_word_text(const std::string& text) {
    Word out;
    size_t i = 0;
    while (i < text.size()) {
        char ch = text[i];
        if (ch == ' ' || ch == '^') {
            ++i;
            continue;
        }
        Flavor f;
        if (text.compare(i, 3, "cb(") == 0) {
            f = Flavor::CB;
            i += 3;
        } else if (text.compare(i, 2, "c(") == 0) {
            f = Flavor::C;
            i += 2;
        } else {
            throw std::invalid_argument("bad word text '" + text + "' at " + std::to_string(i));
        }
        int depth = 1;
        size_t start = i;
        while (i < text.size() && depth) {
            if (text[i] == '(') ++depth;
            if (text[i] == ')') --depth;
            ++i;
        }
        if (depth) throw std::invalid_argument("unbalanced word text '" + text + "'");
        out.push_back({f, parse_vector_key(text.substr(start, i - 1 - start))});
    }
    return out;
}

namespace {

// antisymmetrized product :u_1...u_k: as a Clifford element
CliffordElem antisym(const Word& slots) {
    std::vector<int> perm(slots.size());
    std::iota(perm.begin(), perm.end(), 0);
    CliffordElem out;
    long count = 0;
    do {
        int inv = 0;
        for (size_t i = 0; i < perm.size(); ++i)
            for (size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) ++inv;
        Word w;
        for (int p : perm) w.push_back(slots[p]);
        out.add_term(w, ScalarExpr(Gauss(inv % 2 ? -1 : 1)));
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out * Gauss::frac(1, count);
}

}  // namespace

ScalarExpr specialize_traces(const ScalarExpr& e, const PerturbationSpec& a) {
    if (a.generic) return e;
    return e.substitute([&](const Token& t) -> std::optional<ScalarExpr> {
        if (t.kind != TokKind::Trace) return std::nullopt;
        const std::string& body = t.a;
        size_t sp = body.find(' ');
        std::string name = body.substr(0, sp);
        if (name != "A" && name != "A*") return std::nullopt;
        if (a.zero) return ScalarExpr::zero();
        Word slots = sp == std::string::npos ? Word{} : parse_word_text(body.substr(sp + 1));
        CliffordElem op = perturbation_elem(a, name == "A*");
        return trace(op * antisym(slots));
    });
}

namespace {

bool refs_index(const std::string& key, const std::string& ikey) {
    return key == ikey || key.rfind("nabla_{" + ikey + "}", 0) == 0;
}

std::string nabla_base(const std::string& key) {
    return parse_vector_key(key).name;
}

}  // namespace

ScalarExpr contract_index(const ScalarExpr& e, const std::string& j, int dim) {
    const std::string ikey = "e_" + j;
    ScalarExpr out;
    for (const auto& [m, c] : e.terms()) {
        Monomial rest;
        std::vector<Token> hits;
        for (const auto& [t, ex] : m) {
            bool hit = t.kind == TokKind::Pair && (refs_index(t.a, ikey) || refs_index(t.b, ikey));
            if (!hit) {
                rest.emplace_back(t, ex);
                continue;
            }
            for (int k = 0; k < ex; ++k) hits.push_back(t);
        }
        ScalarExpr rest_e;
        rest_e.add_term(rest, c);
        int total = 0;
        for (const auto& t : hits) total += refs_index(t.a, ikey) + refs_index(t.b, ikey);
        if (total == 0) {
            out += rest_e * ScalarExpr(Gauss(dim));
            continue;
        }
        if (total != 2) throw std::invalid_argument("basis_sum: nonlinear occurrence of index " + j);
        ScalarExpr val;
        if (hits.size() == 1) {
            const Token& t = hits[0];
            if (t.a == ikey && t.b == ikey) val = Gauss(dim);
            else {
                const std::string& nab = t.a == ikey ? t.b : t.a;
                val = ScalarExpr(Token::div(nabla_base(nab)));
            }
        } else {
            // each token references the index once: split into (ref, other)
            auto split = [&](const Token& t) {
                return refs_index(t.a, ikey) ? std::make_pair(t.a, t.b) : std::make_pair(t.b, t.a);
            };
            auto [r1, o1] = split(hits[0]);
            auto [r2, o2] = split(hits[1]);
            if (r1 != ikey && r2 != ikey) throw std::invalid_argument("basis_sum: two derivative slots share an index");
            if (r1 == ikey && r2 == ikey) val = pairing(parse_vector_key(o1), parse_vector_key(o2));
            else {
                if (r1 == ikey) {
                    std::swap(r1, r2);
                    std::swap(o1, o2);
                }
                // r1 = nabla_{e_j}X, r2 = e_j: g(nabla_{e_j}X, o1) g(e_j, o2) -> g(nabla_{o2}X, o1)
                val = pairing(VectorSym::dfield(o2, nabla_base(r1)), parse_vector_key(o1));
            }
        }
        out += rest_e * val;
    }
    return out;
}

ScalarExpr basis_sum(const CliffordElem& e, const std::string& j, int n) {
    return contract_index(trace(e), j, n);
}

TraceId trace_id_from_string(const std::string& s) {
    static const std::map<std::string, TraceId> m = {
        {"TR_ASTAR_A", TraceId::TrAstarA},           {"TR_A_SQ", TraceId::TrASq},
        {"SUM_AC_AC", TraceId::SumAcAc},             {"SUM_ASTARC_ASTARC", TraceId::SumAstarcAstarc},
        {"TR_A_CDXN", TraceId::TrACdxn},             {"TR_ASTAR_CDXN", TraceId::TrAstarCdxn},
        {"SUM_NABLA_ASTAR_C", TraceId::SumNablaAstarC}, {"SUM_C_NABLA_A", TraceId::SumCNablaA},
        {"CURV_TERM", TraceId::CurvTerm}};
    auto it = m.find(s);
    if (it == m.end()) throw std::invalid_argument("unknown trace identity " + s);
    return it->second;
}

std::string trace_id_name(TraceId id) {
    switch (id) {
        case TraceId::TrAstarA: return "TR_ASTAR_A";
        case TraceId::TrASq: return "TR_A_SQ";
        case TraceId::SumAcAc: return "SUM_AC_AC";
        case TraceId::SumAstarcAstarc: return "SUM_ASTARC_ASTARC";
        case TraceId::TrACdxn: return "TR_A_CDXN";
        case TraceId::TrAstarCdxn: return "TR_ASTAR_CDXN";
        case TraceId::SumNablaAstarC: return "SUM_NABLA_ASTAR_C";
        case TraceId::SumCNablaA: return "SUM_C_NABLA_A";
        case TraceId::CurvTerm: return "CURV_TERM";
    }
    return "?";
}

namespace {

// sum over factors of a with one field X replaced by nabla_{e_j}X
CliffordElem nabla_word(const PerturbationSpec& a, const std::string& j) {
    CliffordElem out;
    for (size_t k = 0; k < a.word.size(); ++k) {
        Word w = a.word;
        w[k].v = VectorSym::dfield("e_" + j, w[k].v.name);
        out.add_term(w, ScalarExpr(Gauss(a.sign)));
    }
    return out;
}

ScalarExpr generic_identity(TraceId id) {
    switch (id) {
        case TraceId::TrAstarA: return ScalarExpr(Token::trace("A* A"));
        case TraceId::TrASq: return ScalarExpr(Token::trace("A A"));
        case TraceId::SumAcAc: return ScalarExpr(Token::trace("A c(e_j) A c(e_j)"));
        case TraceId::SumAstarcAstarc: return ScalarExpr(Token::trace("A* c(e_j) A* c(e_j)"));
        case TraceId::TrACdxn: return ScalarExpr(Token::trace("A c(dxn)"));
        case TraceId::TrAstarCdxn: return ScalarExpr(Token::trace("A* c(dxn)"));
        case TraceId::SumNablaAstarC: return ScalarExpr(Token::trace("nabla_{e_j}(A*) c(e_j)"));
        case TraceId::SumCNablaA: return ScalarExpr(Token::trace("c(e_j) nabla_{e_j}(A)"));
        default: break;
    }
    throw std::logic_error("generic_identity");
}

}  // namespace

ScalarExpr trace_identity(TraceId id, const PerturbationSpec& a, int n) {
    if (id == TraceId::CurvTerm) {
        Word w = {Gen::cb(VectorSym::sum_index("i")), Gen::cb(VectorSym::sum_index("j")),
                  Gen::c(VectorSym::sum_index("k")), Gen::c(VectorSym::sum_index("l"))};
        return wick_trace(w);
    }
    if (a.zero) return 0;
    if (a.generic) return generic_identity(id);
    const std::string j = "j";
    CliffordElem A = perturbation_elem(a, false);
    CliffordElem As = perturbation_elem(a, true);
    CliffordElem cj = CliffordElem::c(VectorSym::sum_index(j));
    switch (id) {
        case TraceId::TrAstarA: return trace(As * A);
        case TraceId::TrASq: return trace(A * A);
        case TraceId::SumAcAc: return basis_sum(A * cj * A * cj, j, n);
        case TraceId::SumAstarcAstarc: return basis_sum(As * cj * As * cj, j, n);
        case TraceId::TrACdxn: return trace(A * CliffordElem::c(VectorSym::dxn()));
        case TraceId::TrAstarCdxn: return trace(As * CliffordElem::c(VectorSym::dxn()));
        case TraceId::SumNablaAstarC: return basis_sum(nabla_word(adjoint(a), j) * cj, j, n);
        case TraceId::SumCNablaA: return basis_sum(cj * nabla_word(a, j), j, n);
        default: break;
    }
    throw std::logic_error("trace_identity");
}

}  // namespace ncres
