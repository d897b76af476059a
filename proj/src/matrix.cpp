#include "ncres/matrix.hpp"
#include "ncres/wick.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace ncres {

ExtBasis::ExtBasis(int n_) : n(n_) {
    if (n < 1 || n > 8) throw std::invalid_argument("ExtBasis: n out of range");
    for (unsigned m = 0; m < (1u << n); ++m) elements.push_back(m);
    // graded by size, then lexicographic in the sorted index list
    auto as_list = [](unsigned m) {
        std::vector<int> v;
        for (int i = 0; i < 32; ++i)
            if (m >> i & 1) v.push_back(i);
        return v;
    };
    std::sort(elements.begin(), elements.end(), [&](unsigned x, unsigned y) {
        int px = std::popcount(x), py = std::popcount(y);
        if (px != py) return px < py;
        return as_list(x) < as_list(y);
    });
    index_of.assign(1u << n, -1);
    for (size_t i = 0; i < elements.size(); ++i) index_of[elements[i]] = static_cast<int>(i);
}

CliffMatrix::CliffMatrix(int n) : n_(n), dim_(size_t{1} << n), a_(dim_ * dim_) {}

CliffMatrix CliffMatrix::identity(int n) {
    CliffMatrix m(n);
    for (size_t i = 0; i < m.dim_; ++i) m.at(i, i) = Gauss(1);
    return m;
}

bool CliffMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Gauss& g) { return g.is_zero(); });
}

CliffMatrix& CliffMatrix::operator+=(const CliffMatrix& o) {
    for (size_t i = 0; i < a_.size(); ++i)
        if (!o.a_[i].is_zero()) a_[i] += o.a_[i];
    return *this;
}

CliffMatrix& CliffMatrix::operator-=(const CliffMatrix& o) {
    for (size_t i = 0; i < a_.size(); ++i)
        if (!o.a_[i].is_zero()) a_[i] -= o.a_[i];
    return *this;
}

CliffMatrix& CliffMatrix::operator*=(const Gauss& s) {
    for (auto& g : a_)
        if (!g.is_zero()) g *= s;
    return *this;
}

CliffMatrix operator*(const CliffMatrix& a, const CliffMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("CliffMatrix: size mismatch");
    CliffMatrix out(a.n_);
    const size_t d = a.dim_;
    // sparse rows of b
    std::vector<std::vector<size_t>> nz(d);
    for (size_t k = 0; k < d; ++k)
        for (size_t j = 0; j < d; ++j)
            if (!b.at(k, j).is_zero()) nz[k].push_back(j);
    for (size_t i = 0; i < d; ++i)
        for (size_t k = 0; k < d; ++k) {
            const Gauss& x = a.at(i, k);
            if (x.is_zero()) continue;
            for (size_t j : nz[k]) out.at(i, j) += x * b.at(k, j);
        }
    return out;
}

bool operator==(const CliffMatrix& a, const CliffMatrix& b) {
    return a.dim_ == b.dim_ && a.a_ == b.a_;
}

CliffMatrix CliffMatrix::transpose() const {
    CliffMatrix t(n_);
    for (size_t i = 0; i < dim_; ++i)
        for (size_t j = 0; j < dim_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Generators build_generators(int n) {
    ExtBasis basis(n);
    Generators g;
    for (int j = 0; j < n; ++j) {
        CliffMatrix eps(n), iota(n);
        for (size_t col = 0; col < basis.size(); ++col) {
            unsigned s = basis.elements[col];
            // sign from moving e_j past the smaller indices already present
            int before = std::popcount(s & ((1u << j) - 1));
            Gauss sign(before % 2 ? -1 : 1);
            if (s >> j & 1) iota.at(basis.index_of[s ^ (1u << j)], col) = sign;
            else eps.at(basis.index_of[s | (1u << j)], col) = sign;
        }
        g.c.push_back(eps - iota);
        g.cb.push_back(eps + iota);
    }
    return g;
}

const Generators& generators(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<Generators>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<Generators>(build_generators(n));
    return *slot;
}

namespace {

CliffMatrix vector_matrix(const NumGen& g, int n) {
    if (static_cast<int>(g.comps.size()) != n)
        throw std::invalid_argument("word_matrix: component count does not match n");
    const auto& gens = generators(n);
    CliffMatrix m(n);
    for (int k = 0; k < n; ++k) {
        if (sgn(g.comps[k]) == 0) continue;
        m += (g.flavor == Flavor::C ? gens.c[k] : gens.cb[k]) * Gauss(g.comps[k]);
    }
    return m;
}

}  // namespace

CliffMatrix word_matrix(const std::vector<NumGen>& word, int n) {
    CliffMatrix m = CliffMatrix::identity(n);
    for (const auto& g : word) m = m * vector_matrix(g, n);
    return m;
}

Gauss matrix_trace(const CliffMatrix& m) {
    Gauss t;
    for (size_t i = 0; i < m.dim(); ++i) t += m.at(i, i);
    return t;
}

Gauss word_trace(const std::vector<NumGen>& word, int n) {
    const Generators& g = generators(n);
    const size_t d = size_t{1} << n;
    // each generator is a signed permutation: column k has one entry, at row[k]
    struct Perm {
        std::vector<size_t> row;
        std::vector<Gauss> val;
    };
    auto perm_of = [d](const CliffMatrix& m) {
        Perm p{std::vector<size_t>(d), std::vector<Gauss>(d)};
        for (size_t k = 0; k < d; ++k)
            for (size_t r = 0; r < d; ++r)
                if (!m.at(r, k).is_zero()) {
                    p.row[k] = r;
                    p.val[k] = m.at(r, k);
                    break;
                }
        return p;
    };
    std::vector<Perm> pc, pcb;
    for (int i = 0; i < n; ++i) {
        pc.push_back(perm_of(g.c[i]));
        pcb.push_back(perm_of(g.cb[i]));
    }
    Gauss t;
    for (size_t b = 0; b < d; ++b) {
        std::vector<Gauss> v(d);
        v[b] = Gauss(1);
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            std::vector<Gauss> w(d);
            const auto& ps = it->flavor == Flavor::C ? pc : pcb;
            for (int i = 0; i < n; ++i) {
                if (it->comps[i] == 0) continue;
                const Gauss s(it->comps[i]);
                for (size_t k = 0; k < d; ++k)
                    if (!v[k].is_zero()) w[ps[i].row[k]] += s * ps[i].val[k] * v[k];
            }
            v = std::move(w);
        }
        t += v[b];
    }
    return t;
}

std::vector<Rational> Instantiation::vector_of(const VectorSym& v) const {
    std::vector<Rational> out(n, Rational(0));
    switch (v.kind) {
        case VecKind::Basis:
            if (v.index < 1 || v.index > n) throw std::invalid_argument("instantiate: basis index out of range");
            out[v.index - 1] = 1;
            return out;
        case VecKind::Dxn: out[n - 1] = 1; return out;
        case VecKind::XiPrime:
            if (static_cast<int>(xi_prime.size()) != n) throw std::invalid_argument("instantiate: xi' not set");
            return xi_prime;
        case VecKind::Field:
        case VecKind::DField: {
            auto it = fields.find(v.key());
            if (it == fields.end()) throw std::invalid_argument("instantiate: unbound field " + v.key());
            return it->second;
        }
        case VecKind::SumIndex: break;
    }
    throw std::invalid_argument("instantiate: summation index " + v.key());
}

Gauss Instantiation::token_value(const Token& t) const {
    if (t.kind == TokKind::TrId) return Gauss(long{1} << n);
    if (t.kind == TokKind::Pair) {
        auto a = vector_of(parse_vector_key(t.a)), b = vector_of(parse_vector_key(t.b));
        Rational s = 0;
        for (int i = 0; i < n; ++i) s += a[i] * b[i];
        return Gauss(s);
    }
    auto it = tokens.find(t.str());
    if (it == tokens.end()) throw std::invalid_argument("instantiate: unbound token " + t.str());
    return it->second;
}

CliffMatrix instantiate(const CliffordElem& e, const Instantiation& inst) {
    CliffMatrix out(inst.n);
    for (const auto& [w, c] : e.terms()) {
        Gauss coef = eval_exact(c, [&](const Token& t) { return inst.token_value(t); });
        if (coef.is_zero()) continue;
        CliffMatrix m = CliffMatrix::identity(inst.n);
        for (const auto& g : w) {
            if (g.flavor == Flavor::Opaque) {
                auto it = inst.opaque.find(g.v.name);
                if (it == inst.opaque.end()) throw std::invalid_argument("instantiate: unbound operator " + g.v.name);
                m = m * it->second;
            } else {
                m = m * vector_matrix({g.flavor, inst.vector_of(g.v)}, inst.n);
            }
        }
        out += m * coef;
    }
    return out;
}

namespace {

struct SparseMat {
    std::vector<std::vector<std::pair<size_t, Gauss>>> rows;

    explicit SparseMat(const CliffMatrix& m) : rows(m.dim()) {
        for (size_t i = 0; i < m.dim(); ++i)
            for (size_t j = 0; j < m.dim(); ++j)
                if (!m.at(i, j).is_zero()) rows[i].emplace_back(j, m.at(i, j));
    }
    std::vector<Gauss> operator*(const std::vector<Gauss>& v) const {
        std::vector<Gauss> out(rows.size());
        for (size_t i = 0; i < rows.size(); ++i)
            for (const auto& [j, x] : rows[i])
                if (!v[j].is_zero()) out[i] += x * v[j];
        return out;
    }
};

}  // namespace

std::vector<Gauss> apply(const CliffordElem& e, const std::vector<Gauss>& v, const Instantiation& inst) {
    std::map<Gen, SparseMat> letters;
    auto letter = [&](const Gen& g) -> const SparseMat& {
        auto it = letters.find(g);
        if (it != letters.end()) return it->second;
        CliffMatrix m;
        if (g.flavor == Flavor::Opaque) {
            auto o = inst.opaque.find(g.v.name);
            if (o == inst.opaque.end()) throw std::invalid_argument("instantiate: unbound operator " + g.v.name);
            m = o->second;
        } else {
            m = vector_matrix({g.flavor, inst.vector_of(g.v)}, inst.n);
        }
        return letters.emplace(g, SparseMat(m)).first->second;
    };
    std::vector<Gauss> out(v.size());
    for (const auto& [w, c] : e.terms()) {
        Gauss coef = eval_exact(c, [&](const Token& t) { return inst.token_value(t); });
        if (coef.is_zero()) continue;
        std::vector<Gauss> x = v;
        for (size_t k = w.size(); k-- > 0;) x = letter(w[k]) * x;
        for (size_t i = 0; i < x.size(); ++i)
            if (!x[i].is_zero()) out[i] += coef * x[i];
    }
    return out;
}

}  // namespace ncres
