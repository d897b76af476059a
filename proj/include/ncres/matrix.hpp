#pragma once

#include "ncres/clifford.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace ncres {

// Basis of the exterior algebra: subsets of {1..n} as bitmasks, graded-lex order.
struct ExtBasis {
    int n{0};
    std::vector<unsigned> elements;
    std::vector<int> index_of;  // mask -> position

    explicit ExtBasis(int n);
    size_t size() const { return elements.size(); }
};

class CliffMatrix {
public:
    CliffMatrix() = default;
    explicit CliffMatrix(int n);  // zero matrix on the 2^n dimensional fiber
    static CliffMatrix identity(int n);

    int n() const { return n_; }
    size_t dim() const { return dim_; }
    const Gauss& at(size_t r, size_t c) const { return a_[r * dim_ + c]; }
    Gauss& at(size_t r, size_t c) { return a_[r * dim_ + c]; }
    bool is_zero() const;

    CliffMatrix& operator+=(const CliffMatrix& o);
    CliffMatrix& operator-=(const CliffMatrix& o);
    CliffMatrix& operator*=(const Gauss& s);
    friend CliffMatrix operator+(CliffMatrix a, const CliffMatrix& b) { return a += b; }
    friend CliffMatrix operator-(CliffMatrix a, const CliffMatrix& b) { return a -= b; }
    friend CliffMatrix operator*(CliffMatrix a, const Gauss& s) { return a *= s; }
    friend CliffMatrix operator*(const CliffMatrix& a, const CliffMatrix& b);
    friend bool operator==(const CliffMatrix& a, const CliffMatrix& b);

    CliffMatrix transpose() const;

private:
    int n_{0};
    size_t dim_{0};
    std::vector<Gauss> a_;
};

struct Generators {
    std::vector<CliffMatrix> c, cb;  // index 0 holds e_1
};

// c(e_i) = eps - iota, cb(e_i) = eps + iota; 1 <= n <= 8
Generators build_generators(int n);
const Generators& generators(int n);  // cached

struct NumGen {
    Flavor flavor{Flavor::C};
    std::vector<Rational> comps;
};

CliffMatrix word_matrix(const std::vector<NumGen>& word, int n);
Gauss matrix_trace(const CliffMatrix& m);
// trace of word_matrix(word, n) without forming the product
Gauss word_trace(const std::vector<NumGen>& word, int n);

// Rational model for every symbol a Clifford element may contain.
struct Instantiation {
    int n{4};
    std::vector<Rational> xi_prime;                    // tangential unit vector
    std::map<std::string, std::vector<Rational>> fields;
    std::map<std::string, CliffMatrix> opaque;         // "A", "A*"
    std::map<std::string, Gauss> tokens;               // keyed by Token::str()

    std::vector<Rational> vector_of(const VectorSym& v) const;
    Gauss token_value(const Token& t) const;
};

CliffMatrix instantiate(const CliffordElem& e, const Instantiation& inst);

// e applied to a fiber vector, word letters acting right to left
std::vector<Gauss> apply(const CliffordElem& e, const std::vector<Gauss>& v, const Instantiation& inst);

}  // namespace ncres
