#pragma once

#include "ncres/clifford.hpp"

#include <map>
#include <string>
#include <vector>

namespace ncres {

// g(v,w) under the boundary/interior conventions: orthonormal basis,
// g(xi',xi') = 1, g(xi',dxn) = 0, anything involving a field stays a token.
ScalarExpr pairing(const VectorSym& v, const VectorSym& w);

// contraction B(a,b): -g for c/c, +g for cb/cb, 0 for mixed pairs
ScalarExpr contraction(const Gen& a, const Gen& b);

// TR_ID * sum over perfect matchings; words must not contain opaque letters
ScalarExpr wick_trace(const Word& w);

// One term of the normal-ordering expansion w = sum coeff * :unmatched:
struct WickTerm {
    ScalarExpr coeff;
    Word unmatched;
};
std::vector<WickTerm> wick_expand(const Word& w);

// Trace of a linear combination.  Words with a single opaque letter become
// Trace tokens "A c(dxn)" (or "A c(u)^c(v)" for antisymmetrized slots).
ScalarExpr trace(const CliffordElem& e);
ScalarExpr trace_word(const Word& w);

struct PerturbationSpec {
    Word word;             // factors c(X)/cb(X) over field vectors
    int sign = 1;          // overall sign, -1 after an odd adjoint
    bool zero = false;     // A = 0
    bool generic = false;  // opaque A, results stay in tr[A ...] tokens
    std::string text;

    static PerturbationSpec make_zero();
    static PerturbationSpec make_generic();
    std::vector<std::string> field_names() const;
};

// (-1)^t times the reversed word, t = number of c factors
PerturbationSpec adjoint(const PerturbationSpec& a);

// word := factor+ ; factor := ("c"|"cb") "(" NAME ")"; also "0", "A=0", "A"
PerturbationSpec parse_perturbation(const std::string& text);

// A as a Clifford element (opaque letter for generic A, 0 for A = 0)
CliffordElem perturbation_elem(const PerturbationSpec& a, bool star);

// Replace every tr[A ...] / tr[A* ...] token by its value for a concrete A.
ScalarExpr specialize_traces(const ScalarExpr& e, const PerturbationSpec& a);

// Contract a summation index j occurring exactly twice per monomial
// (sum_j g(V,e_j) g(W,e_j) = g(V,W), sum_j g(e_j,e_j) = dim).
ScalarExpr contract_index(const ScalarExpr& e, const std::string& j, int dim);

// wick_trace of a word linear in BASIS(j), summed over j = 1..n
ScalarExpr basis_sum(const CliffordElem& e, const std::string& j, int n);

enum class TraceId {
    TrAstarA,
    TrASq,
    SumAcAc,
    SumAstarcAstarc,
    TrACdxn,
    TrAstarCdxn,
    SumNablaAstarC,
    SumCNablaA,
    CurvTerm
};

TraceId trace_id_from_string(const std::string& s);
std::string trace_id_name(TraceId id);

// Named trace quantities of the perturbation, TR_ID kept symbolic.
ScalarExpr trace_identity(TraceId id, const PerturbationSpec& a, int n);

VectorSym parse_vector_key(const std::string& key);
Word parse_word_text(const std::string& text);

}  // namespace ncres
