#pragma once

#include "ncres/boundary.hpp"
#include "ncres/interior.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ncres {

struct TheoremInfo {
    std::string tag;
    int n{4};
    InteriorVariant variant{InteriorVariant::STAR};
    OpTag t1{OpTag::InvDA}, t2{OpTag::InvDA};
};

// T3.8, T3.18, T4.3, T4.12
const TheoremInfo& theorem_info(const std::string& tag);
std::vector<std::string> theorem_tags();

struct TheoremResult {
    TheoremInfo info;
    PerturbationSpec a;
    InteriorReport interior;
    BoundaryReport boundary;  // specialized to a
};

TheoremResult assemble_theorem(int n, const std::string& tag, const PerturbationSpec& a);

// sum of the cases whose label starts with `label` ("a)" sums a)I..a)III)
ScalarExpr case_value(const BoundaryReport& r, const std::string& label);

// A printed xi_n integrand of one case, at |xi'| = 1.  direct: the integrand
// of the case template; ibp: trace[d_xi_n(left) * right], integrating to minus it.
struct PrintedStep {
    std::string form{"direct"};
    std::string integrand;
    std::string where;
};

struct ManifestEntry {
    size_t index{0};
    std::string id;
    int dim{4};
    std::string perturbation;
    std::string theorem;
    std::string case_label;  // empty for theorem and corollary entries
    std::optional<std::string> expected_interior, expected_boundary;

    bool has_finding{false};
    std::string note;
    std::vector<std::pair<std::string, std::string>> interior_route;  // trace identity, coefficient
    std::string boundary_route;                                     // "cases" or a theorem tag
    std::vector<PrintedStep> steps;
};

struct Manifest {
    std::vector<ManifestEntry> entries;
};

// throws std::runtime_error naming the entry index on malformed records
Manifest load_manifest(const std::string& path);
Manifest parse_manifest_text(const std::string& yaml_text);

enum class Verdict { Pass, Finding, Fail };
std::string verdict_name(Verdict v);

struct EntryResult {
    std::string id;
    std::string theorem, case_label, perturbation;
    int dim{4};
    Verdict verdict{Verdict::Fail};
    std::optional<std::string> computed_interior, expected_interior;
    std::optional<std::string> computed_boundary, expected_boundary;
    std::vector<std::pair<std::string, std::string>> cases;  // engine case values
    std::vector<std::string> trace;                          // derivation trace of a finding or failure
    std::map<std::string, double> numeric;
};

struct VerificationReport {
    std::vector<EntryResult> entries;
    int pass{0}, finding{0}, fail{0};
    bool ok() const { return fail == 0; }
};

VerificationReport run_manifest(const Manifest& m, bool numeric = false);
VerificationReport run_manifest(const std::string& path, bool numeric = false);

std::string report_text(const VerificationReport& r);
std::string report_json(const VerificationReport& r);

std::string theorem_text(const TheoremResult& t, bool show_cases, bool numeric);
std::string theorem_json(const TheoremResult& t, bool show_cases, bool numeric);

// pi, Omega bound to their values, every other token to a fixed pseudo-random number
double numeric_companion(const ScalarExpr& e, int n);

}  // namespace ncres
