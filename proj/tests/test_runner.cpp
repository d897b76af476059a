#include "ncres/expr_parse.hpp"
#include "ncres/runner.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>

using namespace ncres;

#ifndef NCRES_MANIFEST_DIR
#define NCRES_MANIFEST_DIR "manifests"
#endif

namespace {

ScalarExpr E(const std::string& t) { return parse_result_expr(t); }

const char* one_entry = R"yaml(
entries:
  - id: C3.9
    dim: 4
    theorem: T3.8
    perturbation: "c(X)"
    expected_interior: "512*pi^2*(-1/12*s + 2*|X|^2 + div(X))"
    expected_boundary: "-8*pi*Omega*g(dxn,X)*dx'"
)yaml";

}  // namespace

TEST_CASE("theorem table") {
    CHECK(theorem_tags() == std::vector<std::string>{"T3.8", "T3.18", "T4.3", "T4.12"});
    CHECK(theorem_info("T4.12").n == 6);
    CHECK(theorem_info("T3.18").variant == InteriorVariant::SQ);
    CHECK_THROWS(theorem_info("T9.9"));
    CHECK_THROWS(assemble_theorem(6, "T3.8", parse_perturbation("c(X)")));
}

TEST_CASE("assemble_theorem examples") {
    TheoremResult t = assemble_theorem(4, "T3.8", parse_perturbation("c(X)"));
    CHECK(t.interior.value == E("512*pi^2*(-1/12*s + 2*|X|^2 + div(X))"));
    CHECK(t.boundary.total == E("-8*pi*Omega*g(dxn,X)*dx'"));
    for (const char* a : {"c(X)", "cb(X) c(Y)", "c(X) c(Y) c(Z)"})
        CHECK(assemble_theorem(4, "T3.18", parse_perturbation(a)).boundary.total.is_zero());
    TheoremResult c = assemble_theorem(6, "T4.12", parse_perturbation("cb(X) cb(Y) cb(Z)"));
    CHECK(c.boundary.total == E("-10*pi*h'*Omega*dx'"));
    CHECK_FALSE(c.boundary.total.contains(TokKind::Pair));
}

TEST_CASE("manifest parsing") {
    CHECK(parse_manifest_text("").entries.empty());
    CHECK(parse_manifest_text("entries: []").entries.empty());
    Manifest m = parse_manifest_text(one_entry);
    REQUIRE(m.entries.size() == 1);
    CHECK(m.entries[0].id == "C3.9");
    CHECK(m.entries[0].dim == 4);
    CHECK_FALSE(m.entries[0].has_finding);

    auto message = [](const char* text) {
        try {
            parse_manifest_text(text);
        } catch (const std::runtime_error& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    std::string bad = message("entries:\n  - id: a\n    dim: 4\n    theorem: T3.8\n    perturbation: A\n"
                              "    expected_boundary: \"0\"\n  - id: b\n    dim: 4\n    theorem: T3.8\n"
                              "    perturbation: A\n    expected_boundary: \"2*(pi\"\n");
    CHECK(bad.find("entry 1") != std::string::npos);
    CHECK(message("entries:\n  - id: a\n    dim: 4\n    theorem: T3.8\n    perturbation: A\n").find("entry 0") !=
          std::string::npos);
    CHECK_FALSE(message("entries:\n  - id: a\n    dim: 5\n    theorem: T3.8\n    perturbation: A\n"
                        "    expected_boundary: \"0\"\n")
                    .empty());
    CHECK_THROWS(load_manifest("/nonexistent/manifest.yaml"));
}

TEST_CASE("empty manifest gives an empty successful report") {
    VerificationReport r = run_manifest(parse_manifest_text(""));
    CHECK(r.entries.empty());
    CHECK(r.ok());
    CHECK(report_text(r).find("summary: 0 PASS, 0 FINDING, 0 FAIL") != std::string::npos);
}

TEST_CASE("a single passing entry") {
    VerificationReport r = run_manifest(parse_manifest_text(one_entry), true);
    REQUIRE(r.entries.size() == 1);
    CHECK(r.entries[0].verdict == Verdict::Pass);
    CHECK(r.pass == 1);
    CHECK_FALSE(r.entries[0].numeric.empty());
}

TEST_CASE("shipped manifest: no silent failures") {
    VerificationReport r = run_manifest(std::string(NCRES_MANIFEST_DIR) + "/reference.yaml");
    CHECK(r.fail == 0);
    CHECK(r.entries.size() == 52);
    for (const auto& e : r.entries) {
        CAPTURE(e.id);
        if (e.verdict == Verdict::Finding) {
            CHECK_FALSE(e.trace.empty());
            CHECK_FALSE(e.cases.empty());
        }
    }
}

TEST_CASE("negative control fails exactly the corrupted entry") {
    VerificationReport r = run_manifest(std::string(NCRES_MANIFEST_DIR) + "/negative_control.yaml");
    CHECK(r.fail == 1);
    CHECK(r.finding == 0);
    for (const auto& e : r.entries) CHECK((e.verdict == Verdict::Fail) == (e.id == "T3.8/b"));
}

TEST_CASE("reports are deterministic and the formats agree") {
    Manifest m = load_manifest(std::string(NCRES_MANIFEST_DIR) + "/negative_control.yaml");
    VerificationReport a = run_manifest(m), b = run_manifest(m);
    CHECK(report_text(a) == report_text(b));
    CHECK(report_json(a) == report_json(b));
    auto j = nlohmann::json::parse(report_json(a));
    REQUIRE(j["entries"].size() == a.entries.size());
    for (size_t i = 0; i < a.entries.size(); ++i) {
        CHECK(j["entries"][i]["id"] == a.entries[i].id);
        if (a.entries[i].computed_boundary) {
            CHECK(j["entries"][i]["computed_boundary"] == *a.entries[i].computed_boundary);
            CHECK(report_text(a).find(*a.entries[i].computed_boundary) != std::string::npos);
        }
    }
    CHECK(j["summary"]["fail"] == 1);
}

TEST_CASE("theorem output") {
    TheoremResult t = assemble_theorem(4, "T3.8", parse_perturbation("c(X)"));
    std::string text = theorem_text(t, true, true);
    for (const char* label : {"a)I", "a)II", "a)III", "b)", "c)"}) CHECK(text.find(label) != std::string::npos);
    CHECK(text.find("-8*Omega*dx'*g(X,dxn)*pi") != std::string::npos);
    auto j = nlohmann::json::parse(theorem_json(t, true, false));
    CHECK(j["cases"].size() == 5);
    CHECK(j["boundary"] == t.boundary.total.str());
}

TEST_CASE("numeric companion") {
    double v = numeric_companion(E("3/8*pi"), 4);
    CHECK(v == doctest::Approx(3 * M_PI / 8));
    CHECK(numeric_companion(E("Omega"), 6) == doctest::Approx(8 * M_PI * M_PI / 3));
    double h = numeric_companion(E("h'"), 4);
    CHECK(h >= 0.5);
    CHECK(h < 1.5);
    CHECK(numeric_companion(E("h'"), 4) == h);
}
