#include "ncres/runner.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"ncres: residue terms of perturbed de Rham Hodge operators"};
    int dim = 0;
    std::string perturbation, theorem, manifest, format = "text";
    bool numeric = false, show_cases = false;

    auto* o_dim = app.add_option("--dim", dim, "dimension (4 or 6)")->check(CLI::IsMember({4, 6}));
    auto* o_pert = app.add_option("--perturbation", perturbation, "perturbation word, e.g. \"c(X) cb(Y)\"");
    auto* o_thm = app.add_option("--theorem", theorem, "T3.8, T3.18, T4.3 or T4.12")
                      ->check(CLI::IsMember(ncres::theorem_tags()));
    auto* o_man = app.add_option("--manifest", manifest, "expected-results manifest (YAML)");
    app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--numeric", numeric, "add numeric companions");
    app.add_flag("--show-cases", show_cases, "per-case breakdown");
    o_man->excludes(o_dim)->excludes(o_pert)->excludes(o_thm);

    try {
        app.parse(argc, argv);
        if (o_man->count() == 0 && o_thm->count() == 0)
            throw CLI::ValidationError("--theorem", "either --manifest or --theorem is required");
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (o_man->count()) {
            ncres::VerificationReport r = ncres::run_manifest(manifest, numeric);
            std::cout << (format == "json" ? ncres::report_json(r) + "\n" : ncres::report_text(r));
            return r.ok() ? 0 : 1;
        }
        const ncres::TheoremInfo& info = ncres::theorem_info(theorem);
        if (o_dim->count() && dim != info.n) {
            std::cerr << "--dim " << dim << " does not match " << theorem << " (n=" << info.n << ")\n";
            return 2;
        }
        ncres::PerturbationSpec a;
        try {
            a = ncres::parse_perturbation(o_pert->count() ? perturbation : "A");
        } catch (const std::exception& e) {
            std::cerr << "--perturbation: " << e.what() << "\n";
            return 2;
        }
        ncres::TheoremResult t = ncres::assemble_theorem(info.n, theorem, a);
        std::cout << (format == "json" ? ncres::theorem_json(t, show_cases, numeric) + "\n"
                                       : ncres::theorem_text(t, show_cases, numeric));
        return 0;
    } catch (const std::runtime_error& e) {
        // manifest load and parse errors
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
