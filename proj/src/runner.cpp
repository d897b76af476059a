#include "ncres/runner.hpp"
#include "ncres/expr_parse.hpp"
#include "ncres/sphere.hpp"

#include <yaml-cpp/yaml.h>

#include <cmath>
#include <fstream>
#include <future>
#include <json.hpp>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ncres {

namespace {

const std::vector<TheoremInfo>& theorem_table() {
    static const std::vector<TheoremInfo> t = {
        {"T3.8", 4, InteriorVariant::STAR, OpTag::InvDA, OpTag::InvDAstar},
        {"T3.18", 4, InteriorVariant::SQ, OpTag::InvDA, OpTag::InvDA},
        {"T4.3", 6, InteriorVariant::STAR4, OpTag::InvDA, OpTag::InvTriple},
        {"T4.12", 6, InteriorVariant::SQ4, OpTag::InvDA, OpTag::InvCube},
    };
    return t;
}

}  // namespace

const TheoremInfo& theorem_info(const std::string& tag) {
    for (const auto& t : theorem_table())
        if (t.tag == tag) return t;
    throw std::invalid_argument("unknown theorem tag " + tag);
}

std::vector<std::string> theorem_tags() {
    std::vector<std::string> out;
    for (const auto& t : theorem_table()) out.push_back(t.tag);
    return out;
}

TheoremResult assemble_theorem(int n, const std::string& tag, const PerturbationSpec& a) {
    const TheoremInfo& info = theorem_info(tag);
    if (info.n != n)
        throw std::invalid_argument(tag + " is stated for n=" + std::to_string(info.n) + ", not n=" + std::to_string(n));
    TheoremResult r;
    r.info = info;
    r.a = a;
    r.interior = interior_integrand(n, info.variant, a);
    r.boundary = boundary_total(n, info.t1, info.t2, a);
    return r;
}

ScalarExpr case_value(const BoundaryReport& r, const std::string& label) {
    // an exact label wins; otherwise "a)" sums a)I, a)II, a)III
    for (const auto& c : r.cases)
        if (c.spec.label == label) return c.value;
    ScalarExpr v;
    bool any = false;
    for (const auto& c : r.cases)
        if (c.spec.label.rfind(label, 0) == 0) {
            v += c.value;
            any = true;
        }
    if (!any) throw std::invalid_argument("no case labelled " + label);
    return v;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Finding: return "FINDING";
        case Verdict::Fail: return "FAIL";
    }
    return "?";
}

// ---------- manifest ----------

namespace {

std::string scalar_of(const YAML::Node& n, const char* key, size_t idx, bool required = true) {
    if (!n[key]) {
        if (required) throw std::runtime_error("manifest entry " + std::to_string(idx) + ": missing key '" + key + "'");
        return {};
    }
    if (!n[key].IsScalar())
        throw std::runtime_error("manifest entry " + std::to_string(idx) + ": key '" + key + "' must be a scalar");
    return n[key].as<std::string>();
}

Manifest from_node(const YAML::Node& root) {
    Manifest m;
    if (!root || root.IsNull()) return m;
    YAML::Node list = root.IsMap() ? root["entries"] : root;
    if (!list || list.IsNull()) return m;
    if (!list.IsSequence()) throw std::runtime_error("manifest: 'entries' must be a sequence");
    for (size_t i = 0; i < list.size(); ++i) {
        const YAML::Node& n = list[i];
        if (!n.IsMap()) throw std::runtime_error("manifest entry " + std::to_string(i) + ": not a record");
        ManifestEntry e;
        e.index = i;
        e.id = scalar_of(n, "id", i);
        std::string dim = scalar_of(n, "dim", i);
        try {
            e.dim = std::stoi(dim);
        } catch (const std::exception&) {
            throw std::runtime_error("manifest entry " + std::to_string(i) + ": bad dim '" + dim + "'");
        }
        e.theorem = scalar_of(n, "theorem", i);
        e.perturbation = scalar_of(n, "perturbation", i);
        e.case_label = scalar_of(n, "case", i, false);
        if (n["expected_interior"]) e.expected_interior = scalar_of(n, "expected_interior", i);
        if (n["expected_boundary"]) e.expected_boundary = scalar_of(n, "expected_boundary", i);
        if (!e.expected_interior && !e.expected_boundary)
            throw std::runtime_error("manifest entry " + std::to_string(i) + ": no expected expression");
        try {
            const TheoremInfo& t = theorem_info(e.theorem);
            if (t.n != e.dim) throw std::invalid_argument(e.theorem + " needs dim " + std::to_string(t.n));
            parse_perturbation(e.perturbation);
            if (e.expected_interior) parse_result_expr(*e.expected_interior);
            if (e.expected_boundary) parse_result_expr(*e.expected_boundary);
        } catch (const std::exception& ex) {
            throw std::runtime_error("manifest entry " + std::to_string(i) + " (" + e.id + "): " + ex.what());
        }
        if (const YAML::Node f = n["finding"]) {
            e.has_finding = true;
            e.note = scalar_of(f, "note", i, false);
            if (const YAML::Node r = f["interior_route"]) {
                if (!r.IsMap()) throw std::runtime_error("manifest entry " + std::to_string(i) + ": interior_route must be a map");
                for (auto it = r.begin(); it != r.end(); ++it)
                    e.interior_route.emplace_back(it->first.as<std::string>(), it->second.as<std::string>());
            }
            e.boundary_route = scalar_of(f, "boundary_route", i, false);
            if (const YAML::Node s = f["steps"]) {
                for (const auto& st : s) {
                    PrintedStep p;
                    p.form = st["form"] ? st["form"].as<std::string>() : "direct";
                    p.where = st["where"] ? st["where"].as<std::string>() : "";
                    p.integrand = st["integrand"].as<std::string>();
                    if (p.form != "direct" && p.form != "ibp")
                        throw std::runtime_error("manifest entry " + std::to_string(i) + ": step form must be direct or ibp");
                    try {
                        parse_xi_expr(p.integrand);
                    } catch (const std::exception& ex) {
                        throw std::runtime_error("manifest entry " + std::to_string(i) + " step: " + ex.what());
                    }
                    e.steps.push_back(p);
                }
            }
        }
        m.entries.push_back(e);
    }
    return m;
}

}  // namespace

Manifest parse_manifest_text(const std::string& text) {
    try {
        return from_node(YAML::Load(text));
    } catch (const YAML::Exception& ex) {
        throw std::runtime_error(std::string("manifest: ") + ex.what());
    }
}

Manifest load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open manifest " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_manifest_text(ss.str());
}

// ---------- numeric companions ----------

double numeric_companion(const ScalarExpr& e, int n) {
    std::map<std::string, double> b;
    for (const auto& [mono, c] : e.terms()) {
        (void)c;
        for (const auto& [t, ex] : mono) {
            (void)ex;
            std::string k = t.str();
            if (b.count(k)) continue;
            if (t.kind == TokKind::Pi) b[k] = M_PI;
            else if (t.kind == TokKind::Omega) b[k] = omega_value(n);
            else {
                // FNV-1a, mapped to [0.5, 1.5)
                uint64_t h = 1469598103934665603ull;
                for (char ch : k) {
                    h ^= static_cast<unsigned char>(ch);
                    h *= 1099511628211ull;
                }
                b[k] = 0.5 + static_cast<double>(h % 1000003) / 1000003.0;
            }
        }
    }
    return eval_numeric(e, b);
}

// ---------- verification ----------

namespace {

using MonoSplit = std::map<Monomial, XiScalar>;

// coefficient functions of each token monomial
MonoSplit split_xi(const XiScalar& f) {
    std::map<Monomial, std::vector<ScalarExpr>> acc;
    for (size_t k = 0; k < f.num.size(); ++k)
        for (const auto& [m, c] : f.num[k].terms()) {
            auto& v = acc[m];
            if (v.size() <= k) v.resize(k + 1);
            ScalarExpr t;
            t.add_term({}, c);
            v[k] += t;
        }
    MonoSplit out;
    for (auto& [m, v] : acc) {
        XiScalar x(v, f.a, f.b);
        if (!x.is_zero()) out[m] = x;
    }
    return out;
}

// coefficient of pi*Omega*dx' per remaining monomial
std::map<Monomial, Gauss> split_value(const ScalarExpr& e) {
    std::map<Monomial, Gauss> out;
    for (const auto& [m, c] : e.terms()) {
        Monomial rest;
        int seen = 0;
        for (const auto& [t, ex] : m) {
            if ((t.kind == TokKind::Pi || t.kind == TokKind::Omega || t.kind == TokKind::DxPrime) && ex == 1) ++seen;
            else rest.emplace_back(t, ex);
        }
        if (seen != 3) rest = m;  // keep malformed monomials visible
        out[rest] += c;
    }
    return out;
}

std::string mono_str(const Monomial& m) {
    if (m.empty()) return "1";
    ScalarExpr e;
    e.add_term(m, Gauss(1));
    return e.str();
}

struct Context {
    const Manifest* m;
    std::map<std::string, BoundaryReport> generic;  // by theorem tag
    std::map<size_t, EntryResult> done;
};

const ManifestEntry* theorem_entry(const Context& ctx, const std::string& tag) {
    for (const auto& e : ctx.m->entries)
        if (e.theorem == tag && e.case_label.empty() && e.perturbation == "A" && e.expected_boundary) return &e;
    return nullptr;
}

void add_cases(EntryResult& r, const BoundaryReport& b) {
    for (const auto& c : b.cases) r.cases.emplace_back(c.spec.label, c.value.str());
}

// interior mismatch: the printed integrand as a combination of trace identities
bool check_interior_route(const ManifestEntry& e, const PerturbationSpec& a, const ScalarExpr& expected,
                          const ScalarExpr& computed, std::vector<std::string>& tr) {
    if (e.interior_route.empty()) {
        tr.push_back("interior: no printed route declared; mismatch unexplained");
        return false;
    }
    const int n = e.dim;
    ScalarExpr integrand = ScalarExpr(Gauss::frac(-1, 12)) * ScalarExpr(Token::scurv()) * trid_tok();
    std::ostringstream desc;
    for (const auto& [name, coef] : e.interior_route) {
        Rational q;
        try {
            q = Rational(coef);
            q.canonicalize();
        } catch (const std::exception&) {
            tr.push_back("interior: bad route coefficient " + coef);
            return false;
        }
        ScalarExpr id = trace_identity(trace_id_from_string(name), a, n);
        tr.push_back("interior: " + name + " = " + fix_trid(id, n).str() + " (route coefficient " + coef + ")");
        integrand += Gauss(q) * id;
    }
    ScalarExpr route = fix_trid(interior_prefactor(n) * integrand, n);
    tr.push_back("interior: printed route value = " + route.str());
    tr.push_back("interior: engine value = " + computed.str());
    tr.push_back("interior: printed - engine = " + (expected - computed).str());
    if (!(route == expected)) {
        tr.push_back("interior: the declared route does not reproduce the printed value");
        return false;
    }
    tr.push_back("interior: the printed value is reproduced by the declared combination, which differs from the theorem's");
    return true;
}

// case mismatch: compare each mismatched token against the printed integrands
bool check_steps(const ManifestEntry& e, const BoundaryReport& generic, const ScalarExpr& expected,
                 const ScalarExpr& computed, std::vector<std::string>& tr) {
    const int n = e.dim;
    auto exp_split = split_value(expected);
    auto cmp_split = split_value(computed);
    std::set<Monomial> bad;
    for (const auto& [m, c] : exp_split)
        if (!(cmp_split.count(m) && cmp_split[m] == c)) bad.insert(m);
    for (const auto& [m, c] : cmp_split)
        if (!(exp_split.count(m) && exp_split[m] == c)) bad.insert(m);
    if (e.steps.empty()) {
        tr.push_back("boundary: no printed integrand declared; mismatch unexplained");
        return false;
    }
    // the case must be a single template case for integrand comparison
    const CaseResult* cr = nullptr;
    for (const auto& c : generic.cases)
        if (c.spec.label == e.case_label) cr = &c;
    bool ok = true;
    for (const Monomial& m : bad) {
        const Gauss want = exp_split.count(m) ? exp_split[m] : Gauss(0);
        const Gauss got = cmp_split.count(m) ? cmp_split[m] : Gauss(0);
        tr.push_back("boundary: coefficient of " + mono_str(m) + ": printed " + want.str() + ", engine " + got.str());
        bool localized = false;
        for (const auto& st : e.steps) {
            if (!cr) {
                tr.push_back("  step " + st.where + ": case " + e.case_label + " is not a single template case");
                break;
            }
            XiScalar printed = sphere_average(fix_trid(parse_xi_expr(st.integrand), n), n);
            const bool ibp = st.form == "ibp";
            if (ibp && cr->trace_ibp.is_zero() && !cr->trace.is_zero()) {
                tr.push_back("  step " + st.where + ": no integrated-by-parts form for this case");
                continue;
            }
            XiScalar engine = sphere_average(fix_trid(ibp ? cr->trace_ibp : cr->trace, n), n);
            auto ps = split_xi(printed);
            auto es = split_xi(engine);
            if (!ps.count(m)) continue;
            const Gauss pref = ibp ? -cr->prefactor : cr->prefactor;
            ScalarExpr pint = line_integral(ps[m]) * pref;
            Gauss pval = pint.coefficient_of(Token::pi()).constant_term();
            XiScalar e_m = es.count(m) ? es[m] : XiScalar();
            const bool same = xi_equal(ps[m], e_m);
            tr.push_back("  step " + st.where + " (" + st.form + "): printed integrand " + ps[m].reduced().str());
            tr.push_back("  step " + st.where + ": engine integrand  " + e_m.reduced().str());
            if (same) {
                tr.push_back("  step " + st.where + ": printed integrand agrees with the engine trace");
                continue;
            }
            tr.push_back("  step " + st.where + ": printed integrand differs from the engine trace");
            if (pval == want) {
                tr.push_back("  step " + st.where + ": printed integrand integrates to " + pval.str() +
                             ", the printed value; the discrepancy enters at the trace");
            } else {
                tr.push_back("  step " + st.where + ": printed integrand integrates to " + pval.str() +
                             ", not the printed " + want.str() + "; the printed integration is also inconsistent");
            }
            localized = true;
        }
        if (!localized) {
            tr.push_back("  coefficient of " + mono_str(m) + ": not localized to a printed step");
            ok = false;
        }
    }
    return ok;
}

EntryResult evaluate_entry(const ManifestEntry& e, Context& ctx, bool numeric) {
    EntryResult r;
    r.id = e.id;
    r.theorem = e.theorem;
    r.case_label = e.case_label;
    r.perturbation = e.perturbation;
    r.dim = e.dim;
    const int n = e.dim;
    try {
        const PerturbationSpec a = parse_perturbation(e.perturbation);
        const BoundaryReport& gen = ctx.generic.at(e.theorem);
        BoundaryReport b = a.generic ? gen : specialize(gen, a);
        add_cases(r, b);
        bool int_ok = true, bnd_ok = true;
        ScalarExpr ci, cb, ei, eb;
        if (e.expected_interior) {
            const TheoremInfo& t = theorem_info(e.theorem);
            ci = interior_integrand(n, t.variant, a).value;
            ei = fix_trid(parse_result_expr(*e.expected_interior), n);
            r.computed_interior = ci.str();
            r.expected_interior = ei.str();
            int_ok = ci == ei;
            if (numeric) r.numeric["interior"] = numeric_companion(ci, n);
        }
        if (e.expected_boundary) {
            cb = e.case_label.empty() ? b.total : case_value(b, e.case_label);
            eb = fix_trid(parse_result_expr(*e.expected_boundary), n);
            r.computed_boundary = cb.str();
            r.expected_boundary = eb.str();
            bnd_ok = cb == eb;
            if (numeric) r.numeric["boundary"] = numeric_companion(cb, n);
        }
        if (int_ok && bnd_ok) {
            r.verdict = Verdict::Pass;
            return r;
        }
        if (!int_ok) r.trace.push_back("interior: printed - engine = " + (ei - ci).str());
        if (!bnd_ok) r.trace.push_back("boundary: printed - engine = " + (eb - cb).str());
        if (!e.has_finding) {
            r.trace.push_back("no printed derivation route declared for this entry");
            r.verdict = Verdict::Fail;
            return r;
        }
        if (!e.note.empty()) r.trace.push_back("note: " + e.note);
        bool explained = true;
        if (!int_ok) explained = check_interior_route(e, a, ei, ci, r.trace) && explained;
        if (!bnd_ok) {
            if (!e.case_label.empty()) {
                explained = check_steps(e, gen, eb, cb, r.trace) && explained;
            } else if (e.boundary_route == "cases") {
                // the printed statement must be the sum of the printed cases
                ScalarExpr sum;
                std::set<std::string> covered;
                bool cases_ok = true;
                for (const auto& other : ctx.m->entries) {
                    if (other.theorem != e.theorem || other.case_label.empty() || other.perturbation != e.perturbation ||
                        !other.expected_boundary)
                        continue;
                    sum += fix_trid(parse_result_expr(*other.expected_boundary), n);
                    covered.insert(other.case_label);
                    const EntryResult& o = ctx.done.at(other.index);
                    r.trace.push_back("boundary: printed case " + other.case_label + " = " + *o.expected_boundary +
                                      " [" + verdict_name(o.verdict) + ", engine " + *o.computed_boundary + "]");
                    if (o.verdict == Verdict::Fail) cases_ok = false;
                }
                std::set<std::string> labels;
                for (const auto& c : gen.cases) labels.insert(c.spec.label.substr(0, 2));
                for (const auto& l : labels)
                    if (!covered.count(l)) {
                        bool any = false;
                        for (const auto& c : covered) any = any || c.rfind(l, 0) == 0;
                        if (!any) {
                            r.trace.push_back("boundary: no printed value for case group " + l);
                            cases_ok = false;
                        }
                    }
                if (!(sum == eb)) {
                    r.trace.push_back("boundary: printed cases sum to " + sum.str() + ", not the printed statement");
                    cases_ok = false;
                } else {
                    r.trace.push_back("boundary: the printed statement is the sum of the printed cases");
                }
                explained = cases_ok && explained;
            } else if (!e.boundary_route.empty()) {
                const ManifestEntry* te = theorem_entry(ctx, e.boundary_route);
                if (!te) {
                    r.trace.push_back("boundary: no printed statement of " + e.boundary_route + " in the manifest");
                    explained = false;
                } else {
                    ScalarExpr printed = fix_trid(specialize_traces(parse_result_expr(*te->expected_boundary), a), n);
                    const EntryResult& o = ctx.done.at(te->index);
                    r.trace.push_back("boundary: printed " + e.boundary_route + " specialized to A = " +
                                      e.perturbation + ": " + printed.str() + " [" + verdict_name(o.verdict) + "]");
                    if (e.boundary_route != e.theorem)
                        r.trace.push_back("boundary: the route is the statement of " + e.boundary_route +
                                          ", not of the entry's own " + e.theorem);
                    if (!(printed == eb)) {
                        r.trace.push_back("boundary: the specialization does not reproduce the printed value");
                        explained = false;
                    }
                    if (o.verdict == Verdict::Fail) explained = false;
                }
            } else {
                r.trace.push_back("boundary: no route declared");
                explained = false;
            }
        }
        r.verdict = explained ? Verdict::Finding : Verdict::Fail;
    } catch (const std::exception& ex) {
        r.verdict = Verdict::Fail;
        r.trace.push_back(std::string("error: ") + ex.what());
    }
    return r;
}

int level(const ManifestEntry& e) {
    if (!e.case_label.empty()) return 0;
    if (e.perturbation == "A") return 1;
    return 2;
}

}  // namespace

VerificationReport run_manifest(const Manifest& m, bool numeric) {
    Context ctx;
    ctx.m = &m;
    std::set<std::string> tags;
    for (const auto& e : m.entries) tags.insert(e.theorem);
    {
        std::vector<std::pair<std::string, std::future<BoundaryReport>>> jobs;
        for (const auto& t : tags) {
            const TheoremInfo& info = theorem_info(t);
            jobs.emplace_back(t, std::async(std::launch::async, [info] {
                                  return boundary_total(info.n, info.t1, info.t2, PerturbationSpec::make_generic());
                              }));
        }
        for (auto& [t, f] : jobs) ctx.generic[t] = f.get();
    }
    // cases, then theorem statements, then corollaries: later levels read earlier verdicts
    for (int lv = 0; lv < 3; ++lv) {
        std::vector<std::pair<size_t, std::future<EntryResult>>> jobs;
        for (const auto& e : m.entries) {
            if (level(e) != lv) continue;
            const ManifestEntry* ep = &e;
            jobs.emplace_back(e.index,
                              std::async(std::launch::async, [ep, &ctx, numeric] { return evaluate_entry(*ep, ctx, numeric); }));
        }
        std::vector<std::pair<size_t, EntryResult>> out;
        for (auto& [i, f] : jobs) out.emplace_back(i, f.get());
        for (auto& [i, r] : out) ctx.done[i] = std::move(r);
    }
    VerificationReport rep;
    for (const auto& e : m.entries) {
        const EntryResult& r = ctx.done.at(e.index);
        rep.entries.push_back(r);
        if (r.verdict == Verdict::Pass) ++rep.pass;
        else if (r.verdict == Verdict::Finding) ++rep.finding;
        else ++rep.fail;
    }
    return rep;
}

VerificationReport run_manifest(const std::string& path, bool numeric) { return run_manifest(load_manifest(path), numeric); }

// ---------- output ----------

namespace {

std::string num_str(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

}  // namespace

std::string report_text(const VerificationReport& r) {
    std::ostringstream os;
    for (const auto& e : r.entries) {
        os << "[" << verdict_name(e.verdict) << "] " << e.id << "  (" << e.theorem << ", n=" << e.dim
           << ", A=" << e.perturbation;
        if (!e.case_label.empty()) os << ", case " << e.case_label;
        os << ")\n";
        if (e.verdict == Verdict::Pass) {
            if (e.computed_interior) os << "  interior: " << *e.computed_interior << "\n";
            if (e.computed_boundary) os << "  boundary: " << *e.computed_boundary << "\n";
        } else {
            if (e.computed_interior) {
                os << "  interior computed: " << *e.computed_interior << "\n";
                os << "  interior printed:  " << *e.expected_interior << "\n";
            }
            if (e.computed_boundary) {
                os << "  boundary computed: " << *e.computed_boundary << "\n";
                os << "  boundary printed:  " << *e.expected_boundary << "\n";
            }
            os << "  cases:\n";
            for (const auto& [l, v] : e.cases) os << "    " << l << " " << v << "\n";
            os << "  trace:\n";
            for (const auto& t : e.trace) os << "    " << t << "\n";
        }
        for (const auto& [k, v] : e.numeric) os << "  numeric " << k << ": " << num_str(v) << "\n";
    }
    os << "summary: " << r.pass << " PASS, " << r.finding << " FINDING, " << r.fail << " FAIL\n";
    return os.str();
}

std::string report_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["summary"] = {{"pass", r.pass}, {"finding", r.finding}, {"fail", r.fail}, {"ok", r.ok()}};
    j["entries"] = nlohmann::ordered_json::array();
    for (const auto& e : r.entries) {
        nlohmann::ordered_json x;
        x["id"] = e.id;
        x["theorem"] = e.theorem;
        x["dim"] = e.dim;
        x["perturbation"] = e.perturbation;
        if (!e.case_label.empty()) x["case"] = e.case_label;
        x["verdict"] = verdict_name(e.verdict);
        if (e.computed_interior) {
            x["computed_interior"] = *e.computed_interior;
            x["expected_interior"] = *e.expected_interior;
        }
        if (e.computed_boundary) {
            x["computed_boundary"] = *e.computed_boundary;
            x["expected_boundary"] = *e.expected_boundary;
        }
        nlohmann::ordered_json cs = nlohmann::ordered_json::array();
        for (const auto& [l, v] : e.cases) cs.push_back({{"case", l}, {"value", v}});
        x["cases"] = cs;
        x["trace"] = e.trace;
        if (!e.numeric.empty()) x["numeric"] = e.numeric;
        j["entries"].push_back(x);
    }
    return j.dump(2) + "\n";
}

std::string theorem_text(const TheoremResult& t, bool show_cases, bool numeric) {
    std::ostringstream os;
    const int n = t.info.n;
    os << t.info.tag << "  n=" << n << "  A=" << (t.a.text.empty() ? "A" : t.a.text) << "\n";
    os << "pairing: (" << op_tag_name(t.info.t1) << ", " << op_tag_name(t.info.t2) << ")\n";
    os << "interior prefactor: " << t.interior.prefactor.str() << "\n";
    os << "interior: " << t.interior.value.str() << "\n";
    if (show_cases)
        for (const auto& c : t.boundary.cases)
            os << "case " << c.spec.label << " (r=" << c.spec.r << ", l=" << c.spec.l << ", j=" << c.spec.j
               << ", k=" << c.spec.k << ", |alpha|=" << c.spec.alpha << "): " << c.value.str() << "\n";
    os << "boundary: " << t.boundary.total.str() << "\n";
    if (numeric) {
        os << "numeric interior: " << num_str(numeric_companion(t.interior.value, n)) << "\n";
        os << "numeric boundary: " << num_str(numeric_companion(t.boundary.total, n)) << "\n";
    }
    return os.str();
}

std::string theorem_json(const TheoremResult& t, bool show_cases, bool numeric) {
    nlohmann::ordered_json j;
    const int n = t.info.n;
    j["theorem"] = t.info.tag;
    j["dim"] = n;
    j["perturbation"] = t.a.text.empty() ? "A" : t.a.text;
    j["pairing"] = {op_tag_name(t.info.t1), op_tag_name(t.info.t2)};
    j["interior_prefactor"] = t.interior.prefactor.str();
    j["interior"] = t.interior.value.str();
    if (show_cases) {
        nlohmann::ordered_json cs = nlohmann::ordered_json::array();
        for (const auto& c : t.boundary.cases)
            cs.push_back({{"case", c.spec.label},
                          {"r", c.spec.r},
                          {"l", c.spec.l},
                          {"j", c.spec.j},
                          {"k", c.spec.k},
                          {"alpha", c.spec.alpha},
                          {"value", c.value.str()}});
        j["cases"] = cs;
    }
    j["boundary"] = t.boundary.total.str();
    if (numeric) {
        j["numeric"] = {{"interior", numeric_companion(t.interior.value, n)},
                        {"boundary", numeric_companion(t.boundary.total, n)}};
    }
    return j.dump(2) + "\n";
}

}  // namespace ncres
