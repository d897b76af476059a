#include "ncres/boundary.hpp"
#include "ncres/sphere.hpp"

#include <algorithm>
#include <future>
#include <mutex>
#include <stdexcept>

namespace ncres {

namespace {

int leading_order(OpTag t) {
    switch (t) {
        case OpTag::InvDA:
        case OpTag::InvDAstar: return -1;
        case OpTag::InvTriple:
        case OpTag::InvCube: return -3;
        default: break;
    }
    throw std::invalid_argument("boundary: " + op_tag_name(t) + " is not an inverse tag");
}

struct Reference {
    const char* label;
    int r, l, j, k, alpha;
};

// the printed case lists, used to check the enumeration
std::vector<Reference> reference_cases(int n) {
    if (n == 4)
        return {{"a)I", -1, -1, 0, 0, 1}, {"a)II", -1, -1, 1, 0, 0}, {"a)III", -1, -1, 0, 1, 0},
                {"b)", -2, -1, 0, 0, 0},  {"c)", -1, -2, 0, 0, 0}};
    return {{"a)I", -1, -3, 0, 0, 1}, {"a)II", -1, -3, 1, 0, 0}, {"a)III", -1, -3, 0, 1, 0},
            {"b)", -1, -4, 0, 0, 0},  {"c)", -2, -3, 0, 0, 0}};
}

bool supported_pair(int n, OpTag t1, OpTag t2) {
    if (t1 != OpTag::InvDA) return false;
    if (n == 4) return t2 == OpTag::InvDAstar || t2 == OpTag::InvDA;
    if (n == 6) return t2 == OpTag::InvTriple || t2 == OpTag::InvCube;
    return false;
}

Rational factorial(int k) {
    Rational f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

struct Q2Parts {
    XiClifford b01, a, b1pre, b2pre;  // q_{-2} = b01 + a + b1pre - b2pre
};

Q2Parts q2_parts(bool star, const PerturbationSpec& a, int n) {
    const BoundaryData& bd = boundary_data(n);
    XiBasics x(bd);
    XiClifford A = x.lift(perturbation_elem(a, star));
    XiClifford h = x.lift(CliffordElem(bd.d_norm2[n - 1]));
    Q2Parts p;
    p.b01 = x.cxi * x.lift(bd.b01) * x.cxi * XiClifford::inv_norm(2);
    p.a = x.cxi * A * x.cxi * XiClifford::inv_norm(2);
    p.b1pre = (x.cxi * x.lift(bd.b02) * x.cxi + x.cxi * x.cdxn * x.dcp) * XiClifford::inv_norm(2);
    p.b2pre = h * x.cxi * x.cdxn * x.cxi * XiClifford::inv_norm(3);
    return p;
}

XiClifford symbol_value(OpTag tag, int order, const PerturbationSpec& a, int n, SymbolSource src) {
    if (src == SymbolSource::Display && order != leading_order(tag)) return display_symbol(tag, order, a, n);
    return inverse_symbol(tag, order, a, n).value;
}

ScalarExpr finish(const XiScalar& tr, const Gauss& pref, int n) {
    ScalarExpr v = integrate_sphere(line_integral(tr), n - 1);
    v = v * ScalarExpr(Token::dxprime()) * pref;
    return fix_trid(v, n);
}

}  // namespace

ScalarExpr fix_trid(const ScalarExpr& e, int n) {
    return e.substitute(Token::trid(), ScalarExpr(Gauss(long{1} << n)));
}

XiScalar fix_trid(const XiScalar& f, int n) {
    return f.map<ScalarExpr>([&](const ScalarExpr& c) { return fix_trid(c, n); });
}

XiScalar sphere_average(const XiScalar& f, int n) {
    return f.map<ScalarExpr>([&](const ScalarExpr& c) {
        return integrate_sphere(c, n - 1).substitute(Token::omega(), ScalarExpr::one());
    });
}

std::vector<CaseSpec> enumerate_cases(int n, OpTag t1, OpTag t2) {
    if (!supported_pair(n, t1, t2))
        throw std::invalid_argument("enumerate_cases: unsupported pairing (" + op_tag_name(t1) + ", " +
                                    op_tag_name(t2) + ") at n=" + std::to_string(n));
    const int p1 = -leading_order(t1), p2 = -leading_order(t2);
    std::vector<CaseSpec> found;
    for (int r = -1; r >= -n; --r)
        for (int l = -p2; l >= -n; --l) {
            int s = r + l + n - 1;  // = k + j + |alpha|
            if (s < 0) continue;
            for (int alpha = 0; alpha <= s; ++alpha)
                for (int j = 0; j + alpha <= s; ++j) {
                    CaseSpec c;
                    c.r = r;
                    c.l = l;
                    c.alpha = alpha;
                    c.j = j;
                    c.k = s - alpha - j;
                    c.t1 = t1;
                    c.t2 = t2;
                    found.push_back(c);
                }
        }
    (void)p1;
    auto ref = reference_cases(n);
    if (found.size() != ref.size())
        throw std::logic_error("enumerate_cases: constraint yields " + std::to_string(found.size()) +
                               " tuples, expected " + std::to_string(ref.size()));
    std::vector<CaseSpec> out;
    for (size_t i = 0; i < ref.size(); ++i) {
        auto it = std::find_if(found.begin(), found.end(), [&](const CaseSpec& c) {
            return c.r == ref[i].r && c.l == ref[i].l && c.j == ref[i].j && c.k == ref[i].k && c.alpha == ref[i].alpha;
        });
        if (it == found.end()) throw std::logic_error(std::string("enumerate_cases: missing case ") + ref[i].label);
        CaseSpec c = *it;
        c.label = ref[i].label;
        c.index = static_cast<int>(i) + 1;
        out.push_back(c);
    }
    return out;
}

CaseResult evaluate_case(const CaseSpec& c, const PerturbationSpec& a, int n, SymbolSource src) {
    CaseResult res;
    res.spec = c;
    const int s = c.alpha + c.j + c.k;
    res.prefactor = (-Gauss::I()).pow(s + 1) * Gauss(Rational(1) / (factorial(c.alpha) * factorial(c.j + c.k + 1)));

    const int lead1 = leading_order(c.t1), lead2 = leading_order(c.t2);
    OperatorSymbol s1 = inverse_symbol(c.t1, lead1, a, n);
    OperatorSymbol s2 = inverse_symbol(c.t2, lead2, a, n);

    auto right_of = [&](const XiClifford& base) { return base.derivative(c.j + 1); };

    if (c.alpha == 1) {
        // sum over e_m, m < n: d_{xi_m} pi^+ sigma_r times d_{x_m} d_{xi_n} sigma_l
        if (c.r != lead1 || c.l != lead2) throw std::logic_error("evaluate_case: |alpha| = 1 needs leading orders");
        XiClifford right = s2.jet.dt.derivative(1);
        for (int m = 1; m < n; ++m) {
            XiClifford left = d_xi_tangential_leading(m, n);
            if (m == 1) {
                res.left = left;
                res.right = right;
            }
            res.trace += trace(left * right);
        }
    } else {
        XiClifford left, right;
        if (c.r == lead1) {
            left = c.j ? s1.jet.dn.pi_plus() : s1.jet.v.pi_plus();
        } else {
            left = symbol_value(c.t1, c.r, a, n, src).pi_plus();
        }
        left = left.derivative(c.k);
        XiClifford base = c.l == lead2 ? (c.k ? s2.jet.dn : s2.jet.v) : symbol_value(c.t2, c.l, a, n, src);
        right = right_of(base);
        res.left = left;
        res.right = right;
        res.trace = trace(left * right);
        if (s == 0) res.trace_ibp = trace(left.derivative() * base);

        // named pieces of the order -2 factor
        if (c.r == -2 || c.l == -2) {
            const bool star = c.r == -2 ? false : c.t2 == OpTag::InvDAstar;
            Q2Parts q = q2_parts(star, a, n);
            if (src == SymbolSource::Derived) {
                XiClifford q2 = inverse_symbol(c.r == -2 ? c.t1 : c.t2, -2, a, n).value;
                if (!vanishes(q.b01 + q.a + q.b1pre - q.b2pre - q2, n, a))
                    throw std::logic_error("evaluate_case: q_{-2} pieces do not sum to the symbol");
            }
            if (c.r == -2) {
                res.parts["pi+(b01)"] = q.b01.pi_plus();
                res.parts["pi+(A)"] = q.a.pi_plus();
                res.parts["B1"] = q.b1pre.pi_plus();
                res.parts["B2"] = q.b2pre.pi_plus();
                for (const auto& [name, part] : res.parts) res.part_traces[name] = trace(part * right);
            } else {
                res.parts["d(b01)"] = q.b01.derivative();
                res.parts["d(A)"] = q.a.derivative();
                res.parts["d(q1)"] = (q.b1pre - q.b2pre).derivative();
                for (const auto& [name, part] : res.parts) res.part_traces[name] = trace(left * part);
            }
        }
    }
    res.value = finish(res.trace, res.prefactor, n);
    return res;
}

namespace {

std::mutex report_mu;
std::map<std::tuple<int, int, int, int>, BoundaryReport> report_cache;

}  // namespace

BoundaryReport specialize(const BoundaryReport& generic, const PerturbationSpec& a) {
    BoundaryReport out = generic;
    out.total = ScalarExpr();
    for (auto& c : out.cases) {
        c.value = fix_trid(specialize_traces(c.value, a), out.n);
        out.total += c.value;
    }
    return out;
}

BoundaryReport boundary_total(int n, OpTag t1, OpTag t2, const PerturbationSpec& a, SymbolSource src) {
    auto key = std::make_tuple(n, static_cast<int>(t1), static_cast<int>(t2), static_cast<int>(src));
    BoundaryReport generic;
    bool have = false;
    {
        std::lock_guard<std::mutex> lock(report_mu);
        auto it = report_cache.find(key);
        if (it != report_cache.end()) {
            generic = it->second;
            have = true;
        }
    }
    if (!have) {
        const PerturbationSpec g = PerturbationSpec::make_generic();
        generic.n = n;
        generic.t1 = t1;
        generic.t2 = t2;
        generic.source = src;
        std::vector<CaseSpec> cases = enumerate_cases(n, t1, t2);
        std::vector<std::future<CaseResult>> jobs;
        for (const auto& c : cases)
            jobs.push_back(std::async(std::launch::async, [&, c] { return evaluate_case(c, g, n, src); }));
        for (auto& j : jobs) {
            generic.cases.push_back(j.get());
            generic.total += generic.cases.back().value;
        }
        std::lock_guard<std::mutex> lock(report_mu);
        report_cache.emplace(key, generic);
    }
    if (a.generic) return generic;
    return specialize(generic, a);
}

}  // namespace ncres
