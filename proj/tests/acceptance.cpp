// Acceptance gate: one PASS/FAIL line per criterion. Tolerances and time limits are fixed here.
// Usage: acceptance [--criterion N]. Exit status is nonzero iff a selected criterion fails.

#include "odl/bott.hpp"
#include "odl/bundles.hpp"
#include "odl/chow.hpp"
#include "odl/odl_catalog.hpp"
#include "odl/partitions.hpp"
#include "odl/resolutions.hpp"
#include "odl/search.hpp"

#include "oracles.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <iomanip>
#include <map>
#include <regex>
#include <set>
#include <sstream>

using namespace odl;
using namespace odl::oracle;

namespace {

/// Collects failures of one criterion; the first few are printed.
struct Check {
    std::vector<std::string> failures;
    int count = 0;

    void expect(bool ok, const std::string& what) {
        ++count;
        if (!ok) failures.push_back(what);
    }
    template <class A, class B>
    void equal(const A& got, const B& want, const std::string& what) {
        std::ostringstream os;
        os << what << ": got " << got << ", want " << want;
        expect(got == want, os.str());
    }
};

std::ostream& operator<<(std::ostream& os, const LineClass& c) { return os << c.str(); }

/// Polynomial text such as "2*e1^4*l - e5" or "2e1^4l - e5" as monomial -> coefficient.
std::map<std::string, long> poly_terms(std::string text) {
    std::erase_if(text, [](char c) { return c == ' ' || c == '*'; });
    std::map<std::string, long> out;
    static const std::regex term(R"(([+-]?)(\d*)((?:[a-z]\d*(?:\^\d+)?)*))");
    static const std::regex var(R"(([a-z]\d*)(?:\^(\d+))?)");
    for (auto it = std::sregex_iterator(text.begin(), text.end(), term); it != std::sregex_iterator(); ++it) {
        const auto& m = *it;
        if (m.length(0) == 0) continue;
        const long coef = (m[1] == "-" ? -1 : 1) * (m[2].length() ? std::stol(m[2]) : 1);
        std::map<std::string, int> mono;
        const std::string vars = m[3];
        for (auto v = std::sregex_iterator(vars.begin(), vars.end(), var); v != std::sregex_iterator(); ++v)
            mono[(*v)[1]] += (*v)[2].length() ? std::stoi((*v)[2]) : 1;
        std::string key;
        for (auto& [name, e] : mono) key += name + "^" + std::to_string(e) + " ";
        if ((out[key] += coef) == 0) out.erase(key);
    }
    return out;
}

struct Criterion {
    int id;
    std::string title;
    double limit_s;  // wall-clock limit; 0 means none
    std::function<void(Check&)> body;
};

void c1_last_twists(Check& ck) {
    struct Row {
        std::string id;
        long long n;
        std::string cone_type;  // empty: value stated without a cone computation
        int node;
    };
    const std::vector<Row> rows{{"e6a1.Y5", 8, "D5", 5},   {"e7a1.Y16", 22, "D6", 6}, {"e7a7.Y10", 15, "E6", 1},
                                {"f4a1.Y7", 10, "C3", 3},  {"e8a1.Y42", 52, "D7", 7}, {"e8a1.Y29", 44, "", 0},
                                {"e8a1.Y14", 32, "", 0},   {"e8a1.Y10", 28, "", 0},   {"e8a6.Y9", 24, "", 0},
                                {"e8a7.Y7", 18, "", 0},    {"e8a7.Y25", 36, "", 0},   {"e8a8.Y28", 38, "E7", 7}};
    for (auto& r : rows) {
        const auto c = case_info(r.id);
        ck.expect(c.n.has_value(), r.id + ": N missing");
        if (c.n) ck.equal(*c.n, r.n, r.id + " N");
        if (!r.cone_type.empty()) ck.equal(n_from_index(parse_type(r.cone_type), r.node), r.n, r.id + " N from the cone index");
    }
}

void c2_exponent_solver(Check& ck) {
    const auto y16 = case_info("e7a1.Y16");
    ck.equal(solve_canonical_exponents(22, y16.rep(), y16.constraints).exponents, LineClass{{"L", 33}, {"E", 11}}, "e7a1.Y16");
    const auto y13 = case_info("e7a6.Y13");
    ck.equal(solve_canonical_exponents(20, y13.rep(), y13.constraints).exponents, LineClass{{"E", 10}, {"F", 10}, {"L", 15}}, "e7a6.Y13");
    for (auto& c : Catalog::builtin().records()) {
        if (!c.n) {
            ck.expect(false, c.id + ": N missing");
            continue;
        }
        ck.equal(solve_canonical_exponents(*c.n, c.rep(), c.constraints).exponents, apply_constraints(c.exponents, c.constraints), c.id);
    }
}

void c3_resolutions(Check& ck) {
    for (const std::string id : {"e6a1.Y5", "e6a2.Y5", "e7a1.Y7", "e8a1.Y5", "e8a2.Y4", "e8a7.Y4", "f4a1.Y7"}) {
        const auto c = case_info(id);
        if (!c.resolution) {
            ck.expect(false, id + ": no resolution");
            continue;
        }
        ck.expect(c.resolution->provenance != Provenance::Conjectural, id + ": unexpectedly conjectural");
        const auto h = hilbert_numerator(*c.resolution);  // throws unless (1-t)^c divides K(t)
        ck.equal(h.n_check, c.resolution->last_twist(), id + " N from the numerator");
        ck.expect(check_gorenstein_shape(*c.resolution).gorenstein, id + ": not Gorenstein");
    }
    ck.expect(case_info("e8a8.Y11").resolution->provenance == Provenance::Conjectural, "e8a8.Y11 must be gated as conjectural");
    for (int e = 1; e <= 6; ++e)
        for (int f = 1; f <= e; ++f)
            ck.equal(check_gorenstein_shape(eagon_northcott(e, f)).gorenstein, e == f,
                     "EN(" + std::to_string(e) + "," + std::to_string(f) + ") Gorenstein" +
                         (f == 1 ? " (Koszul complex of the origin, a complete intersection)" : ""));
}

void c4_chern_classes(Check& ck) {
    {
        const auto c = case_info("e6a1.Y5");
        const auto fs = formal_space({{"E", 5}}, {"L"}, c.codim);
        const auto dc = degeneracy_class(relative_instance(*c.resolution, c.realizations(), {}, c.constraints), c.codim, fs.ctx);
        const std::string want =
            "e1^3e2 - e1^2e3 + e1e4 - e5 + 2e1^4l + 2e1^2e2l + 2e4l + 8e1^3l^2 + 2e1e2l^2 + 2e3l^2 + 12e1^2l^3 + 2e2l^3 + 8e1l^4 + 2l^5";
        const std::string got = fs.polynomial(dc);
        ck.expect(poly_terms(got) == poly_terms(want) && poly_terms(want).size() == 14, "spinor variety class: got " + got);
    }
    {
        const auto sc = chow_ring(parse_space("Gr(2,6)"));
        const auto c4 = chern_class(parse_bundle("(tensor (dual U) (dual U))", &sc.space), sc.ctx).component(4);
        ck.equal(integrate(c4 * c4), Q(32), "c4(U* x U*)^2 on Gr(2,6)");
    }
    const std::vector<std::vector<long>> ea{{1, 4, -2, 7}, {3, -5, 2, 11}, {-1, 6, 9, 2}};
    const std::vector<std::vector<long>> fa{{5, -3, 8, 13}, {0, 1, -7, 4}, {2, -9, 6, 3}};
    for (int e = 1; e <= 4; ++e)
        for (int f = 1; f <= 4; ++f) {
            const std::string tag = std::to_string(e) + "x" + std::to_string(f);
            for (int r = 0; r < std::min(e, f); ++r)
                for (std::size_t s = 0; s < ea.size(); ++s) {
                    std::vector<long> a(ea[s].begin(), ea[s].begin() + e), b(fa[s].begin(), fa[s].begin() + f);
                    const int codim = (e - r) * (f - r);
                    const auto ctx = specialised_context({{"E", a}, {"F", b}}, codim);
                    const auto cls = thom_porteous(BundleExpr::gen("E", e), BundleExpr::gen("F", f), r, ctx);
                    const auto it = cls.terms().find(Key{codim});
                    ck.equal(it == cls.terms().end() ? Q(0) : it->second, porteous_localisation(a, b, r),
                             "Porteous " + tag + " r=" + std::to_string(r));
                }
            if (f > e) continue;
            // the resolution-derived class of the maximal degeneracy locus
            const auto fs = formal_space({{"E", e}, {"F", f}}, {}, e - f + 1);
            const auto E = BundleExpr::gen("E", e), F = BundleExpr::gen("F", f);
            const auto res = eagon_northcott(e, f);
            const std::vector<FactorRealization> real{gl_realization(E, false, BundleExpr::dual(E)), gl_realization(F, true, F)};
            ck.expect(degeneracy_class(relative_instance(res, real), res.codim, fs.ctx) == thom_porteous(E, F, f - 1, fs.ctx),
                      "resolution class vs Porteous " + tag);
        }
}

void c5_vanishing(Check& ck) {
    for (auto [d1, d2] : {std::pair{3, 4}, std::pair{4, 6}, std::pair{4, 5}}) {
        const auto rep = verify_weyman_vanishing(d1, d2, 8);
        std::string w;
        for (auto& lv : rep.levels)
            for (auto& x : lv.witnesses) w += " " + x;
        ck.expect(rep.passed && rep.levels.size() == 8, "vanishing (" + std::to_string(d1) + "," + std::to_string(d2) + ")" + w);
    }
    for (int n = 1; n <= 4; ++n) {
        const auto sc = chow_ring(parse_space("P" + std::to_string(n)));
        std::vector<std::vector<int>> as;
        std::vector<int> cur;
        sequences(n, -2, 2, cur, as);
        for (auto& a : as)
            for (int b = -6; b <= 6; ++b) {
                const std::string tag = "P" + std::to_string(n) + " " + bundle_text(a, b);
                std::vector<int> dual(a.rbegin(), a.rend());
                for (auto& x : dual) x = -x;
                const auto r = bott_gl(pn_weight(a, b));
                const auto s = bott_gl(pn_weight(dual, -b + n + 1));
                ck.expect(r.vanishing == s.vanishing && (r.vanishing || (r.degree + s.degree == n && r.module_dim == s.module_dim)),
                          "Serre duality " + tag);
                if (a.back() < 0 || b < -4 || b > 4) continue;
                const Z euler = r.vanishing ? Z(0) : (r.degree % 2 == 0 ? r.module_dim : Z(-r.module_dim));
                ck.equal(hrr_euler(sc, parse_bundle(bundle_text(a, b), &sc.space)), Q(euler), "HRR " + tag);
            }
    }
}

void c6_crepancy(Check& ck) {
    for (const std::string name : {"E25", "E4", "E10"}) ck.expect(crepancy_check(collapsing_by_name(name)).crepant, name + " not crepant");
    for (int d2 = 2; d2 <= 8; ++d2)
        for (char fam : {'B', 'C', 'D'}) {
            if ((fam == 'B') != (d2 % 2 == 1)) continue;
            for (int d1 = 1; d1 <= 8; ++d1)
                for (int r = 1; r <= std::min(d1, d2); ++r)
                    for (int d = 1; d <= d2 / 2; ++d) {
                        if (r < d || r - d > d2 - 2 * d || d > d2 - r) continue;
                        const auto cd = mixed_collapsing(d1, d2, r, d, fam);
                        ck.expect(!crepancy_check(cd).crepant, cd.label + " is crepant");
                    }
        }
}

void c7_determinants(Check& ck) {
    const auto L = LineClass::of("L");
    ck.equal(det_expr(spinor_bundle(BundleExpr::gen("E", 5), L, 1)), LineClass{{"E", 8}, {"L", 12}}, "det S+(E5)");
    ck.equal(det_expr(spinor_bundle(BundleExpr::gen("E", 6), L, 1)), LineClass{{"E", 16}, {"L", 48}}, "det S+(E6)");
    const SplittingOracle oracle;
    const std::vector<long> ea{3, -1}, fa{2, 5, -4};
    const long la = 7;
    const int top = 6;
    const auto ctx = specialised_context({{"E", ea}, {"F", fa}, {"L", {la}}}, top);
    std::mt19937 rng(424242);
    for (int i = 0; i < 200; ++i) {
        const auto t = random_tree(rng, 3);
        const Roots rs = oracle.roots(t);
        ck.equal(static_cast<long long>(rs.size()), t.rank(), t.sexpr() + " rank");
        Root sum{};
        for (auto& r : rs) sum = add(sum, r);
        ck.equal(det_expr(t), LineClass{{"E", sum[0]}, {"F", sum[2]}, {"L", sum[5]}}, t.sexpr() + " det");
        std::vector<Q> c(top + 1, Q(0));
        c[0] = 1;
        for (auto& r : rs) {
            const long v = r[0] * ea[0] + r[1] * ea[1] + r[2] * fa[0] + r[3] * fa[1] + r[4] * fa[2] + r[5] * la;
            for (int d = top; d >= 1; --d) c[static_cast<std::size_t>(d)] += Q(v) * c[static_cast<std::size_t>(d - 1)];
        }
        const auto got = chern_class(t, ctx);
        for (int d = 0; d <= top; ++d) {
            auto it = got.terms().find(Key{d});
            ck.equal(it == got.terms().end() ? Q(0) : it->second, c[static_cast<std::size_t>(d)], t.sexpr() + " c_" + std::to_string(d));
        }
    }
}

void c8_examples(Check& ck) {
    const auto checks = reproduce_examples();
    ck.equal(checks.size(), std::size_t{20}, "example count");
    int mixed = 0;
    for (auto& e : checks) {
        ck.expect(e.pass, e.list + " " + canonical_key(e.candidate));
        if (e.list != "mixed(3,4)") continue;
        ++mixed;
        ck.equal(e.extras.count("chi_O") ? e.extras.at("chi_O") : std::string("missing"), std::string("2"), e.list + " chi_O");
    }
    ck.expect(mixed > 0, "no mixed examples");
}

void c9_properties(Check& ck) {
    for (int n = 2; n <= 4; ++n)
        for (int a = 1; a <= 4; ++a)
            for (int b = 1; b <= 3; ++b)
                for (auto& p : partitions_of(a, n, a))
                    for (auto& q : partitions_of(b, n, b)) {
                        Z rhs = 0;
                        for (auto& [nu, c] : lr_product(p, q, n)) rhs += Z(static_cast<long>(c)) * schur_dim(nu, n);
                        ck.expect(schur_dim(p, n) * schur_dim(q, n) == rhs, "LR " + p.str() + "*" + q.str());
                    }
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int j = 0; j <= a * b; ++j) {
                Z sum = 0;
                for (auto& t : cauchy_exterior(j, a, b)) sum += schur_dim(t.lambda, a) * schur_dim(t.lambda_conj, b);
                ck.expect(sum == binomial(a * b, j), "Cauchy " + std::to_string(a) + "x" + std::to_string(b));
            }
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k < n; ++k)
            ck.equal(first_non_unimodular_degree(std::make_shared<GrassRing>(k, n)), -1, "Gr(" + std::to_string(k) + "," + std::to_string(n) + ")");
    for (int m = 1; m <= 6; ++m) ck.equal(first_non_unimodular_degree(std::make_shared<QuadricRing>(m)), -1, "Q" + std::to_string(m));
    for (auto& c : Catalog::builtin().records()) {
        if (!c.resolution || c.resolution->provenance == Provenance::Conjectural) continue;
        const auto& r = *c.resolution;
        if (!check_gorenstein_shape(r).gorenstein) continue;
        const int n = r.last_twist();
        const std::size_t top = r.terms.size() - 1;
        for (std::size_t i = 0; i <= top; ++i) {
            std::multiset<std::pair<std::string, int>> x, y;
            for (auto& t : r.terms[i]) x.emplace(r.term_dim(t).get_str(), t.twist);
            for (auto& t : r.terms[top - i]) y.emplace(r.term_dim(t).get_str(), n - t.twist);
            ck.expect(x == y, c.id + " twist symmetry at term " + std::to_string(i));
        }
    }
    SearchConfig cfg;
    cfg.factors = {Factor::proj(2), Factor::proj(3), Factor::grass(2, 4)};
    cfg.max_factors = 3;
    cfg.max_slices = 0;
    SearchConfig rev = cfg;
    std::reverse(rev.factors.begin(), rev.factors.end());
    rev.threads = 1;
    const auto a = search(cfg, "e6a1.Y5"), b = search(rev, "e6a1.Y5");
    ck.expect(!a.empty(), "search found nothing");
    ck.equal(a.size(), b.size(), "search size under reordering");
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
        ck.equal(candidate_json(a[i].first, a[i].second), candidate_json(b[i].first, b[i].second), "search entry " + std::to_string(i));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    int only = 0;
    app.add_option("--criterion", only, "run one criterion (1-9)")->check(CLI::Range(1, 9));
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> all{
        {1, "last twists from resolutions and cone indices", 1, c1_last_twists},
        {2, "canonical exponent solver", 0, c2_exponent_solver},
        {3, "displayed resolutions: exact division and Gorenstein shape", 5, c3_resolutions},
        {4, "degeneracy classes", 10, c4_chern_classes},
        {5, "isotropic vanishing, Serre duality, Riemann-Roch", 30, c5_vanishing},
        {6, "crepancy of collapsings", 0, c6_crepancy},
        {7, "determinants against the splitting principle", 0, c7_determinants},
        {8, "example lists", 60, c8_examples},
        {9, "property suites", 0, c9_properties},
    };
    bool ok = true;
    for (auto& c : all) {
        if (only && c.id != only) continue;
        Check ck;
        const auto t0 = std::chrono::steady_clock::now();
        std::string error;
        try {
            c.body(ck);
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool slow = c.limit_s > 0 && secs > c.limit_s;
        const bool pass = error.empty() && ck.failures.empty() && !slow;
        ok = ok && pass;
        std::cout << "criterion " << c.id << ": " << (pass ? "PASS" : "FAIL") << "  " << c.title << "  [" << ck.count << " checks, "
                  << ck.failures.size() << " failed, " << std::fixed << std::setprecision(2) << secs << " s";
        if (c.limit_s > 0) std::cout << " / limit " << c.limit_s << " s";
        std::cout << "]\n";
        if (!error.empty()) std::cout << "    error: " << error << "\n";
        if (slow) std::cout << "    over the time limit\n";
        for (std::size_t i = 0; i < ck.failures.size() && i < 12; ++i) std::cout << "    " << ck.failures[i] << "\n";
        if (ck.failures.size() > 12) std::cout << "    ... " << ck.failures.size() - 12 << " more\n";
    }
    return ok ? 0 : 1;
}
