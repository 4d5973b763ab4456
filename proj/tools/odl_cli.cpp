// Command-line front end. Every subcommand prints JSON, one record per line.

#include "odl/bott.hpp"
#include "odl/bundles.hpp"
#include "odl/chow.hpp"
#include "odl/odl_catalog.hpp"
#include "odl/resolutions.hpp"
#include "odl/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::json;
using namespace odl;

namespace {

std::vector<int> int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    for (std::string t; std::getline(ss, t, ',');)
        if (!t.empty()) out.push_back(std::stoi(t));
    return out;
}

json line_json(const LineClass& c) {
    json j = json::object();
    for (auto& [k, v] : c.exponents()) j[k] = v.get_str();
    return j;
}

json resolution_json(const Resolution& r) {
    json terms = json::array();
    for (auto& level : r.terms) {
        json lv = json::array();
        for (auto& t : level) lv.push_back({{"labels", t.labels}, {"dim", r.term_dim(t).get_str()}, {"twist", t.twist}});
        terms.push_back(lv);
    }
    json groups = json::array();
    for (auto& g : r.groups) groups.push_back(g.name());
    return {{"id", r.id}, {"groups", groups}, {"provenance", provenance_name(r.provenance)}, {"codim", r.codim}, {"terms", terms}};
}

json case_json(const OrbitCase& c, bool full) {
    json j{{"id", c.id}, {"lie_case", c.lie_case}, {"group", c.group}, {"rep", c.rep_text}, {"rep_rank", c.rep_rank()},
           {"codim", c.codim}, {"exponents", line_json(c.exponents)}, {"provenance", c.provenance}};
    j["sing"] = c.sing ? json(c.sing->str()) : json(nullptr);
    j["N"] = c.n ? json(*c.n) : json(nullptr);
    if (c.codim_stated) j["codim_stated"] = *c.codim_stated;
    if (c.sing_stated) j["sing_stated"] = c.sing_stated->str();
    if (!full) return j;
    j["N_source"] = c.n_source;
    json gens = json::object();
    for (auto& [n, r] : c.generators) gens[n] = r;
    j["generators"] = gens;
    json cons = json::object();
    for (auto& [s, v] : c.constraints) cons[s] = line_json(v);
    j["constraints"] = cons;
    if (c.cone) j["cone"] = {{"type", c.cone->first.name()}, {"node", c.cone->second}};
    if (!c.collapsing.empty()) {
        const auto cd = collapsing_by_name(c.collapsing);
        j["collapsing"] = {{"label", cd.label}, {"rank", cd.rank()}, {"base_dim", cd.base_dim()}, {"crepant", crepancy_check(cd).crepant}};
    }
    if (c.resolution) j["resolution"] = resolution_json(*c.resolution);
    return j;
}

IsoFamily iso_family(const std::string& f) {
    if (f == "B") return IsoFamily::B;
    if (f == "C") return IsoFamily::C;
    if (f == "D") return IsoFamily::D;
    throw Error("family must be B, C or D");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Orbital degeneracy loci: exact invariants, catalog and example search"};
    app.require_subcommand(1);

    auto* cat = app.add_subcommand("catalog", "List or show catalog records");
    bool list = false;
    std::string case_id;
    cat->add_flag("--list", list, "one line per record");
    cat->add_option("--case", case_id, "record or family id, e.g. e7a3.Y10 or det(4,2)");

    auto* canon = app.add_subcommand("canonical", "Solve the canonical exponents of a case from N and its representation");
    std::string canon_case;
    long long canon_n = 0;
    canon->add_option("--case", canon_case)->required();
    canon->add_option("--n", canon_n, "last twist (default: the case's N)");

    auto* bott = app.add_subcommand("bott", "Borel-Weil-Bott");
    std::string family = "C", grass, schur, gl, weyman;
    int jmax = 8;
    bool orthogonal = false;
    bott->add_option("--family", family, "B, C or D");
    bott->add_option("--grassmannian", grass, "s,d: isotropic s-planes for a form of rank d");
    bott->add_option("--schur", schur, "partition, e.g. 2,1");
    bott->add_option("--gl", gl, "GL weight sequence, e.g. -2,0");
    bott->add_option("--weyman", weyman, "d1,d2: run the vanishing check");
    bott->add_option("--jmax", jmax);
    bott->add_flag("--orthogonal", orthogonal, "read odd d2 as type B in --weyman");

    auto* det = app.add_subcommand("det", "Determinant of a bundle expression");
    std::string expr, space_text;
    det->add_option("--expr", expr)->required();
    det->add_option("--space", space_text, "resolve tautological determinants on this space");

    auto* cls = app.add_subcommand("class", "Degeneracy class of a catalogued resolution");
    std::string class_case;
    bool formal = false;
    cls->add_option("--case", class_case)->required();
    cls->add_flag("--formal", formal, "formal Chern roots (the only mode)");

    auto* chi = app.add_subcommand("chi", "Euler characteristic of a zero locus");
    std::string chi_space, chi_bundle;
    bool holomorphic = false;
    chi->add_option("--space", chi_space)->required();
    chi->add_option("--bundle", chi_bundle)->required();
    chi->add_flag("--holomorphic", holomorphic, "chi(O_Z) instead of the topological Euler characteristic");

    auto* hilb = app.add_subcommand("hilbert", "Hilbert numerator and Gorenstein shape");
    std::string hilb_case, en;
    hilb->add_option("--case", hilb_case);
    hilb->add_option("--eagon-northcott", en, "e,f");

    auto* srch = app.add_subcommand("search", "Search (X, bundle) candidates");
    std::string srch_case, canonical = "trivial", config;
    long long dim = 4;
    std::vector<std::string> fixed;
    bool bisym = false;
    srch->add_option("--case", srch_case)->required();
    srch->add_option("--dim", dim);
    srch->add_option("--canonical", canonical)->check(CLI::IsMember({"trivial", "negative"}));
    srch->add_option("--config", config, "JSON config file");
    srch->add_option("--fixed", fixed, "NAME=EXPR, keep a generator fixed");
    srch->add_flag("--bisymplectic", bisym, "include I2Gr(3,8)");

    auto* repro = app.add_subcommand("reproduce", "Re-derive the example lists");
    bool all = false;
    repro->add_flag("--all", all);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cat) {
            if (list || case_id.empty()) {
                for (auto& c : Catalog::builtin().records()) std::cout << case_json(c, false).dump() << "\n";
                for (auto& r : Catalog::builtin().non_gorenstein())
                    std::cout << json{{"id", r.id}, {"lie_case", r.lie_case}, {"orbit", r.orbit}, {"gorenstein", false}, {"remark", r.remark}}.dump()
                              << "\n";
            } else {
                std::cout << case_json(case_info(case_id), true).dump(2) << "\n";
            }
        } else if (*canon) {
            const auto c = case_info(canon_case);
            const long long n = canon_n ? canon_n : (c.n ? *c.n : 0);
            const auto sol = solve_canonical_exponents(n, c.rep(), c.constraints);
            json g = json::object();
            for (auto& [k, v] : sol.grading) g[k] = v.get_str();
            std::cout << json{{"case", c.id}, {"N", n}, {"exponents", line_json(sol.exponents)}, {"t", sol.t.get_str()}, {"grading", g}}.dump() << "\n";
        } else if (*bott) {
            if (!weyman.empty()) {
                auto d = int_list(weyman);
                if (d.size() != 2) throw Error("--weyman needs d1,d2");
                auto rep = verify_weyman_vanishing(d[0], d[1], jmax, orthogonal ? OddRule::Orthogonal : OddRule::SymplecticFloor);
                for (auto& lv : rep.levels)
                    std::cout << json{{"j", lv.j}, {"passed", lv.passed}, {"checked", lv.checked}, {"witnesses", lv.witnesses}}.dump() << "\n";
                std::cout << json{{"d1", rep.d1}, {"d2", rep.d2}, {"family", std::string(1, family_char(rep.family))}, {"rank", rep.d},
                                  {"passed", rep.passed}}
                                 .dump()
                          << "\n";
                return rep.passed ? 0 : 1;
            }
            BottResult r;
            if (!gl.empty()) {
                std::vector<long long> seq;
                for (int x : int_list(gl)) seq.push_back(x);
                r = bott_gl(seq);
            } else {
                auto sd = int_list(grass);
                if (sd.size() != 2) throw Error("--grassmannian needs s,d");
                r = bott_isotropic(Partition(int_list(schur)), sd[0], sd[1], iso_family(family)).result;
            }
            json dom = json::array();
            for (auto& x : r.dominant) dom.push_back(x.get_str());
            std::cout << json{{"status", r.vanishing ? "vanishing" : "nonvanishing"}, {"degree", r.degree}, {"dominant_weight", dom},
                              {"module_dim", r.module_dim.get_str()}}
                             .dump()
                      << "\n";
        } else if (*det) {
            if (space_text.empty()) {
                std::cout << json{{"det", line_json(det_expr(parse_bundle(expr)))}}.dump() << "\n";
            } else {
                const auto s = parse_space(space_text);
                const auto e = parse_bundle(expr, &s);
                std::cout << json{{"rank", e.rank()}, {"det", line_json(resolve_on_space(det_expr(e), s))}}.dump() << "\n";
            }
        } else if (*cls) {
            const auto c = case_info(class_case);
            if (!c.resolution) throw Error(c.id + ": no resolution catalogued");
            std::vector<std::pair<std::string, int>> bundles;
            std::vector<std::string> lines;
            for (auto& [n, r] : c.generators) {
                if (r == 1) lines.push_back(n);
                else bundles.emplace_back(n, r);
            }
            const auto fs = formal_space(bundles, lines, c.codim);
            const auto terms = relative_instance(*c.resolution, c.realizations(), {}, c.constraints);
            const auto dc = degeneracy_class(terms, c.codim, fs.ctx);
            std::cout << json{{"case", c.id}, {"codim", c.codim}, {"class", fs.polynomial(dc)}}.dump() << "\n";
        } else if (*chi) {
            const auto sc = chow_ring(parse_space(chi_space));
            const auto f = parse_bundle(chi_bundle, &sc.space);
            const Z v = holomorphic ? holomorphic_euler_zero_locus(sc, f) : euler_char_zero_locus(sc, f);
            std::cout << json{{"space", sc.space.name()}, {"bundle", chi_bundle}, {holomorphic ? "chi_O" : "euler", v.get_str()}}.dump() << "\n";
        } else if (*hilb) {
            Resolution r;
            if (!en.empty()) {
                auto ef = int_list(en);
                if (ef.size() != 2) throw Error("--eagon-northcott needs e,f");
                r = eagon_northcott(ef[0], ef[1]);
            } else {
                const auto c = case_info(hilb_case);
                if (!c.resolution) throw Error(c.id + ": no resolution catalogued (N only)");
                r = *c.resolution;
            }
            const auto h = hilbert_numerator(r);
            const auto g = check_gorenstein_shape(r);
            std::cout << json{{"id", r.id}, {"p", poly_str(h.p)}, {"N", h.n_check}, {"gorenstein", g.gorenstein}, {"witness", g.witness},
                              {"provenance", provenance_name(r.provenance)}}
                             .dump()
                      << "\n";
        } else if (*srch) {
            SearchConfig cfg = config.empty() ? SearchConfig{} : SearchConfig::from_json_text(read_file(config));
            if (config.empty()) {
                cfg.target_dim = dim;
                cfg.canonical = canonical == "trivial" ? CanonicalTarget::Trivial : CanonicalTarget::Negative;
            }
            if (bisym) cfg.bisymplectic = true;
            for (auto& f : fixed) {
                const auto eq = f.find('=');
                if (eq == std::string::npos) throw Error("--fixed expects NAME=EXPR");
                cfg.fixed[f.substr(0, eq)] = f.substr(eq + 1);
            }
            const auto res = search(cfg, srch_case);
            for (auto& [c, v] : res) std::cout << candidate_json(c, v) << "\n";
            std::cerr << res.size() << " candidates for " << srch_case << "\n";
        } else if (*repro) {
            (void)all;
            int failed = 0;
            const auto checks = reproduce_examples();
            for (auto& e : checks) {
                json j = json::parse(candidate_json(e.candidate, e.verdict));
                j["list"] = e.list;
                j["extras"] = e.extras;
                j["pass"] = e.pass;
                if (!e.note.empty()) j["note"] = e.note;
                std::cout << j.dump() << "\n";
                if (!e.pass) ++failed;
            }
            std::cerr << checks.size() - static_cast<std::size_t>(failed) << "/" << checks.size() << " example entries pass\n";
            return failed == 0 ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
