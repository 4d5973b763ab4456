#ifndef ODL_RESOLUTIONS_HPP
#define ODL_RESOLUTIONS_HPP

#include "odl/bundles.hpp"
#include "odl/core.hpp"
#include "odl/lie_core.hpp"
#include "odl/partitions.hpp"

#include <functional>
#include <map>
#include <set>
#include <optional>
#include <string>
#include <vector>

namespace odl {

/// One factor of the structure group. GL labels are partitions (on V or on V*),
/// simple-group labels are Dynkin labels.
struct GroupFactor {
    enum class Kind { GL, Simple };
    Kind kind = Kind::GL;
    int n = 1;                 // GL_n
    LieType type{};            // simple factor
    bool dual_labels = false;  // GL: labels are Schur functors of V*

    static GroupFactor gl(int n, bool dual) { return {Kind::GL, n, {}, dual}; }
    static GroupFactor simple(LieType t) { return {Kind::Simple, 0, t, false}; }

    std::string name() const {
        return kind == Kind::GL ? "GL" + std::to_string(n) + (dual_labels ? "*" : "") : type.name();
    }

    Z module_dim(const std::vector<int>& label) const {
        if (kind == Kind::GL) return schur_dim(Partition(label), n);
        return weyl_dim(type, label);
    }

    std::vector<int> trivial_label() const {
        return kind == Kind::GL ? std::vector<int>{} : std::vector<int>(static_cast<std::size_t>(type.rank), 0);
    }
};

/// Irreducible summand V_{i,j} (x) A(-twist); one label per group factor.
struct ResTerm {
    std::vector<std::vector<int>> labels;
    int twist = 0;
};

enum class Provenance { Displayed, Generated, Conjectural };

inline std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::Displayed: return "displayed";
        case Provenance::Generated: return "generated";
        case Provenance::Conjectural: return "conjectural";
    }
    return "?";
}

/// Equivariant graded free resolution: terms[i] lists the summands of the i-th module.
/// Twists are stored as positive d for A(-d).
struct Resolution {
    std::string id;
    std::vector<GroupFactor> groups;
    std::vector<std::vector<ResTerm>> terms;
    Provenance provenance = Provenance::Displayed;
    long long ambient_dim = 0;
    int codim = 0;

    int length() const { return static_cast<int>(terms.size()) - 1; }

    Z term_dim(const ResTerm& t) const {
        Z d = 1;
        for (std::size_t f = 0; f < groups.size(); ++f) d *= groups[f].module_dim(t.labels[f]);
        return d;
    }

    Z rank(std::size_t i) const {
        Z r = 0;
        for (auto& t : terms[i]) r += term_dim(t);
        return r;
    }

    /// Structural checks: term 0 is (trivial, 0), labels match factors, twists d >= i.
    void validate() const {
        if (terms.empty()) throw Error(id + ": empty resolution");
        if (static_cast<int>(terms.size()) - 1 != codim) throw Error(id + ": resolution length differs from codimension");
        if (terms[0].size() != 1 || terms[0][0].twist != 0) throw Error(id + ": term 0 must be A");
        for (std::size_t f = 0; f < groups.size(); ++f)
            if (terms[0][0].labels[f] != groups[f].trivial_label()) throw Error(id + ": term 0 must be trivial");
        for (std::size_t i = 0; i < terms.size(); ++i)
            for (auto& t : terms[i]) {
                if (t.labels.size() != groups.size()) throw Error(id + ": label count differs from group factors");
                if (t.twist < static_cast<int>(i)) throw Error(id + ": twist below homological degree");
            }
    }

    int last_twist() const {
        int n = 0;
        for (auto& t : terms.back()) n = std::max(n, t.twist);
        return n;
    }
};

/// Integer polynomial, coefficient i of t^i.
using ZPoly = std::vector<Z>;

inline void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline std::string poly_str(const ZPoly& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        const Z a = abs(p[i]);
        std::string mono = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
        std::string mag = (a == 1 && i > 0) ? "" : a.get_str() + (i > 0 ? "*" : "");
        if (s.empty()) s = (p[i] < 0 ? "-" : "") + mag + mono;
        else s += (p[i] < 0 ? " - " : " + ") + mag + mono;
    }
    return s.empty() ? "0" : s;
}

struct HilbertNumerator {
    ZPoly k;  // sum_i (-1)^i sum_j dim t^d
    ZPoly p;  // k / (1 - t)^codim
    int n_check = 0;
};

/// K(t) = sum (-1)^i dim V_{i,j} t^{d_{i,j}}, divided exactly by (1 - t)^codim.
inline HilbertNumerator hilbert_numerator(const Resolution& r) {
    r.validate();
    HilbertNumerator h;
    for (std::size_t i = 0; i < r.terms.size(); ++i)
        for (auto& t : r.terms[i]) {
            const auto d = static_cast<std::size_t>(t.twist);
            if (h.k.size() <= d) h.k.resize(d + 1, Z(0));
            h.k[d] += (i % 2 == 0 ? 1 : -1) * r.term_dim(t);
        }
    ZPoly q = h.k;
    for (int c = 0; c < r.codim; ++c) {
        // synthetic division by (1 - t): running sums, remainder must vanish
        ZPoly out(q.size(), Z(0));
        Z acc = 0;
        for (std::size_t i = 0; i < q.size(); ++i) {
            acc += q[i];
            out[i] = acc;
        }
        if (acc != 0) throw Error(r.id + ": numerator is not divisible by (1-t)^" + std::to_string(r.codim));
        q = std::move(out);
        trim(q);
    }
    trim(q);
    h.p = q;
    h.n_check = r.codim + static_cast<int>(q.size()) - 1;
    if (h.n_check != r.last_twist())
        throw Error(r.id + ": deg p + codim = " + std::to_string(h.n_check) + " but the last twist is " + std::to_string(r.last_twist()));
    return h;
}

struct ShapeCheck {
    bool gorenstein = false;
    std::string witness;
};

/// Rank-one last term and (dim, twist) symmetry d_{i} + d_{c-i} = N.
inline ShapeCheck check_gorenstein_shape(const Resolution& r) {
    ShapeCheck s;
    const std::size_t c = r.terms.size() - 1;
    if (r.rank(c) != 1) {
        s.witness = "last term has rank " + r.rank(c).get_str();
        return s;
    }
    const int n = r.terms[c][0].twist;
    for (std::size_t i = 0; i <= c; ++i) {
        std::multiset<std::pair<std::string, int>> a, b;
        for (auto& t : r.terms[i]) a.emplace(r.term_dim(t).get_str(), t.twist);
        for (auto& t : r.terms[c - i]) b.emplace(r.term_dim(t).get_str(), n - t.twist);
        if (a != b) {
            s.witness = "term " + std::to_string(i) + " is not dual to term " + std::to_string(c - i) + " about N=" + std::to_string(n);
            return s;
        }
    }
    s.gorenstein = true;
    s.witness = "N=" + std::to_string(n);
    return s;
}

/// C_i = wedge^{f+i-1} V_e (x) wedge^f V_f* (x) Sym^{i-1} V_f* (x) A(-f-i+1), i = 1..e-f+1.
inline Resolution eagon_northcott(int e, int f) {
    if (f < 1 || e < f) throw Error("eagon_northcott: need e >= f >= 1");
    Resolution r;
    r.id = "eagon_northcott(" + std::to_string(e) + "," + std::to_string(f) + ")";
    r.groups = {GroupFactor::gl(e, false), GroupFactor::gl(f, true)};
    r.provenance = Provenance::Generated;
    r.ambient_dim = static_cast<long long>(e) * f;
    r.codim = e - f + 1;
    r.terms.push_back({ResTerm{{{}, {}}, 0}});
    for (int i = 1; i <= e - f + 1; ++i) {
        std::vector<int> col(static_cast<std::size_t>(f + i - 1), 1);
        std::vector<int> hook(static_cast<std::size_t>(f), 1);  // det (x) Sym^{i-1} = S_{(i,1^{f-1})}
        hook[0] = i;
        r.terms.push_back({ResTerm{{col, hook}, f + i - 1}});
    }
    return r;
}

/// How one group factor is realised by bundles: `rep` is the factor's piece of the
/// represented bundle, `module` realises a label up to a line twist.
struct FactorRealization {
    BundleExpr rep;
    std::function<BundleExpr(const std::vector<int>&)> module;
};

/// Realisation of a GL factor by a bundle E of rank n (labels on E or E*).
inline FactorRealization gl_realization(const BundleExpr& E, bool dual_labels, const BundleExpr& rep_piece) {
    return {rep_piece, [E, dual_labels](const std::vector<int>& lam) {
                const BundleExpr base = dual_labels ? BundleExpr::dual(E) : E;
                return BundleExpr::schur(Partition(lam), base);
            }};
}

/// Realisation from a table keyed by comma-joined labels.
inline FactorRealization table_realization(const BundleExpr& rep_piece, std::map<std::string, BundleExpr> table) {
    return {rep_piece, [table = std::move(table)](const std::vector<int>& lab) {
                std::string key;
                for (std::size_t i = 0; i < lab.size(); ++i) key += (i ? "," : "") + std::to_string(lab[i]);
                if (std::all_of(lab.begin(), lab.end(), [](int x) { return x == 0; })) return BundleExpr::trivial(1);
                auto it = table.find(key);
                if (it == table.end()) throw Error("no realisation for label (" + key + ")");
                return it->second;
            }};
}

inline std::string label_key(const std::vector<int>& lab) {
    std::string key;
    for (std::size_t i = 0; i < lab.size(); ++i) key += (i ? "," : "") + std::to_string(lab[i]);
    return key;
}

namespace detail {

inline LineClass slope(const BundleExpr& e) {
    if (e.rank() == 0) throw Error("slope of a rank-zero bundle");
    return Q(1, static_cast<unsigned long>(e.rank())) * det_expr(e);
}

inline bool integral(const LineClass& c) {
    for (auto& [k, v] : c.exponents())
        if (!is_integer(v)) return false;
    return true;
}

}  // namespace detail

/// Relative bundle for one summand of degree d: the realised modules twisted by the line
/// bundle that makes each factor's slope equal to -d times the slope of its piece of V.
/// An extra twist M (twisted degeneracy loci) contributes M^{-d}. `relations` rewrites
/// det-symbols (e.g. det E = L^3 for a symplectic E) before the integrality check.
inline BundleExpr relative_term(const Resolution& r, const ResTerm& t, const std::vector<FactorRealization>& real,
                                const LineClass& twist = {}, const LineRelations& relations = {}) {
    if (real.size() != r.groups.size()) throw Error(r.id + ": realisation count differs from group factors");
    std::vector<BundleExpr> parts;
    LineClass corr;
    for (std::size_t f = 0; f < r.groups.size(); ++f) {
        BundleExpr m = real[f].module(t.labels[f]);
        const Z expected = r.groups[f].module_dim(t.labels[f]);
        if (Z(static_cast<long>(m.rank())) != expected)
            throw Error(r.id + ": realisation of (" + label_key(t.labels[f]) + ") has rank " + std::to_string(m.rank()) +
                        ", module has dimension " + expected.get_str());
        corr += Q(-t.twist) * detail::slope(real[f].rep) - detail::slope(m);
        parts.push_back(m);
    }
    corr += Q(-t.twist) * twist;
    corr = substitute(corr, relations);
    if (!detail::integral(corr)) throw Error(r.id + ": non-integral line twist " + corr.str() + " in a relative term");
    BundleExpr body = parts.size() == 1 ? parts[0] : BundleExpr::tensor(parts);
    return corr.trivial() ? body : BundleExpr::twist(body, corr);
}

/// Term-by-term relative version: entry i is the i-th locally free module (a direct sum).
inline std::vector<BundleExpr> relative_instance(const Resolution& r, const std::vector<FactorRealization>& real,
                                                 const LineClass& twist = {}, const LineRelations& relations = {}) {
    std::vector<BundleExpr> out;
    for (auto& level : r.terms) {
        std::vector<BundleExpr> xs;
        for (auto& t : level) xs.push_back(relative_term(r, t, real, twist, relations));
        out.push_back(xs.size() == 1 ? xs[0] : BundleExpr::sum(xs));
    }
    return out;
}

/// M with omega_D = (K_X (x) M)|_D: the dual of the last relative term.
inline LineClass canonical_twist(const Resolution& r, const std::vector<FactorRealization>& real, const LineClass& twist = {},
                                 const LineRelations& relations = {}) {
    auto shape = check_gorenstein_shape(r);
    if (!shape.gorenstein) throw Error(r.id + ": not Gorenstein (" + shape.witness + ")");
    return substitute(-det_expr(relative_term(r, r.terms.back()[0], real, twist, relations)), relations);
}

}  // namespace odl

#endif
