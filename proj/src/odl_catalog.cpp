#include "odl/odl_catalog.hpp"

#include "odl/catalog_data.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <regex>
#include <set>

namespace odl {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Collapsings and crepancy.

std::size_t CollapsingData::coords() const {
    std::size_t n = 0;
    for (auto& b : blocks) n += static_cast<std::size_t>(b.n);
    return n;
}

namespace {

std::vector<QVec> block_positive_roots(char family, int n) {
    std::vector<QVec> out;
    const auto un = static_cast<std::size_t>(n);
    for (std::size_t i = 0; i < un; ++i)
        for (std::size_t j = i + 1; j < un; ++j) {
            QVec a(un, Q(0));
            a[i] = 1, a[j] = -1;
            out.push_back(a);
            if (family != 'A') {
                QVec b(un, Q(0));
                b[i] = 1, b[j] = 1;
                out.push_back(b);
            }
        }
    if (family == 'B' || family == 'C')
        for (std::size_t i = 0; i < un; ++i) {
            QVec a(un, Q(0));
            a[i] = family == 'C' ? 2 : 1;
            out.push_back(a);
        }
    return out;
}

}  // namespace

std::vector<QVec> CollapsingData::nilradical() const {
    std::vector<QVec> out;
    const std::size_t total = coords();
    std::size_t off = 0;
    for (auto& b : blocks) {
        if (b.grading.size() != static_cast<std::size_t>(b.n)) throw Error(label + ": grading length differs from block size");
        for (auto& r : block_positive_roots(b.family, b.n)) {
            if (dot(r, b.grading) <= 0) continue;
            QVec full(total, Q(0));
            for (std::size_t i = 0; i < r.size(); ++i) full[off + i] = r[i];
            out.push_back(full);
        }
        off += static_cast<std::size_t>(b.n);
    }
    return out;
}

CrepancyReport crepancy_check(const CollapsingData& cd) {
    const std::size_t n = cd.coords();
    CrepancyReport rep;
    rep.weight_sum.assign(n, Q(0));
    rep.nilradical_sum.assign(n, Q(0));
    for (auto& w : cd.weights) {
        if (w.size() != n) throw Error(cd.label + ": weight of length " + std::to_string(w.size()) + ", expected " + std::to_string(n));
        rep.weight_sum = rep.weight_sum + w;
    }
    for (auto& r : cd.nilradical()) rep.nilradical_sum = rep.nilradical_sum + r;
    rep.difference = rep.weight_sum - rep.nilradical_sum;
    rep.crepant = true;
    std::size_t off = 0;
    for (auto& b : cd.blocks) {
        for (std::size_t i = 0; i < static_cast<std::size_t>(b.n); ++i) {
            const Q& x = rep.difference[off + i];
            if (b.family == 'A' ? x != rep.difference[off] : x != 0) rep.crepant = false;
        }
        off += static_cast<std::size_t>(b.n);
    }
    return rep;
}

namespace {

/// Coordinates of a product of blocks, for building weights.
struct Coords {
    std::vector<std::size_t> offset;
    std::size_t total = 0;
    explicit Coords(const std::vector<CollapsingData::Block>& bs) {
        for (auto& b : bs) {
            offset.push_back(total);
            total += static_cast<std::size_t>(b.n);
        }
    }
    QVec zero() const { return QVec(total, Q(0)); }
    /// Adds c * epsilon_i (1-based) of block b.
    QVec& add(QVec& v, std::size_t b, int i, const Q& c = 1) const {
        v[offset[b] + static_cast<std::size_t>(i - 1)] += c;
        return v;
    }
};

CollapsingData::Block gl_block(int n, int marked_prefix = 0) {
    CollapsingData::Block b{'A', n, QVec(static_cast<std::size_t>(n), Q(0))};
    for (int i = 0; i < marked_prefix; ++i) b.grading[static_cast<std::size_t>(i)] = 1;
    return b;
}

CollapsingData::Block iso_block(char family, int n, int isotropic) {
    CollapsingData::Block b{family, n, QVec(static_cast<std::size_t>(n), Q(0))};
    for (int i = 0; i < isotropic; ++i) b.grading[static_cast<std::size_t>(i)] = 1;
    return b;
}

/// Weights of a half-spin module of D_n: (+-1/2)^n with an even number of minus signs,
/// restricted to those whose first `lead` coordinates are +1/2.
std::vector<QVec> half_spin_weights(int n, int lead) {
    std::vector<QVec> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) % 2 != 0) continue;
        QVec w;
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            const bool minus = (mask >> i) & 1;
            if (i < lead && minus) ok = false;
            w.push_back(Q(minus ? -1 : 1, 2));
        }
        if (ok) out.push_back(w);
    }
    return out;
}

/// GL_m (x) a block of epsilon-type weights: every phi_a plus every given weight.
CollapsingData tensor_gl(std::string label, int m, CollapsingData::Block base, const std::vector<QVec>& base_weights) {
    CollapsingData cd;
    cd.label = std::move(label);
    cd.blocks = {gl_block(m), std::move(base)};
    Coords co(cd.blocks);
    for (int a = 1; a <= m; ++a)
        for (auto& bw : base_weights) {
            QVec w = co.zero();
            co.add(w, 0, a);
            for (std::size_t i = 0; i < bw.size(); ++i) w[co.offset[1] + i] += bw[i];
            cd.weights.push_back(w);
        }
    return cd;
}

QVec eps_sum(int n, std::initializer_list<int> idx) {
    QVec v(static_cast<std::size_t>(n), Q(0));
    for (int i : idx) v[static_cast<std::size_t>(i - 1)] += 1;
    return v;
}

}  // namespace

CollapsingData mixed_collapsing(int d1, int d2, int r, int d, char family) {
    if (family != 'B' && family != 'C' && family != 'D') throw Error("mixed_collapsing: family must be B, C or D");
    if ((family == 'B') != (d2 % 2 == 1)) throw Error("mixed_collapsing: parity of d2 does not match the family");
    const int n2 = d2 / 2;
    if (d1 < 1 || d < 0 || d > n2 || r < d || r > d1 || r - d > d2 - 2 * d || d > d2 - r)
        throw Error("mixed_collapsing: parameters out of range");
    CollapsingData cd;
    cd.label = "mixed(" + std::to_string(d1) + "," + std::to_string(d2) + ";r=" + std::to_string(r) + ",d=" + std::to_string(d) + "," + family + ")";
    auto flag = gl_block(d1);
    for (int a = 1; a <= d1; ++a) flag.grading[static_cast<std::size_t>(a - 1)] = a <= r - d ? 2 : (a <= r ? 1 : 0);
    cd.blocks = {flag, iso_block(family, n2, d)};
    Coords co(cd.blocks);
    for (int i = 1; i <= d; ++i)
        for (int a = 1; a <= r; ++a) {
            QVec w = co.zero();
            co.add(w, 1, i);
            cd.weights.push_back(co.add(w, 0, a));
        }
    for (int a = 1; a <= r - d; ++a) {
        for (int j = d + 1; j <= n2; ++j)
            for (int sgn : {1, -1}) {
                QVec w = co.zero();
                co.add(w, 1, j, sgn);
                cd.weights.push_back(co.add(w, 0, a));
            }
        if (family == 'B') {
            QVec w = co.zero();
            cd.weights.push_back(co.add(w, 0, a));
        }
    }
    return cd;
}

CollapsingData isotropic_hom_collapsing(int d1, int d2, int r, char family) {
    if (family != 'B' && family != 'C' && family != 'D') throw Error("isotropic_hom_collapsing: family must be B, C or D");
    if ((family == 'B') != (d2 % 2 == 1)) throw Error("isotropic_hom_collapsing: parity of d2 does not match the family");
    const int n2 = d2 / 2, s = d2 - r;
    if (d1 < 1 || s < 1 || s > n2) throw Error("isotropic_hom_collapsing: need 1 <= d2 - r <= rank of the form");
    std::vector<QVec> base;
    for (int i = 1; i <= s; ++i) base.push_back(eps_sum(n2, {i}));
    for (int j = s + 1; j <= n2; ++j) {
        base.push_back(eps_sum(n2, {j}));
        base.push_back(Q(-1) * eps_sum(n2, {j}));
    }
    if (family == 'B') base.push_back(QVec(static_cast<std::size_t>(n2), Q(0)));
    auto cd = tensor_gl("Hom(Q,V1) over " + std::string(family == 'C' ? "IGr(" : "OGr(") + std::to_string(s) + "," + std::to_string(d2) + "), d1=" + std::to_string(d1),
                        d1, iso_block(family, n2, s), base);
    return cd;
}

namespace {

CollapsingData determinantal_collapsing(int e, int f, int r) {
    // Hom(V_e, U) over Gr(r, V_f): weights -phi_a + eps_i, i <= r.
    CollapsingData cd;
    cd.label = "Hom(V" + std::to_string(e) + ",U) over Gr(" + std::to_string(r) + "," + std::to_string(f) + ")";
    cd.blocks = {gl_block(e), gl_block(f, r)};
    Coords co(cd.blocks);
    for (int a = 1; a <= e; ++a)
        for (int i = 1; i <= r; ++i) {
            QVec w = co.zero();
            co.add(w, 0, a, -1);
            cd.weights.push_back(co.add(w, 1, i));
        }
    return cd;
}

}  // namespace

CollapsingData collapsing_by_name(const std::string& name) {
    std::smatch m;
    static const std::regex det_re(R"(determinantal\((\d+),(\d+),(\d+)\))"), iso_re(R"(isotropic_hom\((\d+),(\d+),(\d+),([BCD])\))");
    if (std::regex_match(name, m, det_re)) return determinantal_collapsing(std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]));
    if (std::regex_match(name, m, iso_re)) return isotropic_hom_collapsing(std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]), m[4].str()[0]);
    if (name == "E25" || name == "partial_decomposable") {
        // wedge^2 U_3 ^ V_8 on Gr(3,8); U ^ wedge^2 V_6 on P^5
        const int n = name == "E25" ? 8 : 6, k = name == "E25" ? 3 : 1, need = name == "E25" ? 2 : 1;
        CollapsingData cd;
        cd.label = name == "E25" ? "wedge^2 U ^ V8 over Gr(3,8)" : "U ^ wedge^2 V6 over P5";
        cd.blocks = {gl_block(n, k)};
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                for (int l = j + 1; l <= n; ++l)
                    if ((i <= k) + (j <= k) + (l <= k) >= need) cd.weights.push_back(eps_sum(n, {i, j, l}));
        return cd;
    }
    if (name == "E4" || name == "E10") {
        // V2 (x) (U_2 ^ V_6) on Gr(2,6); V2 (x) wedge^2 U_4 on Gr(4,6)
        const int k = name == "E4" ? 2 : 4;
        std::vector<QVec> base;
        for (int i = 1; i <= 6; ++i)
            for (int j = i + 1; j <= 6; ++j)
                if (name == "E4" ? i <= k : j <= k) base.push_back(eps_sum(6, {i, j}));
        return tensor_gl(name == "E4" ? "V2 (x) (U ^ V6) over Gr(2,6)" : "V2 (x) wedge^2 U over Gr(4,6)", 2, gl_block(6, k), base);
    }
    if (name == "E8" || name == "E13") {
        // V2 (x) S+ on Q^8 = D5/P1; V2 (x) T+ on OGr(3,10) = D5/P3
        const int k = name == "E8" ? 1 : 3;
        return tensor_gl(name == "E8" ? "V2 (x) S+ over Q8" : "V2 (x) T+ over OGr(3,10)", 2, iso_block('D', 5, k), half_spin_weights(5, k));
    }
    if (name == "segre_cone") {
        // O(-1,-1) (x) V3 over P(V1) x P(V2)
        CollapsingData cd;
        cd.label = "O(-1,-1) (x) V3 over P1xP1";
        cd.blocks = {gl_block(2, 1), gl_block(2, 1), gl_block(2)};
        Coords co(cd.blocks);
        for (int c = 1; c <= 2; ++c) {
            QVec w = co.zero();
            co.add(w, 0, 1);
            co.add(w, 1, 1);
            cd.weights.push_back(co.add(w, 2, c));
        }
        return cd;
    }
    throw Error("unknown collapsing '" + name + "'");
}

// ---------------------------------------------------------------------------
// Exponent solver.

namespace {

using RootKey = std::map<std::string, Q>;
using WeightRing = std::map<RootKey, Q>;  // virtual multiset of root-degree vectors

void add_to(WeightRing& a, const RootKey& k, const Q& c) {
    if (c == 0) return;
    Q& x = a[k];
    x += c;
    if (x == 0) a.erase(k);
}

RootKey key_add(const RootKey& a, const RootKey& b, const Q& cb = 1) {
    RootKey r = a;
    for (auto& [s, v] : b) {
        Q& x = r[s];
        x += cb * v;
        if (x == 0) r.erase(s);
    }
    return r;
}

WeightRing ring_mul(const WeightRing& a, const WeightRing& b) {
    WeightRing r;
    for (auto& [ka, ca] : a)
        for (auto& [kb, cb] : b) add_to(r, key_add(ka, kb), ca * cb);
    return r;
}

WeightRing ring_add(WeightRing a, const WeightRing& b, const Q& cb = 1) {
    for (auto& [k, c] : b) add_to(a, k, cb * c);
    return a;
}

WeightRing adams(const WeightRing& a, int k) {
    WeightRing r;
    for (auto& [key, c] : a) {
        RootKey s;
        for (auto& [n, v] : key) s[n] = Q(k) * v;
        add_to(r, s, c);
    }
    return r;
}

WeightRing unit_ring() { return WeightRing{{RootKey{}, Q(1)}}; }

/// e_k (sign = -1) or h_k (sign = +1) by the Newton identities.
std::vector<WeightRing> power_sequence(const WeightRing& x, int kmax, int sign) {
    std::vector<WeightRing> out{unit_ring()}, p;
    for (int i = 1; i <= kmax; ++i) p.push_back(adams(x, i));
    for (int k = 1; k <= kmax; ++k) {
        WeightRing acc;
        for (int i = 1; i <= k; ++i) {
            const Q c = sign > 0 ? Q(1) : Q(i % 2 == 1 ? 1 : -1);
            acc = ring_add(acc, ring_mul(out[static_cast<std::size_t>(k - i)], p[static_cast<std::size_t>(i - 1)]), c);
        }
        WeightRing scaled;
        for (auto& [key, c] : acc) add_to(scaled, key, c / Q(k));
        out.push_back(scaled);
    }
    return out;
}

WeightRing determinant(const std::vector<std::vector<WeightRing>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return unit_ring();
    // Laplace expansion along rows with memoisation on the set of used columns.
    std::map<unsigned, WeightRing> memo;
    std::function<WeightRing(std::size_t, unsigned)> rec = [&](std::size_t row, unsigned used) -> WeightRing {
        if (row == n) return unit_ring();
        if (auto it = memo.find(used); it != memo.end()) return it->second;
        WeightRing acc;
        int sign = 1;
        for (std::size_t c = 0; c < n; ++c) {
            if (used & (1u << c)) continue;
            if (!m[row][c].empty()) acc = ring_add(acc, ring_mul(m[row][c], rec(row + 1, used | (1u << c))), Q(sign));
            sign = -sign;
        }
        memo[used] = acc;
        return acc;
    };
    return rec(0, 0);
}

struct WeightContext {
    std::map<std::string, long long> ranks;  // generators of rank > 1

    RootKey root_degree(const LineClass& c) const {
        RootKey k;
        for (auto& [s, v] : c.exponents()) {
            auto it = ranks.find(s);
            const Q scale = it == ranks.end() ? Q(1) : Q(static_cast<long>(it->second));
            Q& x = k[s];
            x += scale * v;
            if (x == 0) k.erase(s);
        }
        return k;
    }

    WeightRing weights(const BundleExpr& e) const {
        using K = BundleExpr::Kind;
        const auto& n = e.node();
        switch (n.kind) {
            case K::Gen: {
                WeightRing r;
                if (n.rank > 0) add_to(r, RootKey{{n.name, Q(1)}}, Q(static_cast<long>(n.rank)));
                return r;
            }
            case K::Line: return WeightRing{{root_degree(n.cls), Q(1)}};
            case K::Dual: return adams(weights(n.kids[0]), -1);
            case K::Sum: {
                WeightRing r;
                for (auto& x : n.kids) r = ring_add(r, weights(x));
                return r;
            }
            case K::Minus: return ring_add(weights(n.kids[0]), weights(n.kids[1]), Q(-1));
            case K::Tensor: {
                WeightRing r = unit_ring();
                for (auto& x : n.kids) r = ring_mul(r, weights(x));
                return r;
            }
            case K::Wedge: return power_sequence(weights(n.kids[0]), n.k, -1).back();
            case K::Sym: return power_sequence(weights(n.kids[0]), n.k, 1).back();
            case K::Schur: {
                const auto& lam = n.lambda;
                const int l = lam.length();
                if (l == 0) return unit_ring();
                const auto h = power_sequence(weights(n.kids[0]), lam[0] + l, 1);
                std::vector<std::vector<WeightRing>> m(static_cast<std::size_t>(l), std::vector<WeightRing>(static_cast<std::size_t>(l)));
                for (int i = 0; i < l; ++i)
                    for (int j = 0; j < l; ++j) {
                        const int idx = lam[static_cast<std::size_t>(i)] - i + j;
                        if (idx >= 0) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = h[static_cast<std::size_t>(idx)];
                    }
                return determinant(m);
            }
            case K::Twist: {
                const RootKey shift = root_degree(n.cls);
                WeightRing r;
                for (auto& [k, c] : weights(n.kids[0])) add_to(r, key_add(k, shift), c);
                return r;
            }
        }
        return {};
    }
};

void collect_ranks(const BundleExpr& e, std::map<std::string, long long>& out) {
    if (e.kind() == BundleExpr::Kind::Gen && e.rank() > 1) out[e.node().name] = e.rank();
    for (auto& k : e.kids()) collect_ranks(k, out);
}

}  // namespace

LineClass apply_constraints(const LineClass& c, const std::map<std::string, LineClass>& constraints) {
    return substitute(c, constraints);
}

ExponentSolution solve_canonical_exponents(long long n, const BundleExpr& rep, const std::map<std::string, LineClass>& constraints) {
    if (rep.rank() <= 0) throw Error("solve_canonical_exponents: representation of rank zero");
    if (n <= 0) throw Error("solve_canonical_exponents: N must be positive");
    for (auto& [s, c] : constraints)
        for (auto& [t, v] : c.exponents())
            if (constraints.count(t)) throw Error("solve_canonical_exponents: constraint for " + s + " refers to constrained symbol " + t);

    WeightContext wc;
    collect_ranks(rep, wc.ranks);
    const WeightRing w = wc.weights(rep);

    // Degree functional phi: phi(weight) = 1 for every weight, and compatible with the constraints.
    std::set<std::string> symbols;
    for (auto& [k, c] : w)
        for (auto& [s, v] : k) symbols.insert(s);
    for (auto& [s, c] : constraints) {
        symbols.insert(s);
        for (auto& [t, v] : c.exponents()) symbols.insert(t);
    }
    std::vector<std::string> sym(symbols.begin(), symbols.end());
    auto col = [&](const std::string& s) { return static_cast<std::size_t>(std::find(sym.begin(), sym.end(), s) - sym.begin()); };
    const std::size_t nv = sym.size();
    QMat rows;
    for (auto& [k, c] : w) {
        QVec row(nv + 1, Q(0));
        for (auto& [s, v] : k) row[col(s)] += v;
        row[nv] = 1;
        rows.push_back(row);
    }
    for (auto& [s, c] : constraints) {
        QVec row(nv + 1, Q(0));
        for (auto& [t, v] : key_add(wc.root_degree(LineClass::of(s)), wc.root_degree(c), Q(-1))) row[col(t)] += v;
        rows.push_back(row);
    }
    auto piv = rref(rows);
    if (!piv.empty() && piv.back() == nv) throw Error("solve_canonical_exponents: the weights of the representation admit no degree functional");
    std::map<std::string, Q> phi;
    for (std::size_t i = 0; i < piv.size(); ++i) phi[sym[piv[i]]] = rows[i][nv];
    auto phi_of = [&](const RootKey& k) {
        Q s = 0;
        for (auto& [t, v] : k) s += v * (phi.count(t) ? phi[t] : Q(0));
        return s;
    };

    // Unknowns: x_s for each symbol of det(rep) after substitution, then t.
    const LineClass det = apply_constraints(det_expr(rep), constraints);
    std::vector<std::string> ds;
    for (auto& [s, v] : det.exponents()) ds.push_back(s);
    const std::size_t m = ds.size();
    QMat sys;
    for (std::size_t i = 0; i < m; ++i) {
        QVec row(m + 2, Q(0));
        row[i] = 1;
        row[m] = -det[ds[i]];
        sys.push_back(row);
    }
    QVec weight_row(m + 2, Q(0));
    for (std::size_t i = 0; i < m; ++i) weight_row[i] = phi_of(wc.root_degree(LineClass::of(ds[i])));
    weight_row[m + 1] = Q(static_cast<long>(n));
    sys.push_back(weight_row);
    auto p2 = rref(sys);
    if (!p2.empty() && p2.back() == m + 1) throw Error("solve_canonical_exponents: no solution");
    if (p2.size() != m + 1) throw Error("solve_canonical_exponents: solution is not unique");
    ExponentSolution sol;
    sol.grading = phi;
    for (std::size_t i = 0; i < p2.size(); ++i) {
        const Q v = sys[i][m + 1];
        if (p2[i] == m) sol.t = v;
        else sol.exponents.add(ds[p2[i]], v);
    }
    for (auto& [s, v] : sol.exponents.exponents())
        if (!is_integer(v)) throw Error("solve_canonical_exponents: non-integral exponent " + v.get_str() + " for " + s);
    return sol;
}

long long n_from_index(LieType t, int node) {
    std::vector<int> labels(static_cast<std::size_t>(t.rank), 0);
    if (node < 1 || node > t.rank) throw Error("n_from_index: invalid node");
    labels[static_cast<std::size_t>(node - 1)] = 1;
    return to_ll(weyl_dim(t, labels)) - fano_index(t, node);
}

// ---------------------------------------------------------------------------
// Records.

std::map<std::string, BundleExpr> OrbitCase::env() const {
    std::map<std::string, BundleExpr> e;
    for (auto& [name, r] : generators) e.emplace(name, r == 1 ? BundleExpr::line(name) : BundleExpr::gen(name, r));
    return e;
}

BundleExpr OrbitCase::rep(const std::map<std::string, BundleExpr>& bind) const {
    for (auto& [name, r] : generators) {
        auto it = bind.find(name);
        if (it == bind.end()) throw Error(id + ": generator " + name + " is not bound");
        if (it->second.rank() != r)
            throw Error(id + ": generator " + name + " needs rank " + std::to_string(r) + ", got " + std::to_string(it->second.rank()));
    }
    return parse_bundle(rep_text, nullptr, bind);
}

std::vector<FactorRealization> OrbitCase::realizations(const std::map<std::string, BundleExpr>& bind) const {
    if (!resolution) throw Error(id + ": no resolution catalogued");
    if (realization.size() != resolution->groups.size()) throw Error(id + ": no realisation catalogued");
    std::vector<FactorRealization> out;
    for (std::size_t f = 0; f < realization.size(); ++f) {
        const auto& spec = realization[f];
        const BundleExpr piece = parse_bundle(spec.piece, nullptr, bind);
        if (spec.kind == "gl") {
            auto it = bind.find(spec.bundle);
            if (it == bind.end()) throw Error(id + ": realisation refers to unknown generator " + spec.bundle);
            out.push_back(gl_realization(it->second, resolution->groups[f].dual_labels, piece));
        } else if (spec.kind == "table") {
            std::map<std::string, BundleExpr> table;
            for (auto& [k, text] : spec.labels) table.emplace(k, parse_bundle(text, nullptr, bind));
            out.push_back(table_realization(piece, std::move(table)));
        } else {
            throw Error(id + ": unknown realisation kind '" + spec.kind + "'");
        }
    }
    return out;
}

namespace {

GroupFactor parse_group(const std::string& g) {
    static const std::regex gl(R"(GL(\d+)(\*?))");
    std::smatch m;
    if (std::regex_match(g, m, gl)) return GroupFactor::gl(std::stoi(m[1]), m[2] == "*");
    return GroupFactor::simple(parse_type(g));
}

LineClass parse_line(const json& j) {
    LineClass c;
    for (auto& [k, v] : j.items()) c.add(k, Q(v.get<long>()));
    return c;
}

SingCodim parse_sing(const json& j) { return {j.at("value").get<int>(), j.value("at_least", false)}; }

OrbitCase parse_case(const json& j) {
    OrbitCase c;
    c.id = j.at("id").get<std::string>();
    c.lie_case = j.value("lie_case", "");
    c.group = j.value("group", "");
    for (auto& [k, v] : j.at("generators").items()) c.generators.emplace_back(k, v.get<int>());
    c.rep_text = j.at("rep").get<std::string>();
    if (j.contains("constraints"))
        for (auto& [k, v] : j.at("constraints").items()) c.constraints.emplace(k, parse_line(v));
    c.codim = j.at("codim").get<int>();
    if (j.contains("codim_stated")) c.codim_stated = j.at("codim_stated").get<int>();
    if (j.contains("sing")) c.sing = parse_sing(j.at("sing"));
    if (j.contains("sing_stated")) c.sing_stated = parse_sing(j.at("sing_stated"));
    if (j.contains("N")) {
        c.n = j.at("N").at("value").get<int>();
        c.n_source = j.at("N").value("source", "stated");
    }
    if (j.contains("cone")) c.cone = std::make_pair(parse_type(j.at("cone").at("type").get<std::string>()), j.at("cone").at("node").get<int>());
    c.exponents = parse_line(j.at("exponents"));
    c.collapsing = j.value("collapsing", "");
    c.provenance = j.value("provenance", "display");
    if (j.contains("resolution")) {
        const auto& rj = j.at("resolution");
        Resolution r;
        r.id = c.id;
        for (auto& g : rj.at("groups")) r.groups.push_back(parse_group(g.get<std::string>()));
        for (auto& level : rj.at("terms")) {
            std::vector<ResTerm> terms;
            for (auto& t : level) terms.push_back({t.at("l").get<std::vector<std::vector<int>>>(), t.at("d").get<int>()});
            r.terms.push_back(terms);
        }
        const std::string prov = rj.value("provenance", "displayed");
        r.provenance = prov == "conjectural" ? Provenance::Conjectural : (prov == "generated" ? Provenance::Generated : Provenance::Displayed);
        r.codim = c.codim;
        r.ambient_dim = c.rep_rank();
        r.validate();
        c.resolution = r;
    }
    if (j.contains("realization"))
        for (auto& rj : j.at("realization")) {
            RealizationSpec s;
            s.kind = rj.at("kind").get<std::string>();
            s.bundle = rj.value("bundle", "");
            s.piece = rj.at("piece").get<std::string>();
            if (rj.contains("labels")) s.labels = rj.at("labels").get<std::map<std::string, std::string>>();
            c.realization.push_back(s);
        }
    return c;
}

}  // namespace

Catalog Catalog::from_json_text(const std::string& text) {
    Catalog cat;
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(std::string("catalog: ") + e.what());
    }
    if (j.value("format", "") != "odl-catalog") throw Error("catalog: unrecognised format");
    cat.version_ = j.at("version").get<int>();
    if (cat.version_ != 1) throw Error("catalog: unsupported version " + std::to_string(cat.version_));
    try {
        for (auto& cj : j.at("cases")) cat.cases_.push_back(parse_case(cj));
        for (auto& nj : j.value("non_gorenstein", json::array()))
            cat.non_gor_.push_back({nj.at("id").get<std::string>(), nj.at("lie_case").get<std::string>(), nj.at("orbit").get<std::string>(),
                                    nj.value("remark", "")});
    } catch (const json::exception& e) {
        throw Error(std::string("catalog: ") + e.what());
    }
    std::set<std::string> seen;
    for (auto& c : cat.cases_)
        if (!seen.insert(c.id).second) throw Error("catalog: duplicate id " + c.id);
    return cat;
}

const Catalog& Catalog::builtin() {
    static const Catalog cat = from_json_text(kCatalogJson);
    return cat;
}

bool Catalog::has(const std::string& id) const {
    try {
        get(id);
        return true;
    } catch (const Error&) {
        return false;
    }
}

OrbitCase Catalog::get(const std::string& id) const {
    for (auto& c : cases_)
        if (c.id == id) return c;
    static const std::regex fam(R"((det|skew|sym|grass|mixed)\((\d+),(\d+)\))");
    std::smatch m;
    if (std::regex_match(id, m, fam)) {
        const int a = std::stoi(m[2]), b = std::stoi(m[3]);
        if (m[1] == "det") return determinantal_case(a, b);
        if (m[1] == "skew") return skew_case(a, b);
        if (m[1] == "sym") return sym_case(a, b);
        if (m[1] == "grass") return grass_cone_case(a, b);
        return mixed_case(a, b);
    }
    throw Error("unknown case '" + id + "'");
}

OrbitCase case_info(const std::string& id) { return Catalog::builtin().get(id); }

// ---------------------------------------------------------------------------
// Classical families.

namespace {

std::string fam_id(const char* name, int a, int b) { return std::string(name) + "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

}  // namespace

OrbitCase determinantal_case(int e, int r) {
    if (e < 1 || r < 0 || r >= e) throw Error("determinantal: need 0 <= r < e");
    OrbitCase c;
    c.id = fam_id("det", e, r);
    c.lie_case = "(A" + std::to_string(2 * e - 1) + ",alpha" + std::to_string(e) + ")";
    c.group = "GL" + std::to_string(e) + "xGL" + std::to_string(e);
    c.generators = {{"E", e}, {"F", e}};
    c.rep_text = "(tensor (dual E) F)";
    c.codim = (e - r) * (e - r);
    if (r > 0) c.sing = SingCodim{2 * e - 2 * r + 1, false};
    c.n = e * (e - r);
    c.n_source = "crepant";
    c.collapsing = "determinantal(" + std::to_string(e) + "," + std::to_string(e) + "," + std::to_string(r) + ")";
    c.exponents = LineClass{{"E", Q(-(e - r))}, {"F", Q(e - r)}};
    c.provenance = "family";
    if (r == e - 1) {
        Resolution res = eagon_northcott(e, e);
        res.id = c.id;
        c.resolution = res;
        c.realization = {{"gl", "E", "(dual E)", {}}, {"gl", "F", "F", {}}};
    }
    return c;
}

OrbitCase skew_case(int e, int r) {
    if (r < 0 || r % 2 != 0 || r > e - 2) throw Error("skew: need r even with 0 <= r <= e - 2");
    OrbitCase c;
    const int x = e - r;
    c.id = fam_id("skew", e, r);
    c.group = "GL" + std::to_string(e);
    c.generators = {{"E", e}};
    c.rep_text = "(wedge 2 E)";
    c.codim = x * (x - 1) / 2;
    c.codim_stated = x * (x - 1);
    if (r > 0) {
        c.sing = SingCodim{2 * x + 1, false};
        c.sing_stated = SingCodim{4 * e - 4 * r + 2, false};
    }
    c.n = e * (x - 1) / 2;
    c.n_source = "stated";
    c.exponents = LineClass{{"E", Q(x - 1)}};
    c.provenance = "family";
    return c;
}

OrbitCase sym_case(int e, int r) {
    if (r < 0 || r >= e || (e - r) % 2 == 0) throw Error("sym: need 0 <= r < e with e - r odd");
    OrbitCase c;
    const int x = e - r;
    c.id = fam_id("sym", e, r);
    c.group = "GL" + std::to_string(e);
    c.generators = {{"E", e}};
    c.rep_text = "(sym 2 E)";
    c.codim = x * (x + 1) / 2;
    c.codim_stated = x * (x + 1);
    if (r > 0) {
        c.sing = SingCodim{x + 1, false};
        c.sing_stated = SingCodim{2 * x + 2, false};
    }
    c.n = e * (x + 1) / 2;
    c.n_source = "stated";
    c.exponents = LineClass{{"E", Q(x + 1)}};
    c.provenance = "family";
    return c;
}

OrbitCase grass_cone_case(int k, int e) {
    if (k < 2 || k > e - 2) throw Error("grass: need 2 <= k <= e - 2");
    OrbitCase c;
    c.id = fam_id("grass", k, e);
    c.group = "GL" + std::to_string(e);
    c.generators = {{"E", e}};
    c.rep_text = "(wedge " + std::to_string(k) + " E)";
    const long long dimv = to_ll(binomial(e, k));
    c.codim = static_cast<int>(dimv - static_cast<long long>(k) * (e - k) - 1);
    c.sing = SingCodim{k * (e - k) + 1, false};
    c.cone = std::make_pair(make_type(Family::A, e - 1), k);
    c.n = static_cast<int>(dimv - e);
    c.n_source = "cone";
    c.exponents = LineClass{{"E", Q(binomial(e - 1, k - 1)) - Q(k)}};
    c.provenance = "family";
    return c;
}

OrbitCase mixed_case(int d1, int d2) {
    if (d2 % 2 != 0) throw Error("mixed: the skew-symmetric form needs even d2");
    if (d2 < d1 - 1 || d2 > 2 * d1 - 2) throw Error("mixed: need d1 - 1 <= d2 <= 2 d1 - 2");
    OrbitCase c;
    const int s = d2 - d1 + 1;
    c.id = fam_id("mixed", d1, d2);
    c.group = "GL" + std::to_string(d1) + "xSp" + std::to_string(d2);
    c.generators = {{"E1", d1}, {"E2", d2}, {"L", 1}};
    c.rep_text = "(tensor (dual E2) E1)";
    c.constraints.emplace("E2", LineClass{{"L", Q(d2 / 2)}});
    c.codim = s * (s + 1) / 2;
    c.sing = SingCodim{3, false};
    c.n = d1 * s;
    c.n_source = "crepant";
    c.collapsing = "isotropic_hom(" + std::to_string(d1) + "," + std::to_string(d2) + "," + std::to_string(d1 - 1) + ",C)";
    c.exponents = LineClass{{"E1", Q(s)}, {"E2", Q(-s)}, {"L", Q(s * (s - 1) / 2)}};
    c.provenance = "family";
    return c;
}

std::optional<long long> derived_n(const OrbitCase& c) {
    if (c.n_source == "resolution" && c.resolution) return hilbert_numerator(*c.resolution).n_check;
    if (c.n_source == "cone" && c.cone) return n_from_index(c.cone->first, c.cone->second);
    if (c.n_source == "crepant" && !c.collapsing.empty()) {
        const auto cd = collapsing_by_name(c.collapsing);
        if (!crepancy_check(cd).crepant) throw Error(c.id + ": collapsing " + cd.label + " is not crepant");
        return c.rep_rank() - cd.rank();
    }
    return std::nullopt;
}

DimensionReport dimension_report(const std::string& id, const std::map<std::string, int>& ranks) {
    const OrbitCase c = case_info(id);
    for (auto& [name, r] : ranks) {
        auto it = std::find_if(c.generators.begin(), c.generators.end(), [&](auto& g) { return g.first == name; });
        if (it == c.generators.end()) throw Error(id + ": no generator named " + name);
        if (it->second != r) throw Error(id + ": generator " + name + " has rank " + std::to_string(it->second) + ", not " + std::to_string(r));
    }
    DimensionReport d;
    d.codim = c.codim;
    d.sing = c.sing;
    d.rep_rank = c.rep_rank();
    d.codim_stated = c.codim_stated;
    d.sing_stated = c.sing_stated;
    return d;
}

}  // namespace odl
