#ifndef ODL_CHOW_HPP
#define ODL_CHOW_HPP

#include "odl/bundles.hpp"
#include "odl/core.hpp"
#include "odl/partitions.hpp"
#include "odl/spaces.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

namespace odl {

using Key = std::vector<int>;
using Terms = std::vector<std::pair<Key, Q>>;

/// Graded ring with a fixed basis, keyed by short integer vectors.
class FactorRing {
public:
    virtual ~FactorRing() = default;
    virtual std::size_t width() const = 0;
    virtual int degree(const Key& k) const = 0;
    virtual Terms multiply(const Key& a, const Key& b) const = 0;
    virtual Key one() const = 0;
    /// Basis element integrating to 1; empty when the ring has no fundamental class.
    virtual std::optional<Key> point() const = 0;
    virtual int dim() const = 0;
    /// Basis of each degree; only meaningful for finite rings.
    virtual std::vector<std::vector<Key>> basis() const = 0;
};

/// Grassmannian Gr(k, n) in the Schubert basis; keys are partitions padded to k parts.
class GrassRing final : public FactorRing {
public:
    GrassRing(int k, int n) : k_(k), n_(n) {
        if (k < 1 || k >= n) throw Error("Grassmannian ring needs 1 <= k < n");
    }
    std::size_t width() const override { return static_cast<std::size_t>(k_); }
    int degree(const Key& a) const override { return std::accumulate(a.begin(), a.end(), 0); }
    Key one() const override { return Key(static_cast<std::size_t>(k_), 0); }
    std::optional<Key> point() const override { return Key(static_cast<std::size_t>(k_), n_ - k_); }
    int dim() const override { return k_ * (n_ - k_); }
    Terms multiply(const Key& a, const Key& b) const override {
        std::lock_guard<std::mutex> lock(mu_);
        auto key = std::make_pair(a, b);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        Terms out;
        for (auto& [nu, c] : lr_product(Partition(a), Partition(b), k_)) {
            if (nu[0] > n_ - k_) continue;
            out.emplace_back(pad(nu), Q(static_cast<long>(c)));
        }
        cache_[key] = out;
        return out;
    }
    std::vector<std::vector<Key>> basis() const override {
        std::vector<std::vector<Key>> b(static_cast<std::size_t>(dim()) + 1);
        for (auto& p : partitions_in_box(k_, n_ - k_)) b[static_cast<std::size_t>(p.size())].push_back(pad(p));
        return b;
    }
    /// Special Schubert class sigma_i = c_i(Q), or sigma_{1^i} = c_i(U*) when column is true.
    Key special(int i, bool column) const {
        Key key(static_cast<std::size_t>(k_), 0);
        if (column)
            for (int j = 0; j < i; ++j) key[static_cast<std::size_t>(j)] = 1;
        else
            key[0] = i;
        return key;
    }
    int k() const { return k_; }
    int n() const { return n_; }

private:
    Key pad(const Partition& p) const {
        Key key(static_cast<std::size_t>(k_), 0);
        for (int i = 0; i < p.length(); ++i) key[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i)];
        return key;
    }
    int k_, n_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<Key, Key>, Terms> cache_;
};

/// Smooth quadric of dimension m. Keys (degree, type); type 1 is the second ruling class in the middle degree.
/// Below the middle the basis is h^i, above it the linear-space classes l_i with h^i = 2 l_i.
class QuadricRing final : public FactorRing {
public:
    explicit QuadricRing(int m) : m_(m) {
        if (m < 1) throw Error("quadric of dimension < 1");
    }
    std::size_t width() const override { return 2; }
    int degree(const Key& a) const override { return a[0]; }
    Key one() const override { return {0, 0}; }
    std::optional<Key> point() const override { return Key{m_, 0}; }
    int dim() const override { return m_; }
    std::vector<std::vector<Key>> basis() const override {
        std::vector<std::vector<Key>> b(static_cast<std::size_t>(m_) + 1);
        for (int i = 0; i <= m_; ++i) {
            b[static_cast<std::size_t>(i)].push_back({i, 0});
            if (m_ % 2 == 0 && 2 * i == m_) b[static_cast<std::size_t>(i)].push_back({i, 1});
        }
        return b;
    }
    Terms multiply(const Key& a, const Key& b) const override {
        const int i = a[0], j = b[0], d = i + j;
        if (d > m_) return {};
        const bool a_low = lower(a), b_low = lower(b);
        if (a_low && b_low) return power(d);
        if (a_low || b_low) {
            const Key& other = a_low ? b : a;
            const int hi = a_low ? i : j;
            if (hi == 0) return {{other, 1}};
            return {{{d, 0}, 1}};  // h^i times an upper class: next upper class
        }
        // Two middle classes of an even quadric (upper-by-upper beyond the middle vanishes by degree).
        const int p = m_ / 2;
        const bool same = a[1] == b[1];
        const bool nonzero = (p % 2 == 0) ? same : !same;
        if (nonzero) return {{{m_, 0}, 1}};
        return {};
    }
    /// h^d in the basis.
    Terms power(int d) const {
        if (d > m_) return {};
        if (2 * d < m_) return {{{d, 0}, 1}};
        if (m_ % 2 == 0 && 2 * d == m_) return {{{d, 0}, 1}, {{d, 1}, 1}};
        return {{{d, 0}, 2}};
    }

private:
    bool lower(const Key& a) const { return 2 * a[0] < m_; }
    int m_;
};

/// Truncated polynomial ring on weighted variables (formal Chern classes).
class FormalRing final : public FactorRing {
public:
    FormalRing(std::vector<std::string> names, std::vector<int> degrees, int top)
        : names_(std::move(names)), deg_(std::move(degrees)), top_(top) {
        if (names_.size() != deg_.size()) throw Error("formal ring: names and degrees differ in length");
    }
    std::size_t width() const override { return names_.size(); }
    int degree(const Key& a) const override {
        int d = 0;
        for (std::size_t i = 0; i < a.size(); ++i) d += a[i] * deg_[i];
        return d;
    }
    Key one() const override { return Key(names_.size(), 0); }
    std::optional<Key> point() const override { return std::nullopt; }
    int dim() const override { return top_; }
    Terms multiply(const Key& a, const Key& b) const override {
        Key c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
        if (degree(c) > top_) return {};
        return {{c, 1}};
    }
    std::vector<std::vector<Key>> basis() const override { throw Error("formal ring has no finite basis listing"); }
    Key variable(const std::string& n) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == n) {
                Key k(names_.size(), 0);
                k[i] = 1;
                return k;
            }
        throw Error("no formal variable '" + n + "'");
    }
    const std::vector<std::string>& names() const { return names_; }

private:
    std::vector<std::string> names_;
    std::vector<int> deg_;
    int top_;
};

/// Tensor product of factor rings, truncated at a total degree.
class Ring {
public:
    Ring(std::vector<std::shared_ptr<const FactorRing>> fs, int top) : factors_(std::move(fs)), top_(top) {
        std::size_t off = 0;
        for (auto& f : factors_) {
            offsets_.push_back(off);
            off += f->width();
        }
        width_ = off;
    }
    int top() const { return top_; }
    std::size_t width() const { return width_; }
    const std::vector<std::shared_ptr<const FactorRing>>& factors() const { return factors_; }

    Key slice(const Key& k, std::size_t f) const {
        return Key(k.begin() + static_cast<long>(offsets_[f]), k.begin() + static_cast<long>(offsets_[f] + factors_[f]->width()));
    }
    int degree(const Key& k) const {
        int d = 0;
        for (std::size_t f = 0; f < factors_.size(); ++f) d += factors_[f]->degree(slice(k, f));
        return d;
    }
    Key one() const {
        Key k;
        for (auto& f : factors_) {
            auto o = f->one();
            k.insert(k.end(), o.begin(), o.end());
        }
        return k;
    }
    /// Embeds a factor key into the product (other factors at 1).
    Key embed(std::size_t f, const Key& local) const {
        Key k = one();
        std::copy(local.begin(), local.end(), k.begin() + static_cast<long>(offsets_[f]));
        return k;
    }
    std::optional<Key> point() const {
        Key k;
        for (auto& f : factors_) {
            auto p = f->point();
            if (!p) return std::nullopt;
            k.insert(k.end(), p->begin(), p->end());
        }
        return k;
    }
    Terms multiply(const Key& a, const Key& b) const {
        if (degree(a) + degree(b) > top_) return {};
        Terms acc{{Key{}, 1}};
        for (std::size_t f = 0; f < factors_.size(); ++f) {
            auto part = factors_[f]->multiply(slice(a, f), slice(b, f));
            if (part.empty()) return {};
            Terms next;
            for (auto& [k1, c1] : acc)
                for (auto& [k2, c2] : part) {
                    Key k = k1;
                    k.insert(k.end(), k2.begin(), k2.end());
                    next.emplace_back(std::move(k), c1 * c2);
                }
            acc = std::move(next);
        }
        return acc;
    }

private:
    std::vector<std::shared_ptr<const FactorRing>> factors_;
    std::vector<std::size_t> offsets_;
    std::size_t width_ = 0;
    int top_;
};

/// Element of a Ring: sparse exact-rational combination of basis keys.
class ChowClass {
public:
    explicit ChowClass(std::shared_ptr<const Ring> r) : ring_(std::move(r)) {}
    ChowClass(std::shared_ptr<const Ring> r, const Q& c) : ring_(std::move(r)) {
        if (c != 0) t_[ring_->one()] = c;
    }
    ChowClass(std::shared_ptr<const Ring> r, const Key& k, const Q& c) : ring_(std::move(r)) {
        if (c != 0 && ring_->degree(k) <= ring_->top()) t_[k] = c;
    }

    const std::shared_ptr<const Ring>& ring() const { return ring_; }
    const std::map<Key, Q>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add(const Key& k, const Q& c) {
        if (c == 0) return;
        Q& x = t_[k];
        x += c;
        if (x == 0) t_.erase(k);
    }
    ChowClass& operator+=(const ChowClass& o) {
        for (auto& [k, c] : o.t_) add(k, c);
        return *this;
    }
    ChowClass& operator-=(const ChowClass& o) {
        for (auto& [k, c] : o.t_) add(k, -c);
        return *this;
    }
    friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
    friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
    friend ChowClass operator*(const Q& s, ChowClass a) {
        if (s == 0) return ChowClass(a.ring_);
        for (auto& [k, c] : a.t_) c *= s;
        return a;
    }
    friend ChowClass operator*(const ChowClass& a, const ChowClass& b) {
        ChowClass r(a.ring_);
        for (auto& [ka, ca] : a.t_)
            for (auto& [kb, cb] : b.t_)
                for (auto& [k, c] : a.ring_->multiply(ka, kb)) r.add(k, ca * cb * c);
        return r;
    }
    bool operator==(const ChowClass& o) const { return t_ == o.t_; }

    ChowClass component(int d) const {
        ChowClass r(ring_);
        for (auto& [k, c] : t_)
            if (ring_->degree(k) == d) r.t_[k] = c;
        return r;
    }
    /// Degree-k part scaled by s^k (Adams operation when s is an integer).
    ChowClass adams(long s) const {
        ChowClass r(ring_);
        for (auto& [k, c] : t_) {
            Q f = 1;
            for (int i = 0; i < ring_->degree(k); ++i) f *= s;
            r.add(k, c * f);
        }
        return r;
    }
    Q constant() const {
        auto it = t_.find(ring_->one());
        return it == t_.end() ? Q(0) : it->second;
    }
    std::string str() const {
        std::string s;
        for (auto& [k, c] : t_) {
            s += (s.empty() ? "" : " + ") + c.get_str() + "*[";
            for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
            s += "]";
        }
        return s.empty() ? "0" : s;
    }

private:
    std::shared_ptr<const Ring> ring_;
    std::map<Key, Q> t_;
};

/// Integral of the top-degree part; throws when the class has components below the top degree.
inline Q integrate(const ChowClass& c) {
    auto pt = c.ring()->point();
    if (!pt) throw Error("integrate: ring has no fundamental class");
    for (auto& [k, v] : c.terms())
        if (c.ring()->degree(k) != c.ring()->top()) throw Error("integrate: class not concentrated in top degree");
    auto it = c.terms().find(*pt);
    return it == c.terms().end() ? Q(0) : it->second;
}

/// exp and log of series with nilpotent argument.
inline ChowClass series_exp(const ChowClass& y) {
    ChowClass sum(y.ring(), Q(1)), term(y.ring(), Q(1));
    for (int n = 1; n <= y.ring()->top(); ++n) {
        term = Q(1, n) * (term * y);
        if (term.is_zero()) break;
        sum += term;
    }
    return sum;
}

inline ChowClass series_inverse(const ChowClass& c) {
    if (c.constant() != 1) throw Error("series_inverse: constant term must be 1");
    ChowClass n = c - ChowClass(c.ring(), Q(1));
    ChowClass sum(c.ring(), Q(1)), term(c.ring(), Q(1));
    for (int k = 1; k <= c.ring()->top(); ++k) {
        term = Q(-1) * (term * n);
        if (term.is_zero()) break;
        sum += term;
    }
    return sum;
}

/// Chern data of the generators appearing in bundle expressions.
struct ChernContext {
    std::shared_ptr<const Ring> ring;
    std::map<std::string, ChowClass> total;  // generator or line-symbol name -> total Chern class
    std::map<std::string, long long> ranks;

    ChowClass c1_of_symbol(const std::string& name) const {
        auto it = total.find(name);
        if (it == total.end()) throw Error("unresolvable generator '" + name + "'");
        return it->second.component(1);
    }
};

/// Chern character of a bundle from its total Chern class (Newton identities).
inline ChowClass ch_from_total(const ChowClass& c, long long rank) {
    const int top = c.ring()->top();
    std::vector<ChowClass> e, p;
    for (int k = 0; k <= top; ++k) e.push_back(c.component(k));
    p.push_back(ChowClass(c.ring()));
    ChowClass ch(c.ring(), Q(static_cast<long>(rank)));
    Q fact = 1;
    for (int k = 1; k <= top; ++k) {
        ChowClass pk = Q((k % 2 == 1) ? k : -k) * e[static_cast<std::size_t>(k)];
        for (int i = 1; i < k; ++i) {
            const int sign = ((k - 1 + i) % 2 == 0) ? 1 : -1;
            pk += Q(sign) * (e[static_cast<std::size_t>(k - i)] * p[static_cast<std::size_t>(i)]);
        }
        p.push_back(pk);
        fact *= k;
        ch += Q(1) / fact * pk;
    }
    return ch;
}

/// Total Chern class from a Chern character: c = exp(sum (-1)^{k-1} (k-1)! ch_k).
inline ChowClass total_from_ch(const ChowClass& ch) {
    ChowClass y(ch.ring());
    Q fact = 1;
    for (int k = 1; k <= ch.ring()->top(); ++k) {
        if (k > 1) fact *= (k - 1);
        y += Q(k % 2 == 1 ? 1 : -1) * fact * ch.component(k);
    }
    return series_exp(y);
}

namespace detail {

inline ChowClass line_ch(const LineClass& c, const ChernContext& ctx) {
    ChowClass c1(ctx.ring);
    for (auto& [name, e] : c.exponents()) c1 += e * ctx.c1_of_symbol(name);
    return series_exp(c1);
}

/// Determinant of a square matrix of ring elements by expansion over column subsets.
inline ChowClass ring_det(const std::vector<std::vector<ChowClass>>& m, const std::shared_ptr<const Ring>& ring) {
    const std::size_t n = m.size();
    if (n == 0) return ChowClass(ring, Q(1));
    std::map<unsigned, ChowClass> prev;
    prev.emplace(0u, ChowClass(ring, Q(1)));
    for (std::size_t row = 0; row < n; ++row) {
        std::map<unsigned, ChowClass> next;
        for (auto& [mask, val] : prev) {
            int used_after = 0;
            for (std::size_t col = n; col-- > 0;) {
                if (mask & (1u << col)) {
                    ++used_after;
                    continue;
                }
                // sign: number of used columns greater than col
                const Q sign = (used_after % 2 == 0) ? 1 : -1;
                auto term = sign * (val * m[row][col]);
                auto [it, fresh] = next.try_emplace(mask | (1u << col), term);
                if (!fresh) it->second += term;
            }
        }
        prev = std::move(next);
    }
    return prev.begin()->second;
}

}  // namespace detail

/// Chern character of a bundle expression, truncated at the ring's top degree.
inline ChowClass chern_character(const BundleExpr& e, const ChernContext& ctx) {
    using K = BundleExpr::Kind;
    const auto& n = e.node();
    auto rec = [&](const BundleExpr& x) { return chern_character(x, ctx); };
    const auto& R = ctx.ring;
    switch (n.kind) {
        case K::Gen: {
            if (n.rank == 0) return ChowClass(R);
            auto it = ctx.total.find(n.name);
            if (it == ctx.total.end()) throw Error("unresolvable generator '" + n.name + "'");
            if (auto r = ctx.ranks.find(n.name); r != ctx.ranks.end() && r->second != n.rank)
                throw Error("generator '" + n.name + "' used with rank " + std::to_string(n.rank) + ", expected " + std::to_string(r->second));
            return ch_from_total(it->second, n.rank);
        }
        case K::Line: return detail::line_ch(n.cls, ctx);
        case K::Dual: return rec(n.kids[0]).adams(-1);
        case K::Sum: {
            ChowClass s(R);
            for (auto& x : n.kids) s += rec(x);
            return s;
        }
        case K::Minus: return rec(n.kids[0]) - rec(n.kids[1]);
        case K::Tensor: {
            ChowClass s(R, Q(1));
            for (auto& x : n.kids) s = s * rec(x);
            return s;
        }
        case K::Twist: return rec(n.kids[0]) * detail::line_ch(n.cls, ctx);
        case K::Wedge:
        case K::Sym: {
            const ChowClass base = rec(n.kids[0]);
            std::vector<ChowClass> psi{ChowClass(R)};
            for (int j = 1; j <= n.k; ++j) psi.push_back(base.adams(j));
            std::vector<ChowClass> pw{ChowClass(R, Q(1))};
            for (int m = 1; m <= n.k; ++m) {
                ChowClass acc(R);
                for (int j = 1; j <= m; ++j) {
                    const Q sign = (n.kind == K::Wedge && j % 2 == 0) ? -1 : 1;
                    acc += sign * (psi[static_cast<std::size_t>(j)] * pw[static_cast<std::size_t>(m - j)]);
                }
                pw.push_back(Q(1, m) * acc);
            }
            return pw.back();
        }
        case K::Schur: {
            // Jacobi-Trudi in whichever of h or e gives the smaller determinant.
            const Partition& lam = n.lambda;
            const Partition conj = conjugate(lam);
            const bool use_e = conj.length() < lam.length();
            const Partition& p = use_e ? conj : lam;
            if (p.empty()) return ChowClass(R, Q(1));
            const int maxk = p[0] + p.length();
            std::vector<ChowClass> pw;
            for (int k = 0; k <= maxk; ++k) {
                auto node = use_e ? BundleExpr::wedge(k, n.kids[0]) : BundleExpr::sym(k, n.kids[0]);
                pw.push_back(k == 0 ? ChowClass(R, Q(1)) : rec(node));
            }
            const auto len = static_cast<std::size_t>(p.length());
            std::vector<std::vector<ChowClass>> m(len, std::vector<ChowClass>(len, ChowClass(R)));
            for (std::size_t i = 0; i < len; ++i)
                for (std::size_t j = 0; j < len; ++j) {
                    const int idx = p[i] - static_cast<int>(i) + static_cast<int>(j);
                    if (idx >= 0 && idx <= maxk) m[i][j] = pw[static_cast<std::size_t>(idx)];
                }
            return detail::ring_det(m, R);
        }
    }
    throw Error("chern_character: unknown node");
}

inline ChowClass chern_class(const BundleExpr& e, const ChernContext& ctx) {
    if (e.kind() == BundleExpr::Kind::Gen) {
        if (auto it = ctx.total.find(e.node().name); it != ctx.total.end()) return it->second;
    }
    return total_from_ch(chern_character(e, ctx));
}

// ---------------------------------------------------------------------------
// Catalogued spaces.

/// Chow ring of an ambient product together with the Chern data of its tautological bundles.
struct SpaceChow {
    SpaceDescriptor space;
    ChernContext ctx;
    std::vector<BundleExpr> tangent_parts;  // tangent bundle of each factor
    ChowClass hyperplane(std::size_t i) const { return ctx.c1_of_symbol(odl::hyperplane(i)); }
};

inline SpaceChow chow_ring(const SpaceDescriptor& s) {
    std::vector<std::shared_ptr<const FactorRing>> fs;
    int top = 0;
    for (auto& f : s.factors) {
        switch (f.kind) {
            case Factor::Kind::Proj:
            case Factor::Kind::Grass: fs.push_back(std::make_shared<GrassRing>(f.k, f.n)); break;
            case Factor::Kind::Quadric: fs.push_back(std::make_shared<QuadricRing>(f.n - 2)); break;
            case Factor::Kind::IsoGrass:
                if (f.k == 2 && f.n == 4) {
                    fs.push_back(std::make_shared<QuadricRing>(3));
                    break;
                }
                throw Error("Chow ring of " + f.name() + " is not supported");
            case Factor::Kind::BiSympGrass: throw Error("Chow ring of " + f.name() + " is not supported");
        }
        top += static_cast<int>(f.dim());
    }
    auto ring = std::make_shared<const Ring>(fs, top);
    SpaceChow sc{s, ChernContext{ring, {}, {}}, {}};
    for (std::size_t i = 0; i < s.factors.size(); ++i) {
        const auto& f = s.factors[i];
        const std::string u = "U" + std::to_string(i + 1), q = "Q" + std::to_string(i + 1);
        ChowClass cu(ring), h(ring);
        const BundleExpr U = BundleExpr::gen(u, f.rank_u()), Qb = BundleExpr::gen(q, f.rank_q());
        if (auto g = std::dynamic_pointer_cast<const GrassRing>(fs[i])) {
            for (int j = 0; j <= f.k; ++j) cu.add(ring->embed(i, g->special(j, true)), Q(j % 2 == 0 ? 1 : -1));
            h = ChowClass(ring, ring->embed(i, g->special(1, false)), 1);
            sc.tangent_parts.push_back(BundleExpr::tensor({BundleExpr::dual(U), Qb}));
        } else {
            h = ChowClass(ring, ring->embed(i, {1, 0}), 1);
            cu = ChowClass(ring, Q(1)) - h;
            if (f.kind == Factor::Kind::IsoGrass) {
                cu += ChowClass(ring, ring->embed(i, {2, 0}), 1);  // c2(U) = line class on IGr(2,4)
                sc.tangent_parts.push_back(BundleExpr::sym(2, BundleExpr::dual(U)));
            } else {
                sc.tangent_parts.push_back(BundleExpr::minus(BundleExpr::tensor({BundleExpr::dual(U), Qb}),
                                                             BundleExpr::tensor({BundleExpr::dual(U), BundleExpr::dual(U)})));
            }
        }
        sc.ctx.total.emplace(u, cu);
        sc.ctx.total.emplace(q, series_inverse(cu));
        sc.ctx.total.emplace(odl::hyperplane(i + 1), ChowClass(ring, Q(1)) + h);
        sc.ctx.ranks[u] = f.rank_u();
        sc.ctx.ranks[q] = f.rank_q();
    }
    return sc;
}

/// Class of the complete-intersection slices (product of their divisor classes).
inline ChowClass slice_class(const SpaceChow& sc) {
    ChowClass c(sc.ctx.ring, Q(1));
    for (auto& sl : sc.space.slices) {
        ChowClass d(sc.ctx.ring);
        for (std::size_t i = 0; i < sl.size(); ++i) d += Q(sl[i]) * sc.hyperplane(i + 1);
        c = c * d;
    }
    return c;
}

/// Integral over the (sliced) space of a class given on the ambient product.
inline Q integrate_on(const SpaceChow& sc, const ChowClass& c) {
    return integrate((c * slice_class(sc)).component(sc.ctx.ring->top()));
}

inline BundleExpr tangent_bundle(const SpaceChow& sc) {
    BundleExpr t = BundleExpr::sum(sc.tangent_parts);
    if (sc.space.slices.empty()) return t;
    std::vector<BundleExpr> normals;
    for (auto& sl : sc.space.slices) {
        LineClass c;
        for (std::size_t i = 0; i < sl.size(); ++i) c.add(odl::hyperplane(i + 1), Q(sl[i]));
        normals.push_back(BundleExpr::line(c));
    }
    return BundleExpr::minus(t, BundleExpr::sum(normals));
}

/// Topological Euler characteristic of the zero locus of a regular section of f.
inline Z euler_char_zero_locus(const SpaceChow& sc, const BundleExpr& f) {
    const long long d = sc.space.dim();
    if (f.rank() > d) throw Error("euler_char_zero_locus: rank exceeds dimension");
    ChowClass cf = chern_class(f, sc.ctx);
    ChowClass ct = chern_class(tangent_bundle(sc), sc.ctx);
    ChowClass integrand = cf.component(static_cast<int>(f.rank())) * ct * series_inverse(cf);
    // keep the part of degree dim X (the slices raise it to the ambient top degree)
    Q v = integrate_on(sc, integrand.component(static_cast<int>(d)));
    if (!is_integer(v)) throw Error("euler_char_zero_locus: non-integral result " + v.get_str());
    return v.get_num();
}

/// Bernoulli numbers B_0..B_n (B_1 = -1/2).
inline std::vector<Q> bernoulli(int n) {
    std::vector<Q> b(static_cast<std::size_t>(n) + 1);
    b[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Q s = 0;
        for (int k = 0; k < m; ++k) s += Q(binomial(m + 1, k)) * b[static_cast<std::size_t>(k)];
        b[static_cast<std::size_t>(m)] = -s / Q(m + 1);
    }
    return b;
}

/// Todd class from a Chern character: exp(ch_1 / 2 - sum_k B_2k / (2k) ch_2k).
inline ChowClass todd_from_ch(const ChowClass& ch) {
    const int top = ch.ring()->top();
    auto b = bernoulli(top);
    ChowClass y = Q(1, 2) * ch.component(1);
    for (int k = 1; 2 * k <= top; ++k) y -= b[static_cast<std::size_t>(2 * k)] / Q(2 * k) * ch.component(2 * k);
    return series_exp(y);
}

/// chi(X, V) by Hirzebruch-Riemann-Roch.
inline Q hrr_euler(const SpaceChow& sc, const BundleExpr& v) {
    ChowClass td = todd_from_ch(chern_character(tangent_bundle(sc), sc.ctx));
    ChowClass integrand = chern_character(v, sc.ctx) * td;
    return integrate_on(sc, integrand.component(static_cast<int>(sc.space.dim())));
}

/// Holomorphic Euler characteristic chi(Z, O_Z) of the zero locus Z of a regular section of f.
inline Z holomorphic_euler_zero_locus(const SpaceChow& sc, const BundleExpr& f) {
    const long long d = sc.space.dim();
    if (f.rank() > d) throw Error("holomorphic_euler_zero_locus: rank exceeds dimension");
    ChowClass chf = chern_character(f, sc.ctx);
    ChowClass top = total_from_ch(chf).component(static_cast<int>(f.rank()));
    ChowClass td = todd_from_ch(chern_character(tangent_bundle(sc), sc.ctx)) * series_inverse(todd_from_ch(chf));
    Q v = integrate_on(sc, (top * td).component(static_cast<int>(d)));
    if (!is_integer(v)) throw Error("holomorphic_euler_zero_locus: non-integral result " + v.get_str());
    return v.get_num();
}

/// Formal pseudo-space: Chern classes e_1..e_r of abstract bundles and c_1 of line bundles.
struct FormalSpace {
    std::shared_ptr<const FormalRing> factor;
    ChernContext ctx;

    /// Polynomial string in the formal variables of a homogeneous class.
    std::string polynomial(const ChowClass& c) const {
        std::string s;
        for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) {
            const auto& [k, v] = *it;
            std::string mono;
            for (std::size_t i = 0; i < k.size(); ++i)
                if (k[i] > 0) mono += (mono.empty() ? "" : "*") + factor->names()[i] + (k[i] > 1 ? "^" + std::to_string(k[i]) : "");
            std::string coef = v.get_str();
            if (mono.empty()) {
                s += (s.empty() ? "" : (v > 0 ? " + " : " - ")) + (s.empty() ? coef : Q(abs(v)).get_str());
                continue;
            }
            const Q a = abs(v);
            std::string mag = a == 1 ? "" : a.get_str() + "*";
            if (s.empty()) s = (v < 0 ? "-" : "") + mag + mono;
            else s += (v > 0 ? " + " : " - ") + mag + mono;
        }
        return s.empty() ? "0" : s;
    }
};

/// bundles: (name, rank) for each abstract bundle; lines: names of line generators.
/// Variables are named lower-case name + index (e1.., f1..) and lower-case line name (l).
inline FormalSpace formal_space(const std::vector<std::pair<std::string, int>>& bundles, const std::vector<std::string>& lines, int top) {
    std::vector<std::string> names;
    std::vector<int> degs;
    auto lower = [](std::string s) {
        for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        return s;
    };
    for (auto& [n, r] : bundles)
        for (int i = 1; i <= r; ++i) {
            names.push_back(lower(n) + std::to_string(i));
            degs.push_back(i);
        }
    for (auto& l : lines) {
        names.push_back(lower(l));
        degs.push_back(1);
    }
    auto fr = std::make_shared<const FormalRing>(names, degs, top);
    auto ring = std::make_shared<const Ring>(std::vector<std::shared_ptr<const FactorRing>>{fr}, top);
    FormalSpace fsp{fr, ChernContext{ring, {}, {}}};
    for (auto& [n, r] : bundles) {
        ChowClass c(ring, Q(1));
        for (int i = 1; i <= r; ++i) c.add(fr->variable(lower(n) + std::to_string(i)), 1);
        fsp.ctx.total.emplace(n, c);
        fsp.ctx.ranks[n] = r;
    }
    for (auto& l : lines) fsp.ctx.total.emplace(l, ChowClass(ring, Q(1)) + ChowClass(ring, fr->variable(lower(l)), 1));
    return fsp;
}

/// Univariate specialisation: each abstract bundle splits into lines with classes a_i t.
inline ChernContext specialised_context(const std::map<std::string, std::vector<long>>& roots, int top) {
    auto fr = std::make_shared<const FormalRing>(std::vector<std::string>{"t"}, std::vector<int>{1}, top);
    auto ring = std::make_shared<const Ring>(std::vector<std::shared_ptr<const FactorRing>>{fr}, top);
    ChernContext ctx{ring, {}, {}};
    for (auto& [name, rs] : roots) {
        ChowClass c(ring, Q(1));
        for (long a : rs) c = c * (ChowClass(ring, Q(1)) + ChowClass(ring, Key{1}, Q(a)));
        ctx.total.emplace(name, c);
        ctx.ranks[name] = static_cast<long long>(rs.size());
    }
    return ctx;
}

/// Lowest-degree term of the alternating Chern character of a resolution; checks that
/// the components below the codimension vanish.
inline ChowClass degeneracy_class(const std::vector<BundleExpr>& terms, int codim, const ChernContext& ctx) {
    if (codim > ctx.ring->top()) throw Error("degeneracy_class: ring truncated below the codimension");
    ChowClass alt(ctx.ring);
    for (std::size_t i = 0; i < terms.size(); ++i) {
        auto c = chern_character(terms[i], ctx);
        if (i % 2 == 0) alt += c;
        else alt -= c;
    }
    for (int d = 0; d < codim; ++d)
        if (!alt.component(d).is_zero())
            throw Error("degeneracy_class: alternating Chern character has a nonzero component in degree " + std::to_string(d));
    return alt.component(codim);
}

/// Class of the locus where a map E -> F has rank <= r: the Giambelli determinant
/// det[c_{f-r+j-i}(F - E)] of size e - r.
inline ChowClass thom_porteous(const BundleExpr& e, const BundleExpr& f, long long r, const ChernContext& ctx) {
    const long long a = e.rank() - r, b = f.rank() - r;
    if (r < 0 || a <= 0 || b <= 0) throw Error("thom_porteous: need 0 <= r < min(rank E, rank F)");
    if (a * b > ctx.ring->top()) throw Error("thom_porteous: ring truncated below the codimension");
    const ChowClass c = chern_class(f, ctx) * series_inverse(chern_class(e, ctx));
    std::vector<std::vector<ChowClass>> m(static_cast<std::size_t>(a));
    for (long long i = 0; i < a; ++i)
        for (long long j = 0; j < a; ++j) {
            const long long d = b + j - i;
            m[static_cast<std::size_t>(i)].push_back(d < 0 ? ChowClass(ctx.ring) : c.component(static_cast<int>(d)));
        }
    return detail::ring_det(m, ctx.ring).component(static_cast<int>(a * b));
}

}  // namespace odl

#endif
