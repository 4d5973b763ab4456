// Independent oracles shared by the unit tests and the acceptance binary. None of them
// calls into the code paths they are used to check.
#pragma once

#include "odl/bott.hpp"
#include "odl/bundles.hpp"
#include "odl/chow.hpp"

#include <array>
#include <bit>
#include <functional>
#include <random>

namespace odl::oracle {

/// Chern roots as integer combinations of the basic roots e1 e2 | f1 f2 f3 | l.
using Root = std::array<long, 6>;
using Roots = std::vector<Root>;

inline Root add(const Root& a, const Root& b) {
    Root r;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

/// Semistandard tableaux of shape lambda with entries < n, as content vectors.
inline void ssyt(const Partition& lam, int n, std::vector<std::vector<int>>& rows, std::size_t row, std::size_t col,
          std::vector<std::vector<int>>& out) {
    if (row == static_cast<std::size_t>(lam.length())) {
        std::vector<int> content(static_cast<std::size_t>(n), 0);
        for (auto& r : rows)
            for (int x : r) ++content[static_cast<std::size_t>(x)];
        out.push_back(content);
        return;
    }
    if (col == static_cast<std::size_t>(lam[row])) {
        ssyt(lam, n, rows, row + 1, 0, out);
        return;
    }
    int lo = col > 0 ? rows[row][col - 1] : 0;
    if (row > 0) lo = std::max(lo, rows[row - 1][col] + 1);
    for (int x = lo; x < n; ++x) {
        rows[row][col] = x;
        ssyt(lam, n, rows, row, col + 1, out);
    }
}

/// Splitting-principle oracle, independent of the library's determinant and Chern code.
struct SplittingOracle {
    Roots gen_e{Root{1, 0, 0, 0, 0, 0}, Root{0, 1, 0, 0, 0, 0}};
    Roots gen_f{Root{0, 0, 1, 0, 0, 0}, Root{0, 0, 0, 1, 0, 0}, Root{0, 0, 0, 0, 1, 0}};
    Root l{0, 0, 0, 0, 0, 1};

    Roots k_subsets(const Roots& xs, int k, bool repeat) const {
        Roots out;
        std::vector<std::size_t> idx;
        std::function<void(std::size_t)> go = [&](std::size_t start) {
            if (static_cast<int>(idx.size()) == k) {
                Root s{};
                for (auto i : idx) s = add(s, xs[i]);
                out.push_back(s);
                return;
            }
            for (std::size_t i = start; i < xs.size(); ++i) {
                idx.push_back(i);
                go(repeat ? i : i + 1);
                idx.pop_back();
            }
        };
        go(0);
        return out;
    }

    Roots roots(const BundleExpr& e) const {
        using K = BundleExpr::Kind;
        const auto& n = e.node();
        switch (n.kind) {
            case K::Gen:
                if (n.name == "E") return gen_e;
                if (n.name == "F") return gen_f;
                return {l};
            case K::Line: {
                Root r{};
                r[5] = to_ll(n.cls["L"]);
                return {r};
            }
            case K::Dual: {
                Roots r = roots(n.kids[0]);
                for (auto& x : r)
                    for (auto& c : x) c = -c;
                return r;
            }
            case K::Sum: {
                Roots r;
                for (auto& k : n.kids)
                    for (auto& x : roots(k)) r.push_back(x);
                return r;
            }
            case K::Tensor: {
                Roots r{Root{}};
                for (auto& k : n.kids) {
                    Roots next;
                    for (auto& a : r)
                        for (auto& b : roots(k)) next.push_back(add(a, b));
                    r = next;
                }
                return r;
            }
            case K::Wedge: return k_subsets(roots(n.kids[0]), n.k, false);
            case K::Sym: return k_subsets(roots(n.kids[0]), n.k, true);
            case K::Schur: {
                const Roots base = roots(n.kids[0]);
                std::vector<std::vector<int>> rows;
                for (int i = 0; i < n.lambda.length(); ++i) rows.emplace_back(static_cast<std::size_t>(n.lambda[static_cast<std::size_t>(i)]), 0);
                std::vector<std::vector<int>> contents;
                ssyt(n.lambda, static_cast<int>(base.size()), rows, 0, 0, contents);
                Roots r;
                for (auto& c : contents) {
                    Root s{};
                    for (std::size_t i = 0; i < c.size(); ++i)
                        for (int m = 0; m < c[i]; ++m) s = add(s, base[i]);
                    r.push_back(s);
                }
                return r;
            }
            case K::Twist: {
                Roots r = roots(n.kids[0]);
                for (auto& x : r) x[5] += to_ll(n.cls["L"]);
                return r;
            }
            case K::Minus: break;
        }
        throw Error("oracle: unsupported node");
    }
};

inline BundleExpr random_tree(std::mt19937& rng, int depth) {
    auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); };
    if (depth == 0 || pick(4) == 0) {
        switch (pick(4)) {
            case 0: return BundleExpr::gen("E", 2);
            case 1: return BundleExpr::gen("F", 3);
            case 2: return BundleExpr::gen("L", 1);
            default: return BundleExpr::line(LineClass::of("L", pick(5) - 2));
        }
    }
    for (;;) {
        BundleExpr out;
        const BundleExpr a = random_tree(rng, depth - 1);
        switch (pick(7)) {
            case 0: out = BundleExpr::dual(a); break;
            case 1: out = BundleExpr::sum({a, random_tree(rng, depth - 1)}); break;
            case 2: out = BundleExpr::tensor({a, random_tree(rng, depth - 1)}); break;
            case 3: out = BundleExpr::wedge(1 + pick(3), a); break;
            case 4: out = BundleExpr::sym(1 + pick(2), a); break;
            case 5: {
                static const std::vector<Partition> shapes{{2, 1}, {1, 1}, {2}, {2, 2}, {3, 1}};
                const Partition& lam = shapes[static_cast<std::size_t>(pick(5))];
                if (lam.length() > a.rank()) continue;
                out = BundleExpr::schur(lam, a);
                break;
            }
            default: out = BundleExpr::twist(a, LineClass::of("L", pick(5) - 2)); break;
        }
        if (out.rank() >= 1 && out.rank() <= 6) return out;
    }
}

inline Q det_q(QMat m) {
    const std::size_t n = m.size();
    Q d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const Q f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return d;
}

/// Pairing matrix between complementary degrees has determinant +-1; returns the first failing degree or -1.
inline int first_non_unimodular_degree(const std::shared_ptr<const FactorRing>& fr) {
    const int top = fr->dim();
    auto ring = std::make_shared<const Ring>(std::vector<std::shared_ptr<const FactorRing>>{fr}, top);
    const auto basis = fr->basis();
    for (int d = 0; d <= top; ++d) {
        const auto& lo = basis[static_cast<std::size_t>(d)];
        const auto& hi = basis[static_cast<std::size_t>(top - d)];
        if (lo.size() != hi.size()) return d;
        QMat m(lo.size(), QVec(hi.size()));
        for (std::size_t i = 0; i < lo.size(); ++i)
            for (std::size_t j = 0; j < hi.size(); ++j) m[i][j] = integrate(ChowClass(ring, lo[i], 1) * ChowClass(ring, hi[j], 1));
        if (abs(det_q(m)) != 1) return d;
    }
    return -1;
}

/// Class of {rank E -> F <= r} by localisation on the kernel Grassmannian, with Chern roots
/// a (of E) and b (of F) specialised to integers: the coefficient of t^{(e-r)(f-r)}.
inline Q porteous_localisation(const std::vector<long>& a, const std::vector<long>& b, int r) {
    const int e = static_cast<int>(a.size()), k = e - r;
    Q total = 0;
    for (unsigned mask = 0; mask < (1u << e); ++mask) {
        if (std::popcount(mask) != k) continue;
        Q num = 1, den = 1;
        for (int i = 0; i < e; ++i) {
            if (!(mask & (1u << i))) continue;
            for (long bj : b) num *= Q(bj - a[static_cast<std::size_t>(i)]);
            for (int j = 0; j < e; ++j)
                if (!(mask & (1u << j))) den *= Q(a[static_cast<std::size_t>(j)] - a[static_cast<std::size_t>(i)]);
        }
        total += num / den;
    }
    return total;
}

/// GL_{n+1} weight of S_a Q (x) U^b on P^n (Q part first).
inline std::vector<long long> pn_weight(const std::vector<int>& a, int b) {
    std::vector<long long> w(a.begin(), a.end());
    w.push_back(b);
    return w;
}

/// Nonincreasing sequences of length n with entries in [lo, hi].
inline void sequences(int n, int lo, int hi, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == n) {
        out.push_back(cur);
        return;
    }
    const int top = cur.empty() ? hi : cur.back();
    for (int x = lo; x <= top; ++x) {
        cur.push_back(x);
        sequences(n, lo, hi, cur, out);
        cur.pop_back();
    }
}

inline std::string bundle_text(const std::vector<int>& a, int b) {
    std::string p;
    for (int x : a)
        if (x) p += (p.empty() ? "" : " ") + std::to_string(x);
    const std::string q = p.empty() ? "(trivial 1)" : "(schur (" + p + ") Q)";
    return "(tensor " + q + " (O " + std::to_string(-b) + "))";
}

}  // namespace odl::oracle
