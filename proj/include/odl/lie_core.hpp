#ifndef ODL_LIE_CORE_HPP
#define ODL_LIE_CORE_HPP

#include "odl/core.hpp"

#include <algorithm>
#include <compare>
#include <mutex>
#include <string>
#include <vector>

namespace odl {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// A simple Lie type; constructed only through make_type so the rank is valid.
struct LieType {
    Family family = Family::A;
    int rank = 1;

    auto operator<=>(const LieType&) const = default;
    std::string name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }
};

inline LieType make_type(Family f, int rank) {
    bool ok = false;
    switch (f) {
        case Family::A: ok = rank >= 1; break;
        case Family::B: ok = rank >= 2; break;
        case Family::C: ok = rank >= 2; break;
        case Family::D: ok = rank >= 3; break;
        case Family::E: ok = rank >= 6 && rank <= 8; break;
        case Family::F: ok = rank == 4; break;
        case Family::G: ok = rank == 2; break;
    }
    if (!ok) throw Error("invalid Lie type " + std::string(1, static_cast<char>(f)) + std::to_string(rank));
    return {f, rank};
}

/// Parses "E6", "D5", "C3", ...
inline LieType parse_type(const std::string& s) {
    if (s.size() < 2) throw Error("bad Lie type '" + s + "'");
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (std::string("ABCDEFG").find(c) == std::string::npos) throw Error("bad Lie family in '" + s + "'");
    int r = 0;
    try {
        r = std::stoi(s.substr(1));
    } catch (...) {
        throw Error("bad Lie rank in '" + s + "'");
    }
    return make_type(static_cast<Family>(c), r);
}

/// Size of the epsilon basis used for a type.
inline std::size_t ambient_dim(LieType t) {
    switch (t.family) {
        case Family::A: return static_cast<std::size_t>(t.rank) + 1;
        case Family::B:
        case Family::C:
        case Family::D: return static_cast<std::size_t>(t.rank);
        case Family::E: return 8;
        case Family::F: return 4;
        case Family::G: return 3;
    }
    return 0;
}

struct Weight {
    LieType type;
    QVec coords;

    bool operator==(const Weight& o) const { return type == o.type && coords == o.coords; }
};

/// Simple roots, Bourbaki numbering.
inline std::vector<QVec> simple_roots(LieType t) {
    const std::size_t m = ambient_dim(t);
    const int n = t.rank;
    auto e = [m](std::initializer_list<std::pair<std::size_t, Q>> entries) {
        QVec v(m, Q(0));
        for (auto& [i, c] : entries) v[i] = c;
        return v;
    };
    std::vector<QVec> s;
    const Q h(1, 2);
    switch (t.family) {
        case Family::A:
            for (int i = 0; i < n; ++i) s.push_back(e({{i, 1}, {i + 1, -1}}));
            break;
        case Family::B:
            for (int i = 0; i + 1 < n; ++i) s.push_back(e({{i, 1}, {i + 1, -1}}));
            s.push_back(e({{n - 1, 1}}));
            break;
        case Family::C:
            for (int i = 0; i + 1 < n; ++i) s.push_back(e({{i, 1}, {i + 1, -1}}));
            s.push_back(e({{n - 1, 2}}));
            break;
        case Family::D:
            for (int i = 0; i + 1 < n; ++i) s.push_back(e({{i, 1}, {i + 1, -1}}));
            s.push_back(e({{n - 2, 1}, {n - 1, 1}}));
            break;
        case Family::E: {
            QVec a1(8, -h);
            a1[0] = h;
            a1[7] = h;
            s.push_back(a1);
            s.push_back(e({{0, 1}, {1, 1}}));
            for (int i = 2; i < n; ++i) s.push_back(e({{static_cast<std::size_t>(i - 1), 1}, {static_cast<std::size_t>(i - 2), -1}}));
            break;
        }
        case Family::F:
            s.push_back(e({{1, 1}, {2, -1}}));
            s.push_back(e({{2, 1}, {3, -1}}));
            s.push_back(e({{3, 1}}));
            s.push_back(e({{0, h}, {1, -h}, {2, -h}, {3, -h}}));
            break;
        case Family::G:
            s.push_back(e({{0, 1}, {1, -1}}));
            s.push_back(e({{0, -2}, {1, 1}, {2, 1}}));
            break;
    }
    return s;
}

inline QVec coroot(const QVec& a) { return Q(2) / dot(a, a) * a; }

struct RootSystem {
    LieType type;
    std::vector<QVec> simple;
    std::vector<QVec> positive;
    std::vector<std::vector<int>> coeffs;  // simple-root coordinates of each positive root
    std::vector<QVec> fundamental;         // omega_1 .. omega_n
    QVec rho;
};

namespace detail {

inline RootSystem build_root_system(LieType t) {
    RootSystem rs;
    rs.type = t;
    rs.simple = simple_roots(t);
    const std::size_t n = rs.simple.size(), m = ambient_dim(t);
    std::vector<QVec> co;
    for (auto& a : rs.simple) co.push_back(coroot(a));

    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<int> c(n, 0);
        c[i] = 1;
        index[c] = rs.positive.size();
        rs.positive.push_back(rs.simple[i]);
        rs.coeffs.push_back(c);
    }
    // Grow by height using root strings: beta + alpha_i is a root iff p - <beta, alpha_i^v> > 0.
    for (std::size_t k = 0; k < rs.positive.size(); ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<int> c = rs.coeffs[k];
            int p = 0;
            std::vector<int> down = c;
            while (true) {
                down[i] -= 1;
                if (index.count(down) == 0) break;
                ++p;
            }
            const Q pairing = dot(rs.positive[k], co[i]);
            if (p - pairing <= 0) continue;
            c[i] += 1;
            if (index.count(c)) continue;
            index[c] = rs.positive.size();
            rs.positive.push_back(rs.positive[k] + rs.simple[i]);
            rs.coeffs.push_back(c);
        }
    }

    // Fundamental weights: omega_i = sum_k (C^{-1})_{ik} alpha_k with C_{kj} = <alpha_k, alpha_j^v>.
    QMat cartan(n, QVec(n));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) cartan[k][j] = dot(rs.simple[k], co[j]);
    QMat inv = inverse(cartan);
    for (std::size_t i = 0; i < n; ++i) {
        QVec w(m, Q(0));
        for (std::size_t k = 0; k < n; ++k) w = w + inv[i][k] * rs.simple[k];
        rs.fundamental.push_back(w);
    }
    rs.rho = QVec(m, Q(0));
    for (auto& a : rs.positive) rs.rho = rs.rho + a;
    rs.rho = Q(1, 2) * rs.rho;
    return rs;
}

}  // namespace detail

/// Cached and immutable; safe to call from several threads.
inline const RootSystem& root_system(LieType t) {
    static std::mutex mu;
    static std::map<LieType, RootSystem> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(t);
    if (it == cache.end()) it = cache.emplace(t, detail::build_root_system(t)).first;
    return it->second;
}

inline std::vector<Weight> positive_roots(LieType t) {
    std::vector<Weight> out;
    for (auto& a : root_system(t).positive) out.push_back({t, a});
    return out;
}

inline Weight rho(LieType t) { return {t, root_system(t).rho}; }

inline Weight fundamental_weight(LieType t, int i) {
    if (i < 1 || i > t.rank) throw Error("fundamental weight index out of range for " + t.name());
    return {t, root_system(t).fundamental[static_cast<std::size_t>(i - 1)]};
}

/// Weight with the given Dynkin labels (a_1, ..., a_n).
inline Weight weight_from_labels(LieType t, const std::vector<int>& labels) {
    if (static_cast<int>(labels.size()) != t.rank) throw Error("expected " + std::to_string(t.rank) + " Dynkin labels");
    const auto& rs = root_system(t);
    QVec w(ambient_dim(t), Q(0));
    for (std::size_t i = 0; i < labels.size(); ++i) w = w + Q(labels[i]) * rs.fundamental[i];
    return {t, w};
}

inline std::vector<Q> dynkin_labels(const Weight& w) {
    std::vector<Q> out;
    for (auto& a : root_system(w.type).simple) out.push_back(dot(w.coords, coroot(a)));
    return out;
}

inline bool is_dominant_integral(const Weight& w) {
    for (auto& l : dynkin_labels(w))
        if (l < 0 || !is_integer(l)) return false;
    return true;
}

inline Z weyl_dim(const Weight& hw) {
    if (hw.coords.size() != ambient_dim(hw.type)) throw Error("weight has wrong number of coordinates");
    if (!is_dominant_integral(hw)) throw Error("weyl_dim: weight is not dominant integral");
    const auto& rs = root_system(hw.type);
    QVec shifted = hw.coords + rs.rho;
    Q num = 1, den = 1;
    for (auto& a : rs.positive) {
        num *= dot(shifted, a);
        den *= dot(rs.rho, a);
    }
    Q d = num / den;
    if (!is_integer(d)) throw Error("weyl_dim: non-integral result");
    return d.get_num();
}

inline Z weyl_dim(LieType t, const std::vector<int>& labels) { return weyl_dim(weight_from_labels(t, labels)); }

/// Index of G/P_i: pairing of the nilradical root sum with the coroot of alpha_i.
inline long long fano_index(LieType t, int node) {
    if (node < 1 || node > t.rank) throw Error("fano_index: invalid node " + std::to_string(node) + " for " + t.name());
    const auto& rs = root_system(t);
    const std::size_t i = static_cast<std::size_t>(node - 1);
    QVec sum(ambient_dim(t), Q(0));
    for (std::size_t k = 0; k < rs.positive.size(); ++k)
        if (rs.coeffs[k][i] > 0) sum = sum + rs.positive[k];
    return to_ll(dot(sum, coroot(rs.simple[i])));
}

/// Dimension of G/P_i, i.e. number of nilradical roots.
inline long long flag_dim(LieType t, int node) {
    const auto& rs = root_system(t);
    long long n = 0;
    for (auto& c : rs.coeffs)
        if (c[static_cast<std::size_t>(node - 1)] > 0) ++n;
    return n;
}

}  // namespace odl

#endif
