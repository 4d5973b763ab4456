#ifndef ODL_PARTITIONS_HPP
#define ODL_PARTITIONS_HPP

#include "odl/core.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace odl {

/// Weakly decreasing nonnegative parts, trailing zeros trimmed.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) throw Error("partition with negative part");
            if (i > 0 && parts_[i] > parts_[i - 1]) throw Error("partition parts must be weakly decreasing");
        }
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool empty() const { return parts_.empty(); }
    /// Part i (0-based), zero beyond the length.
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    auto operator<=>(const Partition&) const = default;

    std::string str() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
        os << ')';
        return os.str();
    }

private:
    std::vector<int> parts_;
};

inline Partition conjugate(const Partition& p) {
    std::vector<int> c(p.empty() ? 0 : static_cast<std::size_t>(p[0]), 0);
    for (int r : p.parts())
        for (int j = 0; j < r; ++j) ++c[static_cast<std::size_t>(j)];
    return Partition(std::move(c));
}

/// All partitions of n with at most max_len parts, each at most max_part.
inline std::vector<Partition> partitions_of(int n, int max_len, int max_part) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int cap) {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_len) return;
        for (int v = std::min(rem, cap); v >= 1; --v) {
            cur.push_back(v);
            rec(rem - v, v);
            cur.pop_back();
        }
    };
    if (n >= 0) rec(n, max_part);
    return out;
}

/// Partitions fitting in a rows x cols box, all sizes.
inline std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    for (int n = 0; n <= rows * cols; ++n)
        for (auto& p : partitions_of(n, rows, cols)) out.push_back(p);
    return out;
}

inline bool contains(const Partition& big, const Partition& small) {
    if (small.length() > big.length()) return false;
    for (std::size_t i = 0; i < static_cast<std::size_t>(small.length()); ++i)
        if (small[i] > big[i]) return false;
    return true;
}

/// Littlewood-Richardson coefficient c^nu_{lambda mu}: LR tableaux of shape nu/lambda and content mu.
inline long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() + mu.size() != nu.size()) return 0;
    if (!contains(nu, lambda) || !contains(nu, mu)) return 0;
    if (mu.empty()) return 1;
    // Cells in reading order: rows top to bottom, each row right to left.
    struct Cell { int r, c; };
    std::vector<Cell> cells;
    for (int r = 0; r < nu.length(); ++r)
        for (int c = nu[static_cast<std::size_t>(r)] - 1; c >= lambda[static_cast<std::size_t>(r)]; --c) cells.push_back({r, c});
    const int rows = nu.length();
    std::vector<std::vector<int>> fill(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r) fill[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(nu[static_cast<std::size_t>(r)]), 0);
    std::vector<int> count(static_cast<std::size_t>(mu.length()) + 1, 0);
    long long total = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == cells.size()) {
            ++total;
            return;
        }
        const auto [r, c] = cells[k];
        const auto ur = static_cast<std::size_t>(r), uc = static_cast<std::size_t>(c);
        int hi = mu.length();
        if (c + 1 < nu[ur]) hi = std::min(hi, fill[ur][uc + 1]);  // weakly increasing along the row
        int lo = 1;
        if (r > 0 && c >= lambda[ur - 1]) lo = fill[ur - 1][uc] + 1;  // strictly increasing down columns
        for (int v = lo; v <= hi; ++v) {
            const auto uv = static_cast<std::size_t>(v);
            if (count[uv] >= mu[uv - 1]) continue;
            if (v > 1 && count[uv] + 1 > count[uv - 1]) continue;  // lattice word condition
            ++count[uv];
            fill[ur][uc] = v;
            rec(k + 1);
            fill[ur][uc] = 0;
            --count[uv];
        }
    };
    rec(0);
    return total;
}

/// Expansion of s_lambda * s_mu restricted to at most max_len rows (max_len < 0: unrestricted).
inline std::vector<std::pair<Partition, long long>> lr_product(const Partition& a, const Partition& b, int max_len = -1) {
    std::vector<std::pair<Partition, long long>> out;
    const int n = a.size() + b.size();
    const int len = max_len < 0 ? a.length() + b.length() : max_len;
    const int width = a[0] + b[0];
    for (auto& nu : partitions_of(n, len, width)) {
        long long c = lr_coefficient(a, b, nu);
        if (c) out.emplace_back(nu, c);
    }
    return out;
}

/// dim S_lambda C^n via hook-content formula.
inline Z schur_dim(const Partition& lambda, long long n) {
    if (lambda.length() > n) return 0;
    const Partition conj = conjugate(lambda);
    Z num = 1, den = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[static_cast<std::size_t>(i)]; ++j) {
            num *= static_cast<long>(n + j - i);
            den *= static_cast<long>((lambda[static_cast<std::size_t>(i)] - j - 1) + (conj[static_cast<std::size_t>(j)] - i - 1) + 1);
        }
    return num / den;
}

/// dim of the GL_n module with highest weight w (weakly decreasing integers, negatives allowed).
inline Z gl_dim(const std::vector<int>& w) {
    if (w.empty()) return 1;
    const int shift = -std::min(0, *std::min_element(w.begin(), w.end()));
    std::vector<int> p(w);
    for (auto& x : p) x += shift;
    return schur_dim(Partition(p), static_cast<long long>(w.size()));
}

struct CauchyTerm {
    Partition lambda;       // on the first factor
    Partition lambda_conj;  // on the second factor
    long long multiplicity;
};

/// wedge^j (A (x) B) = sum_{|lambda| = j} S_lambda A (x) S_lambda' B for dim A = a, dim B = b.
inline std::vector<CauchyTerm> cauchy_exterior(int j, int a, int b) {
    if (j < 0) throw Error("cauchy_exterior: negative degree");
    std::vector<CauchyTerm> out;
    for (auto& p : partitions_of(j, a, b)) out.push_back({p, conjugate(p), 1});
    return out;
}

}  // namespace odl

#endif
