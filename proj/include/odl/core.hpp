#ifndef ODL_CORE_HPP
#define ODL_CORE_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace odl {

using Q = mpq_class;
using Z = mpz_class;

/// Thrown for every precondition violation or inconsistent input.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Q qnorm(Q x) {
    x.canonicalize();
    return x;
}

inline bool is_integer(const Q& x) { return x.get_den() == 1; }

inline long long to_ll(const Z& z) {
    if (!z.fits_slong_p()) throw Error("integer overflow converting " + z.get_str());
    return z.get_si();
}

inline long long to_ll(const Q& q) {
    if (!is_integer(q)) throw Error("expected an integer, got " + q.get_str());
    return to_ll(Z(q.get_num()));
}

inline std::string to_string(const Q& q) { return q.get_str(); }

inline Z binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Z r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Z factorial(long long n) {
    Z r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

using QVec = std::vector<Q>;
using QMat = std::vector<QVec>;

inline Q dot(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw Error("dot: length mismatch");
    Q s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline QVec operator+(QVec a, const QVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline QVec operator-(QVec a, const QVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

inline QVec operator*(const Q& c, QVec a) {
    for (auto& x : a) x *= c;
    return a;
}

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(QMat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Q inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Q f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Inverse of a square matrix over Q; throws if singular.
inline QMat inverse(const QMat& a) {
    const std::size_t n = a.size();
    QMat m(n, QVec(2 * n, Q(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
        m[i][n + i] = 1;
    }
    auto piv = rref(m);
    if (piv.size() < n || piv[n - 1] != n - 1) throw Error("inverse: singular matrix");
    QMat r(n, QVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r[i][j] = m[i][n + j];
    return r;
}

/// Basis of the null space {x : m x = 0}.
inline QMat null_space(QMat m, std::size_t cols) {
    if (m.empty()) {
        QMat basis;
        for (std::size_t i = 0; i < cols; ++i) {
            QVec e(cols, Q(0));
            e[i] = 1;
            basis.push_back(e);
        }
        return basis;
    }
    auto piv = rref(m);
    std::vector<bool> is_piv(cols, false);
    for (auto c : piv) is_piv[c] = true;
    QMat basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        QVec x(cols, Q(0));
        x[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = -m[r][f];
        basis.push_back(x);
    }
    return basis;
}

}  // namespace odl

#endif
