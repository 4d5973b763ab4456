#ifndef ODL_BOTT_HPP
#define ODL_BOTT_HPP

#include "odl/core.hpp"
#include "odl/partitions.hpp"

#include <algorithm>
#include <future>
#include <string>
#include <vector>

namespace odl {

/// Outcome of Borel-Weil-Bott for one irreducible homogeneous bundle.
struct BottResult {
    bool vanishing = true;
    int degree = 0;
    QVec dominant;  // highest weight of the cohomology module (epsilon coordinates)
    Z module_dim = 0;
};

/// Type A: seq is the GL_n weight (Q part first, then U part, for S_a Q (x) S_b U on Gr(k, n)).
inline BottResult bott_gl(const std::vector<long long>& seq) {
    const std::size_t n = seq.size();
    std::vector<long long> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = seq[i] + static_cast<long long>(n - i);
    BottResult r;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (v[i] == v[j]) return r;
            if (v[i] < v[j]) ++r.degree;
        }
    std::sort(v.begin(), v.end(), std::greater<>());
    std::vector<int> w(n);
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = static_cast<int>(v[i] - static_cast<long long>(n - i));
        r.dominant.push_back(Q(w[i]));
    }
    r.vanishing = false;
    r.module_dim = gl_dim(w);
    return r;
}

enum class IsoFamily { B, C, D };

inline char family_char(IsoFamily f) { return f == IsoFamily::B ? 'B' : (f == IsoFamily::C ? 'C' : 'D'); }

/// Audit data for the two inversion types of lambda* + rho on an isotropic Grassmannian.
struct IsotropicAudit {
    int t = 0;
    int ell = 0;
    std::vector<int> i_k;
    int q1 = 0, q2 = 0;                    // counted over the positive roots
    int q1_predicted = 0, q2_predicted = 0;  // closed forms in ell, t and i_k
};

struct IsotropicBott {
    BottResult result;
    IsotropicAudit audit;
    QVec shifted;  // lambda* + rho
};

namespace detail {

inline QVec iso_rho(IsoFamily f, int d) {
    QVec r;
    for (int i = 0; i < d; ++i) {
        switch (f) {
            case IsoFamily::C: r.emplace_back(d - i); break;
            case IsoFamily::D: r.emplace_back(d - 1 - i); break;
            case IsoFamily::B: r.push_back(Q(2 * (d - i) - 1, 2)); break;
        }
    }
    for (auto& x : r) x.canonicalize();
    return r;
}

inline std::vector<QVec> iso_positive_roots(IsoFamily f, int d) {
    std::vector<QVec> out;
    const auto ud = static_cast<std::size_t>(d);
    for (std::size_t i = 0; i < ud; ++i)
        for (std::size_t j = i + 1; j < ud; ++j) {
            QVec a(ud, Q(0)), b(ud, Q(0));
            a[i] = 1, a[j] = -1;
            b[i] = 1, b[j] = 1;
            out.push_back(a);
            out.push_back(b);
        }
    if (f != IsoFamily::D)
        for (std::size_t i = 0; i < ud; ++i) {
            QVec a(ud, Q(0));
            a[i] = f == IsoFamily::C ? 2 : 1;
            out.push_back(a);
        }
    return out;
}

}  // namespace detail

/// Cohomology of S_lambda U on the isotropic Grassmannian of s-planes in a space of
/// rank-d classical type, following the two-type inversion count.
inline IsotropicBott bott_isotropic(const Partition& lambda, int s, int d, IsoFamily family) {
    if (s < 0 || d < 1 || s > d) throw Error("bott_isotropic: need 0 <= s <= d");
    if (lambda.length() > s) throw Error("bott_isotropic: partition longer than rank of U");
    IsotropicBott out;
    const QVec rho = detail::iso_rho(family, d);
    const int t = d - s;
    out.shifted = rho;
    for (int k = 1; k <= s; ++k) {
        const auto pos = static_cast<std::size_t>(s - k);
        out.shifted[pos] -= lambda[static_cast<std::size_t>(k - 1)];
    }
    const auto roots = detail::iso_positive_roots(family, d);
    // Audit: a_k = entry carrying lambda_k.
    auto& au = out.audit;
    au.t = t;
    std::vector<Q> a(static_cast<std::size_t>(s));
    for (int k = 1; k <= s; ++k) a[static_cast<std::size_t>(k - 1)] = out.shifted[static_cast<std::size_t>(s - k)];
    const Q tail_top = family == IsoFamily::C ? Q(t) : (family == IsoFamily::D ? Q(t - 1) : Q(2 * t - 1, 2));
    for (auto& x : a)
        if (x < -tail_top) ++au.ell;
    for (int k = 0; k < au.ell; ++k) {
        int cnt = 0;
        for (int j = au.ell; j < s; ++j)
            if (a[static_cast<std::size_t>(j)] + a[static_cast<std::size_t>(k)] < 0) ++cnt;
        au.i_k.push_back(cnt);
    }
    au.q1_predicted = au.ell * t;
    const int ell = au.ell;
    au.q2_predicted = ell * t + (family == IsoFamily::D ? ell * (ell - 1) / 2 : ell * (ell + 1) / 2);
    for (int x : au.i_k) au.q2_predicted += x;

    for (auto& r : roots) {
        const Q p = dot(out.shifted, r);
        if (p == 0) return out;  // singular: everything vanishes
        if (p < 0) {
            const bool type1 = std::count_if(r.begin(), r.end(), [](const Q& c) { return c < 0; }) > 0;
            (type1 ? au.q1 : au.q2) += 1;
        }
    }
    BottResult& res = out.result;
    res.vanishing = false;
    res.degree = au.q1 + au.q2;
    // Dominant representative: absolute values sorted decreasingly (type D keeps the sign parity).
    QVec dom = out.shifted;
    int negatives = 0;
    for (auto& x : dom)
        if (x < 0) {
            x = -x;
            ++negatives;
        }
    std::sort(dom.begin(), dom.end(), std::greater<>());
    if (family == IsoFamily::D && negatives % 2 == 1) dom.back() = -dom.back();
    res.dominant = dom - rho;
    Q num = 1, den = 1;
    for (auto& r : roots) {
        num *= dot(dom, r);
        den *= dot(rho, r);
    }
    Q dim = num / den;
    res.module_dim = dim.get_num();
    return out;
}

struct WeymanLevel {
    int j = 0;
    bool passed = true;
    int checked = 0;
    std::vector<std::string> witnesses;  // failing partitions with the offending degree
    std::vector<std::string> audit;      // (lambda, ell, i_k, q) for every non-vanishing term
};

struct WeymanReport {
    int d1 = 0, d2 = 0, s = 0, d = 0;
    IsoFamily family = IsoFamily::C;
    bool passed = true;
    std::vector<WeymanLevel> levels;
};

/// How an odd d2 is read: the symplectic shift rho = (d, ..., 1) with d = floor(d2 / 2),
/// or the odd orthogonal group B_d.
enum class OddRule { SymplecticFloor, Orthogonal };

/// Family and rank used for V2 of dimension d2.
inline std::pair<IsoFamily, int> weyman_geometry(int d2, OddRule rule = OddRule::SymplecticFloor) {
    if (d2 % 2 == 0 || rule == OddRule::SymplecticFloor) return {IsoFamily::C, d2 / 2};
    return {IsoFamily::B, (d2 - 1) / 2};
}

/// Checks H^q(S_lambda U) = 0 for q >= |lambda| > 0 over every summand of wedge^j Hom(V1, U),
/// j = 1..jmax, on the isotropic Grassmannian of (d2 - d1 + 1)-planes in V2.
inline WeymanReport verify_weyman_vanishing(int d1, int d2, int jmax, OddRule rule = OddRule::SymplecticFloor) {
    if (d1 < 1 || d2 < d1 - 1 || d2 > 2 * d1 - 2) throw Error("verify_weyman_vanishing: need d1 - 1 <= d2 <= 2 d1 - 2");
    if (jmax < 0) throw Error("verify_weyman_vanishing: negative jmax");
    WeymanReport rep;
    rep.d1 = d1;
    rep.d2 = d2;
    rep.s = d2 - d1 + 1;
    auto [fam, d] = weyman_geometry(d2, rule);
    rep.family = fam;
    rep.d = d;
    if (rep.s > d) throw Error("verify_weyman_vanishing: isotropic rank exceeds the form's Witt index");
    auto level = [&, fam = fam, d = d](int j) {
        WeymanLevel lv;
        lv.j = j;
        for (auto& term : cauchy_exterior(j, rep.s, d1)) {
            auto b = bott_isotropic(term.lambda, rep.s, d, fam);
            ++lv.checked;
            if (b.result.vanishing) continue;
            std::string ik;
            for (int x : b.audit.i_k) ik += (ik.empty() ? "" : ",") + std::to_string(x);
            lv.audit.push_back(term.lambda.str() + " ell=" + std::to_string(b.audit.ell) + " i=[" + ik + "] q=" +
                               std::to_string(b.result.degree));
            if (b.result.degree >= j) {
                lv.passed = false;
                lv.witnesses.push_back(term.lambda.str() + " -> H^" + std::to_string(b.result.degree));
            }
        }
        return lv;
    };
    std::vector<std::future<WeymanLevel>> jobs;
    for (int j = 1; j <= jmax; ++j) jobs.push_back(std::async(std::launch::async, level, j));
    for (auto& f : jobs) {
        rep.levels.push_back(f.get());
        rep.passed = rep.passed && rep.levels.back().passed;
    }
    return rep;
}

}  // namespace odl

#endif
