#ifndef ODL_SPACES_HPP
#define ODL_SPACES_HPP

#include "odl/core.hpp"

#include <compare>
#include <regex>
#include <string>
#include <vector>

namespace odl {

/// One factor of a product ambient space.
struct Factor {
    enum class Kind { Proj, Grass, IsoGrass, Quadric, BiSympGrass };
    Kind kind = Kind::Proj;
    int k = 1;  // subspace dimension (1 for Proj and Quadric)
    int n = 2;  // ambient vector space dimension

    auto operator<=>(const Factor&) const = default;

    static Factor proj(int m) { return check({Kind::Proj, 1, m + 1}); }
    static Factor grass(int k, int n) { return check({Kind::Grass, k, n}); }
    static Factor iso_grass(int k, int n) { return check({Kind::IsoGrass, k, n}); }
    static Factor quadric(int m) { return check({Kind::Quadric, 1, m + 2}); }
    static Factor bisymplectic(int k, int n) { return check({Kind::BiSympGrass, k, n}); }

    long long dim() const {
        switch (kind) {
            case Kind::Proj:
            case Kind::Grass: return static_cast<long long>(k) * (n - k);
            case Kind::IsoGrass: return static_cast<long long>(k) * (n - k) - static_cast<long long>(k) * (k - 1) / 2;
            case Kind::Quadric: return n - 2;
            case Kind::BiSympGrass: return static_cast<long long>(k) * (n - k) - static_cast<long long>(k) * (k - 1);
        }
        return 0;
    }

    /// Fano index: -K = O(index).
    long long index() const {
        switch (kind) {
            case Kind::Proj:
            case Kind::Grass: return n;
            case Kind::IsoGrass: return n % 2 == 0 ? n - k + 1 : n + 1 - k;
            case Kind::Quadric: return n - 2;
            case Kind::BiSympGrass: return n - 2 * k + 2;
        }
        return 0;
    }

    int rank_u() const { return k; }
    int rank_q() const { return n - k; }

    std::string name() const {
        switch (kind) {
            case Kind::Proj: return "P" + std::to_string(n - 1);
            case Kind::Grass: return "Gr(" + std::to_string(k) + "," + std::to_string(n) + ")";
            case Kind::IsoGrass: return "IGr(" + std::to_string(k) + "," + std::to_string(n) + ")";
            case Kind::Quadric: return "Q" + std::to_string(n - 2);
            case Kind::BiSympGrass: return "I2Gr(" + std::to_string(k) + "," + std::to_string(n) + ")";
        }
        return "?";
    }

private:
    static Factor check(Factor f) {
        bool ok = f.k >= 1 && f.k < f.n;
        if (f.kind == Kind::IsoGrass) ok = ok && 2 * f.k <= f.n;
        if (f.kind == Kind::Quadric) ok = f.n >= 3;
        if (f.kind == Kind::BiSympGrass) ok = f.k == 3 && f.n == 8;  // the only catalogued bisymplectic case
        if (!ok) throw Error("invalid space factor " + f.name());
        return f;
    }
};

/// Product of factors cut by hypersurfaces of the given multidegrees.
struct SpaceDescriptor {
    std::vector<Factor> factors;
    std::vector<std::vector<int>> slices;

    auto operator<=>(const SpaceDescriptor&) const = default;

    long long dim() const {
        long long d = 0;
        for (auto& f : factors) d += f.dim();
        return d - static_cast<long long>(slices.size());
    }

    std::string name() const {
        std::string s;
        for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? "x" : "") + factors[i].name();
        for (auto& sl : slices) {
            s += "&(";
            for (std::size_t i = 0; i < sl.size(); ++i) s += (i ? "," : "") + std::to_string(sl[i]);
            s += ")";
        }
        return s;
    }
};

/// Hyperplane generator name of factor i (1-based).
inline std::string hyperplane(std::size_t i) { return "h" + std::to_string(i); }

namespace detail {

inline std::vector<std::string> split_top(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace detail

/// Parses e.g. "P3xP3xP3", "Gr(2,4)xIGr(2,5)", "Gr(3,6)&C&H", "Gr(2,6)xQ6&(1,1)".
/// Slice letters H, Q, C stand for degree 1, 2, 3 on a single-factor space.
inline SpaceDescriptor parse_space(std::string s) {
    std::erase_if(s, [](char c) { return c == ' '; });
    for (std::string cap : {"∩", "cap"})
        for (auto p = s.find(cap); p != std::string::npos; p = s.find(cap)) s.replace(p, cap.size(), "&");
    for (auto p = s.find("×"); p != std::string::npos; p = s.find("×")) s.replace(p, 2, "x");
    auto parts = detail::split_top(s, '&');
    SpaceDescriptor sd;
    static const std::regex proj(R"(P\^?(\d+))"), quad(R"((?:Q\^?|Quadric\()(\d+)\)?)"),
        gr(R"((I2Gr|IGr|Gr)\((\d+),(\d+)\))");
    for (auto& f : detail::split_top(parts[0], 'x')) {
        std::smatch m;
        if (std::regex_match(f, m, proj)) {
            sd.factors.push_back(Factor::proj(std::stoi(m[1])));
        } else if (std::regex_match(f, m, quad)) {
            sd.factors.push_back(Factor::quadric(std::stoi(m[1])));
        } else if (std::regex_match(f, m, gr)) {
            const int k = std::stoi(m[2]), n = std::stoi(m[3]);
            if (m[1] == "Gr") sd.factors.push_back(Factor::grass(k, n));
            else if (m[1] == "IGr") sd.factors.push_back(Factor::iso_grass(k, n));
            else sd.factors.push_back(Factor::bisymplectic(k, n));
        } else {
            throw Error("unrecognised space factor '" + f + "'");
        }
    }
    if (sd.factors.empty()) throw Error("empty space descriptor");
    for (std::size_t i = 1; i < parts.size(); ++i) {
        std::string p = parts[i];
        if (!p.empty() && std::isdigit(static_cast<unsigned char>(p.back())) && p.size() > 1 && !p.starts_with("("))
            p.pop_back();  // H1, H2, Q1 labels
        int deg = p == "H" ? 1 : p == "Q" ? 2 : p == "C" ? 3 : 0;
        if (deg) {
            if (sd.factors.size() != 1) throw Error("slice '" + p + "' needs an explicit multidegree on a product");
            sd.slices.push_back({deg});
            continue;
        }
        if (p.size() < 2 || p.front() != '(' || p.back() != ')') throw Error("bad slice '" + parts[i] + "'");
        std::vector<int> md;
        for (auto& t : detail::split_top(p.substr(1, p.size() - 2), ',')) md.push_back(std::stoi(t));
        if (md.size() != sd.factors.size()) throw Error("slice multidegree has wrong length");
        sd.slices.push_back(md);
    }
    if (sd.dim() < 0) throw Error("space has negative dimension");
    return sd;
}

}  // namespace odl

#endif
