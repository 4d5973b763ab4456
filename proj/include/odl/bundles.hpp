#ifndef ODL_BUNDLES_HPP
#define ODL_BUNDLES_HPP

#include "odl/core.hpp"
#include "odl/partitions.hpp"
#include "odl/spaces.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace odl {

/// Exponent vector of a line bundle over named line generators and det-symbols.
class LineClass {
public:
    LineClass() = default;
    LineClass(std::initializer_list<std::pair<const std::string, Q>> init) {
        for (auto& [k, v] : init) add(k, v);
    }
    static LineClass of(const std::string& name, const Q& e = 1) {
        LineClass c;
        c.add(name, e);
        return c;
    }

    const std::map<std::string, Q>& exponents() const { return e_; }
    Q operator[](const std::string& k) const {
        auto it = e_.find(k);
        return it == e_.end() ? Q(0) : it->second;
    }
    bool trivial() const { return e_.empty(); }

    void add(const std::string& k, const Q& v) {
        Q& x = e_[k];
        x += v;
        if (x == 0) e_.erase(k);
    }
    LineClass& operator+=(const LineClass& o) {
        for (auto& [k, v] : o.e_) add(k, v);
        return *this;
    }
    LineClass& operator-=(const LineClass& o) { return *this += -o; }
    friend LineClass operator+(LineClass a, const LineClass& b) { return a += b; }
    friend LineClass operator-(LineClass a, const LineClass& b) { return a -= b; }
    LineClass operator-() const { return Q(-1) * *this; }
    friend LineClass operator*(const Q& c, const LineClass& a) {
        LineClass r;
        if (c == 0) return r;
        for (auto& [k, v] : a.e_) r.e_[k] = c * v;
        return r;
    }
    bool operator==(const LineClass&) const = default;

    std::string str() const {
        if (e_.empty()) return "O";
        std::string s;
        for (auto& [k, v] : e_) s += (s.empty() ? "" : " ") + k + "^" + v.get_str();
        return s;
    }

private:
    std::map<std::string, Q> e_;
};

/// Symbol -> class it equals; right-hand sides must not mention rewritten symbols.
using LineRelations = std::map<std::string, LineClass>;

inline LineClass substitute(const LineClass& c, const LineRelations& relations) {
    LineClass out;
    for (auto& [s, v] : c.exponents()) {
        auto it = relations.find(s);
        if (it == relations.end()) out.add(s, v);
        else out += v * it->second;
    }
    return out;
}

class BundleExpr;
LineClass det_expr(const BundleExpr& e);

/// Symbolic vector bundle: an immutable expression tree shared by value.
class BundleExpr {
public:
    enum class Kind { Gen, Line, Dual, Sum, Tensor, Wedge, Sym, Schur, Twist, Minus };

    struct Node {
        Kind kind = Kind::Line;
        std::string name;        // Gen
        long long rank = 0;      // cached rank of this node
        int k = 0;               // Wedge, Sym
        Partition lambda;        // Schur
        LineClass cls;           // Line, Twist
        std::vector<BundleExpr> kids;
    };

    BundleExpr() : BundleExpr(line(LineClass{})) {}

    static BundleExpr gen(std::string name, long long rank) {
        if (rank < 0) throw Error("generator '" + name + "' with negative rank");
        if (name.empty()) throw Error("generator needs a name");
        Node n;
        n.kind = Kind::Gen;
        n.name = std::move(name);
        n.rank = rank;
        return BundleExpr(std::move(n));
    }
    static BundleExpr line(LineClass c) {
        Node n;
        n.kind = Kind::Line;
        n.rank = 1;
        n.cls = std::move(c);
        return BundleExpr(std::move(n));
    }
    static BundleExpr line(const std::string& name) { return line(LineClass::of(name)); }
    static BundleExpr trivial(long long r) {
        std::vector<BundleExpr> kids(static_cast<std::size_t>(r), line(LineClass{}));
        return sum(std::move(kids));
    }
    static BundleExpr dual(BundleExpr x) {
        Node n;
        n.kind = Kind::Dual;
        n.rank = x.rank();
        n.kids = {std::move(x)};
        return BundleExpr(std::move(n));
    }
    static BundleExpr sum(std::vector<BundleExpr> xs) {
        Node n;
        n.kind = Kind::Sum;
        for (auto& x : xs) n.rank += x.rank();
        n.kids = std::move(xs);
        return BundleExpr(std::move(n));
    }
    static BundleExpr tensor(std::vector<BundleExpr> xs) {
        Node n;
        n.kind = Kind::Tensor;
        n.rank = 1;
        for (auto& x : xs) n.rank *= x.rank();
        n.kids = std::move(xs);
        return BundleExpr(std::move(n));
    }
    static BundleExpr wedge(int k, BundleExpr x) {
        if (k < 0) throw Error("negative exterior power");
        Node n;
        n.kind = Kind::Wedge;
        n.k = k;
        n.rank = to_ll(binomial(x.rank(), k));
        n.kids = {std::move(x)};
        return BundleExpr(std::move(n));
    }
    static BundleExpr sym(int k, BundleExpr x) {
        if (k < 0) throw Error("negative symmetric power");
        Node n;
        n.kind = Kind::Sym;
        n.k = k;
        n.rank = x.rank() == 0 ? (k == 0 ? 1 : 0) : to_ll(binomial(x.rank() + k - 1, k));
        n.kids = {std::move(x)};
        return BundleExpr(std::move(n));
    }
    static BundleExpr schur(Partition lambda, BundleExpr x) {
        const long long r = x.rank();
        if (lambda.length() > r) throw Error("Schur functor " + lambda.str() + " longer than rank " + std::to_string(r));
        Node n;
        n.kind = Kind::Schur;
        n.rank = to_ll(schur_dim(lambda, r));
        if (r > 0) {
            Q e = Q(Z(lambda.size()) * schur_dim(lambda, r), Z(static_cast<long>(r)));
            e.canonicalize();
            if (!is_integer(e)) throw Error("Schur functor with non-integral determinant exponent");
        }
        n.lambda = std::move(lambda);
        n.kids = {std::move(x)};
        return BundleExpr(std::move(n));
    }
    static BundleExpr twist(BundleExpr x, LineClass c) {
        Node n;
        n.kind = Kind::Twist;
        n.rank = x.rank();
        n.cls = std::move(c);
        n.kids = {std::move(x)};
        return BundleExpr(std::move(n));
    }
    /// Formal difference a - b (a class in K-theory); rank must stay nonnegative.
    static BundleExpr minus(BundleExpr a, BundleExpr b) {
        if (b.rank() > a.rank()) throw Error("difference with negative rank");
        Node n;
        n.kind = Kind::Minus;
        n.rank = a.rank() - b.rank();
        n.kids = {std::move(a), std::move(b)};
        return BundleExpr(std::move(n));
    }

    Kind kind() const { return n_->kind; }
    long long rank() const { return n_->rank; }
    const Node& node() const { return *n_; }
    const std::vector<BundleExpr>& kids() const { return n_->kids; }

    std::string sexpr() const;
    bool operator==(const BundleExpr& o) const;

private:
    explicit BundleExpr(Node n) : n_(std::make_shared<const Node>(std::move(n))) {}
    std::shared_ptr<const Node> n_;
};

inline long long rank(const BundleExpr& e) { return e.rank(); }

/// Determinant, bottom-up.
inline LineClass det_expr(const BundleExpr& e) {
    using K = BundleExpr::Kind;
    const auto& n = e.node();
    switch (n.kind) {
        case K::Gen: return n.rank == 0 ? LineClass{} : LineClass::of(n.name);
        case K::Line: return n.cls;
        case K::Dual: return -det_expr(n.kids[0]);
        case K::Sum: {
            LineClass c;
            for (auto& x : n.kids) c += det_expr(x);
            return c;
        }
        case K::Minus: return det_expr(n.kids[0]) - det_expr(n.kids[1]);
        case K::Tensor: {
            LineClass c;
            for (std::size_t i = 0; i < n.kids.size(); ++i) {
                Z others = 1;
                for (std::size_t j = 0; j < n.kids.size(); ++j)
                    if (j != i) others *= static_cast<long>(n.kids[j].rank());
                c += Q(others) * det_expr(n.kids[i]);
            }
            return c;
        }
        case K::Wedge: {
            const long long r = n.kids[0].rank();
            if (n.k == 0 || n.k > r) return {};
            return Q(binomial(r - 1, n.k - 1)) * det_expr(n.kids[0]);
        }
        case K::Sym: {
            const long long r = n.kids[0].rank();
            if (r == 0 || n.k == 0) return {};
            return Q(binomial(r + n.k - 1, n.k - 1)) * det_expr(n.kids[0]);
        }
        case K::Schur: {
            const long long r = n.kids[0].rank();
            if (r == 0) return {};
            Q e(Z(n.lambda.size()) * schur_dim(n.lambda, r), Z(static_cast<long>(r)));
            e.canonicalize();
            return e * det_expr(n.kids[0]);
        }
        case K::Twist: return det_expr(n.kids[0]) + Q(static_cast<long>(n.rank)) * n.cls;
    }
    return {};
}

/// Graded half-spin sums for a split quadratic bundle E + E* (x) L.
inline BundleExpr spinor_bundle(const BundleExpr& E, const LineClass& L, int parity) {
    if (parity != 1 && parity != -1) throw Error("spinor parity must be +1 or -1");
    const long long e = E.rank();
    const long long top = parity > 0 ? e / 2 : (e - 1) / 2;
    std::vector<BundleExpr> parts;
    for (long long k = 0; 2 * k + (parity > 0 ? 0 : 1) <= e; ++k) {
        const int deg = static_cast<int>(2 * k + (parity > 0 ? 0 : 1));
        parts.push_back(BundleExpr::twist(BundleExpr::wedge(deg, E), Q(static_cast<long>(top - k)) * L));
    }
    return BundleExpr::sum(std::move(parts));
}

namespace detail {

inline std::string line_sexpr(const LineClass& c) {
    std::string s;
    for (auto& [k, v] : c.exponents()) s += " (" + k + " " + v.get_str() + ")";
    return s;
}

/// Pushes duals to the leaves, flattens sums and merges twists.
inline BundleExpr canonical(const BundleExpr& e, bool dualize) {
    using K = BundleExpr::Kind;
    const auto& n = e.node();
    auto rec = [&](const BundleExpr& x) { return canonical(x, dualize); };
    switch (n.kind) {
        case K::Gen: return dualize ? BundleExpr::dual(e) : e;
        case K::Line: return BundleExpr::line(dualize ? -n.cls : n.cls);
        case K::Dual: return canonical(n.kids[0], !dualize);
        case K::Sum: {
            std::vector<BundleExpr> flat;
            for (auto& x : n.kids) {
                auto c = rec(x);
                if (c.kind() == K::Sum)
                    for (auto& y : c.kids()) flat.push_back(y);
                else if (c.rank() > 0 || c.kind() != K::Gen)
                    flat.push_back(c);
            }
            std::sort(flat.begin(), flat.end(), [](const BundleExpr& a, const BundleExpr& b) { return a.sexpr() < b.sexpr(); });
            if (flat.size() == 1) return flat[0];
            return BundleExpr::sum(std::move(flat));
        }
        case K::Minus: return BundleExpr::minus(rec(n.kids[0]), rec(n.kids[1]));
        case K::Tensor: {
            std::vector<BundleExpr> fs;
            LineClass lines;
            for (auto& x : n.kids) {
                auto c = rec(x);
                if (c.kind() == K::Line) {
                    lines += c.node().cls;
                } else if (c.kind() == K::Twist) {
                    lines += c.node().cls;
                    fs.push_back(c.kids()[0]);
                } else if (c.kind() == K::Tensor) {
                    for (auto& y : c.kids()) fs.push_back(y);
                } else {
                    fs.push_back(c);
                }
            }
            std::sort(fs.begin(), fs.end(), [](const BundleExpr& a, const BundleExpr& b) { return a.sexpr() < b.sexpr(); });
            if (fs.empty()) return BundleExpr::line(lines);
            BundleExpr core = fs.size() == 1 ? fs[0] : BundleExpr::tensor(std::move(fs));
            return lines.trivial() ? core : BundleExpr::twist(core, lines);
        }
        case K::Wedge:
            if (n.k == 0) return BundleExpr::line(LineClass{});
            return BundleExpr::wedge(n.k, rec(n.kids[0]));
        case K::Sym:
            if (n.k == 0) return BundleExpr::line(LineClass{});
            return BundleExpr::sym(n.k, rec(n.kids[0]));
        case K::Schur: return BundleExpr::schur(n.lambda, rec(n.kids[0]));
        case K::Twist: {
            auto c = rec(n.kids[0]);
            LineClass t = dualize ? -n.cls : n.cls;
            if (c.kind() == K::Line) return BundleExpr::line(c.node().cls + t);
            if (c.kind() == K::Twist) {
                t += c.node().cls;
                c = c.kids()[0];
            }
            if (t.trivial()) return c;
            if (c.kind() == K::Sum) {
                std::vector<BundleExpr> parts;
                for (auto& y : c.kids()) parts.push_back(BundleExpr::twist(y, t));
                return canonical(BundleExpr::sum(std::move(parts)), false);
            }
            return BundleExpr::twist(c, t);
        }
    }
    return e;
}

}  // namespace detail

inline BundleExpr canonical(const BundleExpr& e) { return detail::canonical(e, false); }

inline std::string BundleExpr::sexpr() const {
    const auto& n = *n_;
    auto kids_str = [&] {
        std::string s;
        for (auto& x : n.kids) s += " " + x.sexpr();
        return s;
    };
    switch (n.kind) {
        case Kind::Gen: return "(gen " + n.name + " " + std::to_string(n.rank) + ")";
        case Kind::Line: return n.cls.trivial() ? "O" : "(line" + detail::line_sexpr(n.cls) + ")";
        case Kind::Dual: return "(dual" + kids_str() + ")";
        case Kind::Sum: return "(sum" + kids_str() + ")";
        case Kind::Tensor: return "(tensor" + kids_str() + ")";
        case Kind::Wedge: return "(wedge " + std::to_string(n.k) + kids_str() + ")";
        case Kind::Sym: return "(sym " + std::to_string(n.k) + kids_str() + ")";
        case Kind::Schur: {
            std::string p;
            for (int x : n.lambda.parts()) p += (p.empty() ? "" : " ") + std::to_string(x);
            return "(schur (" + p + ")" + kids_str() + ")";
        }
        case Kind::Twist: return "(twist" + kids_str() + detail::line_sexpr(n.cls) + ")";
        case Kind::Minus: return "(minus" + kids_str() + ")";
    }
    return "?";
}

inline bool BundleExpr::operator==(const BundleExpr& o) const { return canonical(*this).sexpr() == canonical(o).sexpr(); }

/// K_X over the hyperplane generators h1, h2, ... of the factors, with adjunction for slices.
inline LineClass canonical_of_space(const SpaceDescriptor& s) {
    LineClass k;
    for (std::size_t i = 0; i < s.factors.size(); ++i) k.add(hyperplane(i + 1), -Q(static_cast<long>(s.factors[i].index())));
    for (auto& sl : s.slices) {
        if (sl.size() != s.factors.size()) throw Error("slice multidegree has wrong length");
        for (std::size_t i = 0; i < sl.size(); ++i) k.add(hyperplane(i + 1), Q(sl[i]));
    }
    return k;
}

/// Replaces the det-symbols of tautological generators (U1, Q2, ...) by hyperplane classes.
inline LineClass resolve_on_space(const LineClass& c, const SpaceDescriptor& s) {
    LineClass out;
    for (auto& [k, v] : c.exponents()) {
        if (k.size() >= 2 && (k[0] == 'U' || k[0] == 'Q') && std::all_of(k.begin() + 1, k.end(), ::isdigit)) {
            const auto i = static_cast<std::size_t>(std::stoul(k.substr(1)));
            if (i < 1 || i > s.factors.size()) throw Error("tautological generator " + k + " on a space with " + std::to_string(s.factors.size()) + " factors");
            out.add(hyperplane(i), k[0] == 'U' ? -v : v);
        } else {
            out.add(k, v);
        }
    }
    return out;
}

/// Tautological sub (U) or quotient (Q) bundle of factor i (1-based).
inline BundleExpr tautological(const SpaceDescriptor& s, char which, std::size_t i) {
    if (i < 1 || i > s.factors.size()) throw Error("factor index out of range");
    const auto& f = s.factors[i - 1];
    return BundleExpr::gen(std::string(1, which) + std::to_string(i), which == 'U' ? f.rank_u() : f.rank_q());
}

// ---------------------------------------------------------------------------
// S-expression reader.

struct SExpr {
    std::string atom;
    std::vector<SExpr> list;
    bool is_atom = true;
};

inline SExpr read_sexpr(const std::string& text) {
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    std::function<SExpr()> rd = [&]() -> SExpr {
        skip();
        if (pos >= text.size()) throw Error("unexpected end of expression");
        if (text[pos] == ')') throw Error("unexpected ')' at offset " + std::to_string(pos));
        SExpr e;
        if (text[pos] == '(') {
            ++pos;
            e.is_atom = false;
            while (true) {
                skip();
                if (pos >= text.size()) throw Error("missing ')'");
                if (text[pos] == ')') {
                    ++pos;
                    break;
                }
                e.list.push_back(rd());
            }
            return e;
        }
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) && text[pos] != '(' && text[pos] != ')')
            e.atom += text[pos++];
        return e;
    };
    SExpr e = rd();
    skip();
    if (pos != text.size()) throw Error("trailing characters after expression");
    return e;
}

namespace detail {

inline long long read_int(const SExpr& e) {
    if (!e.is_atom) throw Error("expected an integer");
    try {
        std::size_t used = 0;
        long long v = std::stoll(e.atom, &used);
        if (used != e.atom.size()) throw Error("");
        return v;
    } catch (...) {
        throw Error("expected an integer, got '" + e.atom + "'");
    }
}

inline Q read_rational(const SExpr& e) {
    if (!e.is_atom) throw Error("expected a rational number");
    Q q;
    if (q.set_str(e.atom, 10) != 0) throw Error("bad rational '" + e.atom + "'");
    q.canonicalize();
    return q;
}

}  // namespace detail

/// Bundle grammar (see README): gen, line, O, U, Q, dual, sum, tensor, wedge, sym, schur,
/// twist, spinor, minus, trivial, copies; bare atoms look up `env`.
inline BundleExpr parse_bundle(const SExpr& e, const SpaceDescriptor* space = nullptr,
                               const std::map<std::string, BundleExpr>& env = {}) {
    auto rec = [&](const SExpr& x) { return parse_bundle(x, space, env); };
    if (e.is_atom) {
        if (e.atom == "O") return BundleExpr::line(LineClass{});
        if (auto it = env.find(e.atom); it != env.end()) return it->second;
        if (space && (e.atom == "U" || e.atom == "Q")) return tautological(*space, e.atom[0], 1);
        throw Error("unknown bundle atom '" + e.atom + "'");
    }
    if (e.list.empty() || !e.list[0].is_atom) throw Error("expected an operator at the head of a list");
    const std::string& op = e.list[0].atom;
    const auto& a = e.list;
    auto need = [&](std::size_t lo, std::size_t hi) {
        if (a.size() - 1 < lo || a.size() - 1 > hi) throw Error("wrong number of arguments to '" + op + "'");
    };
    auto rest = [&](std::size_t from) {
        std::vector<BundleExpr> xs;
        for (std::size_t i = from; i < a.size(); ++i) xs.push_back(rec(a[i]));
        return xs;
    };
    auto line_pairs = [&](std::size_t from) {
        LineClass c;
        for (std::size_t i = from; i < a.size(); ++i) {
            if (a[i].is_atom || a[i].list.size() != 2 || !a[i].list[0].is_atom) throw Error("expected (NAME exponent) pairs in '" + op + "'");
            c.add(a[i].list[0].atom, detail::read_rational(a[i].list[1]));
        }
        return c;
    };
    if (op == "gen") {
        need(2, 2);
        if (!a[1].is_atom) throw Error("generator name must be an atom");
        return BundleExpr::gen(a[1].atom, detail::read_int(a[2]));
    }
    if (op == "line") {
        // (line L) names a generator line; (line (L 2) (M -1)) spells out a class
        need(1, 64);
        if (a.size() == 2 && a[1].is_atom) return BundleExpr::line(a[1].atom);
        return BundleExpr::line(line_pairs(1));
    }
    if (op == "O") {
        LineClass c;
        if (space && a.size() - 1 != space->factors.size()) throw Error("(O ...) needs one degree per factor");
        for (std::size_t i = 1; i < a.size(); ++i) c.add(hyperplane(i), Q(static_cast<long>(detail::read_int(a[i]))));
        return BundleExpr::line(c);
    }
    if (op == "U" || op == "Q") {
        need(0, 1);
        if (!space) throw Error("tautological bundles need a space");
        return tautological(*space, op[0], a.size() == 2 ? static_cast<std::size_t>(detail::read_int(a[1])) : 1);
    }
    if (op == "dual") {
        need(1, 1);
        return BundleExpr::dual(rec(a[1]));
    }
    if (op == "sum") return BundleExpr::sum(rest(1));
    if (op == "tensor") {
        if (a.size() < 2) throw Error("empty tensor");
        return BundleExpr::tensor(rest(1));
    }
    if (op == "wedge" || op == "sym") {
        need(2, 2);
        const int k = static_cast<int>(detail::read_int(a[1]));
        return op == "wedge" ? BundleExpr::wedge(k, rec(a[2])) : BundleExpr::sym(k, rec(a[2]));
    }
    if (op == "schur") {
        need(2, 2);
        if (a[1].is_atom) throw Error("schur expects a partition list");
        std::vector<int> p;
        for (auto& x : a[1].list) p.push_back(static_cast<int>(detail::read_int(x)));
        return BundleExpr::schur(Partition(p), rec(a[2]));
    }
    if (op == "twist") {
        if (a.size() < 2) throw Error("twist needs a bundle");
        return BundleExpr::twist(rec(a[1]), line_pairs(2));
    }
    if (op == "spinor") {
        need(3, 3);
        if (!a[1].is_atom || (a[1].atom != "+" && a[1].atom != "-")) throw Error("spinor parity must be + or -");
        auto L = rec(a[3]);
        if (L.rank() != 1) throw Error("spinor twist must be a line bundle");
        return spinor_bundle(rec(a[2]), det_expr(L), a[1].atom == "+" ? 1 : -1);
    }
    if (op == "minus") {
        need(2, 2);
        return BundleExpr::minus(rec(a[1]), rec(a[2]));
    }
    if (op == "trivial") {
        need(1, 1);
        return BundleExpr::trivial(detail::read_int(a[1]));
    }
    if (op == "copies") {
        need(2, 2);
        const long long n = detail::read_int(a[1]);
        if (n < 0) throw Error("negative copy count");
        return BundleExpr::sum(std::vector<BundleExpr>(static_cast<std::size_t>(n), rec(a[2])));
    }
    throw Error("unknown bundle operator '" + op + "'");
}

inline BundleExpr parse_bundle(const std::string& text, const SpaceDescriptor* space = nullptr,
                               const std::map<std::string, BundleExpr>& env = {}) {
    return parse_bundle(read_sexpr(text), space, env);
}

}  // namespace odl

#endif
