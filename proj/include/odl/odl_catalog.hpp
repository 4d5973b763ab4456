#ifndef ODL_ODL_CATALOG_HPP
#define ODL_ODL_CATALOG_HPP

#include "odl/bundles.hpp"
#include "odl/core.hpp"
#include "odl/lie_core.hpp"
#include "odl/resolutions.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace odl {

/// Codimension of the singular locus; `at_least` marks a lower bound.
struct SingCodim {
    int value = 0;
    bool at_least = false;
    std::string str() const { return (at_least ? ">=" : "") + std::to_string(value); }
};

/// How a record's generator of a group factor is realised (see resolutions.hpp).
struct RealizationSpec {
    std::string kind;   // "gl" or "table"
    std::string bundle; // gl: generator carrying the Schur functors
    std::string piece;  // this factor's piece of the represented bundle
    std::map<std::string, std::string> labels;  // table: label key -> bundle expression
};

/// Weight data of a homogeneous bundle W over G/P for the crepancy test.
/// Coordinates are concatenated over blocks; a block is GL_n ('A') or a classical
/// group of type B, C, D in epsilon coordinates. `grading` selects the parabolic: the
/// nilradical is the set of positive roots pairing positively with it.
struct CollapsingData {
    struct Block {
        char family = 'A';
        int n = 1;
        QVec grading;
    };
    std::string label;
    std::vector<Block> blocks;
    std::vector<QVec> weights;

    std::size_t coords() const;
    long long rank() const { return static_cast<long long>(weights.size()); }
    long long base_dim() const { return static_cast<long long>(nilradical().size()); }
    std::vector<QVec> nilradical() const;
};

struct CrepancyReport {
    bool crepant = false;
    QVec weight_sum;
    QVec nilradical_sum;
    QVec difference;  // zero modulo the characters of the GL blocks iff crepant
};

/// Compares the sum of the weights of W with the sum of the nilradical roots, modulo
/// characters of the group (the all-ones vector of each GL block).
CrepancyReport crepancy_check(const CollapsingData& cd);

/// Named collapsings used by the catalog and the tests.
CollapsingData collapsing_by_name(const std::string& name);
/// W_{(L,I,J)} over SGr(d, V2) x F(r-d, r, V1) for Hom(V2, V1), V2 of type B, C or D.
CollapsingData mixed_collapsing(int d1, int d2, int r, int d, char family);
/// Hom(Q, V1) over the isotropic Grassmannian of (d2 - r)-planes in V2.
CollapsingData isotropic_hom_collapsing(int d1, int d2, int r, char family);

struct OrbitCase {
    std::string id;
    std::string lie_case;
    std::string group;
    std::vector<std::pair<std::string, int>> generators;  // rank 1 generators are line bundles
    std::string rep_text;
    std::map<std::string, LineClass> constraints;  // det-symbol -> class it equals
    int codim = 0;
    std::optional<int> codim_stated;  // printed value when it differs from codim
    std::optional<SingCodim> sing;
    std::optional<SingCodim> sing_stated;
    std::optional<int> n;
    std::string n_source;
    std::optional<std::pair<LieType, int>> cone;
    LineClass exponents;
    std::optional<Resolution> resolution;
    std::vector<RealizationSpec> realization;
    std::string collapsing;
    bool gorenstein = true;
    std::string provenance = "display";

    /// Abstract generators as bundles.
    std::map<std::string, BundleExpr> env() const;
    BundleExpr rep() const { return rep(env()); }
    /// The represented bundle with generators bound by `bind`.
    BundleExpr rep(const std::map<std::string, BundleExpr>& bind) const;
    long long rep_rank() const { return rep().rank(); }
    std::vector<FactorRealization> realizations(const std::map<std::string, BundleExpr>& bind) const;
    std::vector<FactorRealization> realizations() const { return realizations(env()); }
};

struct NonGorensteinRecord {
    std::string id, lie_case, orbit, remark;
};

/// Immutable catalog: the JSON records plus the generated classical families.
class Catalog {
public:
    static const Catalog& builtin();
    static Catalog from_json_text(const std::string& text);

    int version() const { return version_; }
    /// Catalogued records followed by nothing generated.
    const std::vector<OrbitCase>& records() const { return cases_; }
    const std::vector<NonGorensteinRecord>& non_gorenstein() const { return non_gor_; }
    /// Accepts record ids and family ids: det(e,r), skew(e,r), sym(e,r), grass(k,e), mixed(d1,d2).
    OrbitCase get(const std::string& id) const;
    bool has(const std::string& id) const;

private:
    int version_ = 0;
    std::vector<OrbitCase> cases_;
    std::vector<NonGorensteinRecord> non_gor_;
};

OrbitCase case_info(const std::string& id);

/// Classical families.
OrbitCase determinantal_case(int e, int r);
OrbitCase skew_case(int e, int r);
OrbitCase sym_case(int e, int r);
OrbitCase grass_cone_case(int k, int e);
OrbitCase mixed_case(int d1, int d2);

/// Substitutes det-symbols by the classes they are constrained to equal.
LineClass apply_constraints(const LineClass& c, const std::map<std::string, LineClass>& constraints);

struct ExponentSolution {
    LineClass exponents;
    Q t;                             // exponents = t * det(rep)
    std::map<std::string, Q> grading;  // degree functional: 1 on every weight of rep
};

/// Solves x = t det(rep), phi(x) = N phi-weight for the degree functional phi of rep,
/// after applying the constraints; the answer must be unique and integral.
ExponentSolution solve_canonical_exponents(long long n, const BundleExpr& rep,
                                           const std::map<std::string, LineClass>& constraints = {});

/// N = dim V_{omega_node} - index of G/P_node for the cone over G/P.
long long n_from_index(LieType t, int node);

/// The last twist derived without reference to the stated value (resolution, cone,
/// crepant collapsing); empty when the record only states N.
std::optional<long long> derived_n(const OrbitCase& c);

struct DimensionReport {
    int codim = 0;
    std::optional<SingCodim> sing;
    long long rep_rank = 0;
    std::optional<int> codim_stated;
    std::optional<SingCodim> sing_stated;
};

/// Instantiated numbers; `ranks` may rebind generator ranks of the same names.
DimensionReport dimension_report(const std::string& id, const std::map<std::string, int>& ranks = {});

}  // namespace odl

#endif
