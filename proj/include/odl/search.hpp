#ifndef ODL_SEARCH_HPP
#define ODL_SEARCH_HPP

#include "odl/bundles.hpp"
#include "odl/odl_catalog.hpp"
#include "odl/spaces.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace odl {

enum class CanonicalTarget { Trivial, Negative };

/// A space X with an assignment of the case's generators to bundles on X, written in the
/// bundle grammar with (O ...), (U i), (Q i) atoms.
struct Candidate {
    SpaceDescriptor space;
    std::string case_id;
    std::map<std::string, std::string> assignment;
};

struct Verdict {
    long long dim = 0;             // dim X - codim
    bool dim_ok = false;
    LineClass canonical;           // K of the locus as a class on X
    bool canonical_ok = false;     // trivial or negative, as requested
    bool constraints_ok = true;    // structure relations hold for the assignment
    bool globally_generated = false;
    long long rep_rank = 0;
    std::optional<SingCodim> sing;
    std::string sing_report;
    bool pass() const { return dim_ok && canonical_ok && constraints_ok && globally_generated; }
};

/// Builds the generator bundles of a candidate on its space. Throws on rank mismatch.
std::map<std::string, BundleExpr> bind_candidate(const Candidate& c, const OrbitCase& oc);

/// Whitelisted global generation: O(d) with d >= 0, quotient bundles, U* on Grassmannians,
/// trivial bundles and their duals, closed under sums, tensors and Schur functors.
bool whitelist_generated(const BundleExpr& e);

Verdict check_candidate(const Candidate& c, long long target_dim, CanonicalTarget target = CanonicalTarget::Trivial);

struct SearchConfig {
    long long target_dim = 4;
    CanonicalTarget canonical = CanonicalTarget::Trivial;
    std::vector<Factor> factors;  // pool; empty means the default pool below
    int max_proj = 9;             // default pool: P^n, n <= max_proj
    int max_grass_n = 9;          // default pool: Gr(k,n), 2 <= k <= n/2, n <= max_grass_n
    int max_quadric = 8;
    bool isotropic = true;        // IGr(k,n), n <= max_grass_n
    bool bisymplectic = false;    // I2Gr(3,8)
    int max_factors = 3;
    int max_slices = 2;
    int max_slice_degree = 3;
    int max_line_degree = 1;
    int max_summands = 3;         // nontrivial summands per generator
    /// Atom families a generator may be built from: "O" (lines O(a), a >= 0), "Q", "U*"
    /// and "trivial" (padding by O). Fixed generators are exempt.
    std::set<std::string> whitelist{"O", "Q", "U*", "trivial"};
    std::map<std::string, std::string> fixed;  // generator -> bundle text, kept as given
    unsigned threads = 0;         // 0: hardware concurrency

    static SearchConfig from_json_text(const std::string& text);
    std::vector<Factor> pool() const;
};

/// Passing candidates in deterministic order, one per orbit of factor permutations.
std::vector<std::pair<Candidate, Verdict>> search(const SearchConfig& cfg, const std::string& case_id);

/// Canonical text of a candidate under permutations of isomorphic factors.
std::string canonical_key(const Candidate& c);

std::string candidate_json(const Candidate& c, const Verdict& v);

struct ExampleCheck {
    std::string list;
    Candidate candidate;
    Verdict verdict;
    std::map<std::string, std::string> extras;  // e.g. holomorphic chi, singular points
    bool pass = false;
    std::string note;
};

std::vector<ExampleCheck> reproduce_examples();

/// The fourfold examples of one list: "mixed(3,4)", "d4a2.Y4", "e6a1.Y5", "e7a1.Y7",
/// "e7a3.Y10", "ihs", "e8a1.Y5", "e8a2.Y4".
std::vector<Candidate> example_list(const std::string& name);

}  // namespace odl

#endif
