#ifndef ESF_SINGS_HPP
#define ESF_SINGS_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "esf/localalg.hpp"
#include "esf/poly.hpp"

namespace esf {

enum class Flavor { topological, analytical };

const char* flavor_name(Flavor f);
Flavor flavor_from_name(const std::string& name);

enum class Provenance { computed, catalog, user };

const char* provenance_name(Provenance p);

/// deg X(S): either an exact value or a certified upper bound.
struct DegX {
    std::uint64_t value = 0;
    bool exact = false;
};

/// Complete invariant record of a singularity type.
struct SingularityType {
    std::string name;
    Flavor flavor = Flavor::topological;
    std::uint64_t mu = 0;
    std::uint64_t tau = 0;
    std::uint64_t r = 0;
    std::uint64_t delta = 0;
    std::optional<std::uint64_t> tau_es; // topological analogue of tau
    DegX deg_x;
    std::optional<std::uint64_t> deg_x_star;

    Provenance mu_prov = Provenance::computed;
    Provenance tau_prov = Provenance::computed;
    Provenance r_prov = Provenance::computed;
    Provenance delta_prov = Provenance::computed;
    Provenance tau_es_prov = Provenance::computed;
    Provenance deg_x_prov = Provenance::computed;
    Provenance deg_x_star_prov = Provenance::computed;

    /// Checks every relation between the invariants; throws
    /// invariant_violation naming the first failing one.
    void validate() const;

    /// Field-wise equality of the invariant data, ignoring name and
    /// provenance. Types that agree here are merged in reports.
    bool same_invariants(const SingularityType& o) const;
};

struct Overrides {
    std::optional<std::uint64_t> mu, tau, r, delta, tau_es, deg_x_star;
    std::optional<DegX> deg_x;
    bool empty() const {
        return !mu && !tau && !r && !delta && !tau_es && !deg_x_star && !deg_x;
    }
};

/// Input description of one singularity type with multiplicity: a
/// catalog name, a local equation, or a full manual record.
struct SingularitySpec {
    std::optional<std::string> catalog_name;
    std::optional<std::string> equation;
    std::optional<SingularityType> manual;
    Flavor flavor = Flavor::topological;
    std::uint64_t count = 1;
    Overrides overrides;
};

/// Number of branches of the germ at the origin, when the implemented
/// methods decide it: monomial-part splitting, the Newton-nondegenerate
/// case (counted segment-by-segment on the Newton boundary), and
/// factorisation over Q with the pieces handled by the former. Returns
/// nullopt ("Unknown") otherwise; throws not_isolated for infinite mu.
std::optional<std::uint64_t> branch_count(const Poly& f);

/// (mu + r - 1) / 2; throws parity error when mu + r - 1 is odd.
std::uint64_t delta_invariant(std::uint64_t mu, std::uint64_t r);

/// Upper bound for deg X(S): 3*tau (analytical) or floor(3/2 mu + 2)
/// (topological), clamped from below by 3.
std::uint64_t deg_bound(Flavor flavor, std::uint64_t mu, std::uint64_t tau);

/// Local equation of a built-in catalog type.
Poly catalog_equation(const std::string& name);

/// Resolves singularity types, consulting an optional overlay of
/// user-supplied records before the built-in families A_k (k>=1),
/// D_k (k>=4), E_6..E_8 and ord_m (m>=2). Lookups are cached; the
/// catalog is immutable once populated and safe to share across threads.
class Catalog {
public:
    Catalog() = default;

    /// Adds (or replaces) an overlay entry; the record is validated.
    void add_entry(SingularityType entry);

    SingularityType lookup(const std::string& name, Flavor flavor) const;

    SingularityType resolve(const SingularitySpec& spec) const;

    /// The default listing: overlay entries plus representatives of the
    /// built-in families (A1-A6, D4-D6, E6-E8, ord_2-ord_5).
    std::vector<SingularityType> default_listing(Flavor flavor) const;

    static const std::vector<std::string>& default_names();

private:
    std::map<std::pair<std::string, Flavor>, SingularityType> overlay_;
    mutable std::map<std::pair<std::string, Flavor>, SingularityType> cache_;
    mutable std::mutex mutex_;

    SingularityType lookup_builtin(const std::string& name, Flavor flavor) const;
};

/// Built-in catalog lookup (shared default catalog, no overlay).
SingularityType catalog_lookup(const std::string& name, Flavor flavor);

/// resolve against the shared default catalog.
SingularityType resolve_type(const SingularitySpec& spec);

/// deg X - deg X*; requires an exact deg X and a present deg X*.
long long hilbert_family_dimension(const SingularityType& t);

} // namespace esf

#endif
