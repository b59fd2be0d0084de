#include "esf/sings.hpp"

#include <algorithm>

#include "esf/factor.hpp"

namespace esf {

const char* flavor_name(Flavor f) {
    return f == Flavor::topological ? "topological" : "analytical";
}

Flavor flavor_from_name(const std::string& name) {
    if (name == "topological") return Flavor::topological;
    if (name == "analytical") return Flavor::analytical;
    throw Error(ErrorKind::config, "unknown flavor '" + name + "'");
}

const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::computed: return "computed";
        case Provenance::catalog: return "catalog";
        case Provenance::user: return "user";
    }
    return "?";
}

void SingularityType::validate() const {
    auto fail = [&](const std::string& what) {
        throw Error(ErrorKind::invariant_violation,
                    "singularity type '" + name + "': " + what);
    };
    if (mu < 1) fail("mu must be positive");
    if (tau < 1) fail("tau must be positive");
    if (r < 1) fail("r must be positive");
    if (delta < 1) fail("delta must be positive");
    if (2 * delta != mu + r - 1)
        fail("relation 2*delta = mu + r - 1 fails (delta=" + std::to_string(delta) +
             ", mu=" + std::to_string(mu) + ", r=" + std::to_string(r) + ")");
    if (tau > mu) fail("tau <= mu fails");
    if (mu > 2 * delta) fail("mu <= 2*delta fails");
    if (tau_es) {
        if (*tau_es < 1) fail("tau_es must be positive");
        if (delta > *tau_es) fail("2*delta <= 2*tau_es fails");
    }
    if (deg_x.value < 3) fail("deg X >= 3 fails");
    if (flavor == Flavor::analytical) {
        if (deg_x.value > 3 * tau) fail("deg X <= 3*tau fails");
    } else {
        if (deg_x.value > (3 * mu) / 2 + 2) fail("deg X <= floor(3/2 mu + 2) fails");
    }
    if (deg_x_star && *deg_x_star < 1) fail("deg X* must be positive");
}

bool SingularityType::same_invariants(const SingularityType& o) const {
    return flavor == o.flavor && mu == o.mu && tau == o.tau && r == o.r && delta == o.delta &&
           tau_es == o.tau_es && deg_x.value == o.deg_x.value && deg_x.exact == o.deg_x.exact &&
           deg_x_star == o.deg_x_star;
}

std::uint64_t delta_invariant(std::uint64_t mu, std::uint64_t r) {
    std::uint64_t s = mu + r - 1;
    if (s == 0 || s % 2 != 0)
        throw Error(ErrorKind::parity, "mu + r - 1 = " + std::to_string(s) +
                                           " is not a positive even number; the pair (mu=" +
                                           std::to_string(mu) + ", r=" + std::to_string(r) +
                                           ") is inconsistent");
    return s / 2;
}

std::uint64_t deg_bound(Flavor flavor, std::uint64_t mu, std::uint64_t tau) {
    std::uint64_t b = flavor == Flavor::analytical ? 3 * tau : (3 * mu) / 2 + 2;
    return std::max<std::uint64_t>(b, 3);
}

// ===================================================================
// branch counting
// ===================================================================

namespace {

struct BoundaryPoint {
    std::uint64_t i, j;
};

// Compact segments of the Newton boundary of a convenient power series
// with support points supp (all with non-negative entries).
std::vector<std::pair<BoundaryPoint, BoundaryPoint>>
newton_boundary_segments(std::vector<BoundaryPoint> supp) {
    // left anchor: minimal i, among those minimal j; walk to the right
    // choosing the shallowest descending slope.
    std::vector<std::pair<BoundaryPoint, BoundaryPoint>> segments;
    BoundaryPoint cur = supp[0];
    for (const auto& p : supp) {
        if (p.i < cur.i || (p.i == cur.i && p.j < cur.j)) cur = p;
    }
    while (true) {
        // candidates strictly right of cur and strictly below
        bool have = false;
        BoundaryPoint best{0, 0};
        for (const auto& p : supp) {
            if (p.i <= cur.i || p.j >= cur.j) continue;
            if (!have) {
                best = p;
                have = true;
                continue;
            }
            // steeper slope first: compare (cur.j - p.j)/(p.i - cur.i)
            // pick p with larger drop per width; on ties the farther point
            unsigned long long lhs = (cur.j - p.j) * (best.i - cur.i);
            unsigned long long rhs = (cur.j - best.j) * (p.i - cur.i);
            if (lhs > rhs || (lhs == rhs && p.i > best.i)) {
                best = p;
                have = true;
            }
        }
        if (!have) break;
        segments.push_back({cur, best});
        cur = best;
    }
    return segments;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

// Branches of h, where h has no monomial factor and h(0,0) = 0,
// assuming Newton non-degeneracy; nullopt when some face is degenerate.
std::optional<std::uint64_t> newton_nondegenerate_branches(const Poly& h) {
    std::vector<BoundaryPoint> supp;
    for (const auto& [m, c] : h.terms()) {
        (void)c;
        supp.push_back({m.ex, m.ey});
    }
    auto segments = newton_boundary_segments(std::move(supp));
    std::uint64_t r = 0;
    for (const auto& [from, to] : segments) {
        std::uint64_t w = to.i - from.i;
        std::uint64_t hgt = from.j - to.j;
        std::uint64_t g = gcd_u64(w, hgt);
        // face polynomial restricted to the segment, as P(t) of degree g
        std::vector<Rat> face(g + 1, Rat(0));
        for (std::uint64_t k = 0; k <= g; ++k) {
            Monomial m{static_cast<std::uint32_t>(from.i + k * (w / g)),
                       static_cast<std::uint32_t>(from.j - k * (hgt / g))};
            face[k] = h.coeff(m);
        }
        if (!univariate_squarefree_q(face)) return std::nullopt; // degenerate face
        r += g;
    }
    return r;
}

// splits f = x^a y^b h with h free of monomial factors
struct MonomialSplit {
    std::uint32_t a, b;
    Poly h;
};

MonomialSplit split_monomial_part(const Poly& f) {
    std::uint32_t a = ~0u, b = ~0u;
    for (const auto& [m, c] : f.terms()) {
        (void)c;
        a = std::min(a, m.ex);
        b = std::min(b, m.ey);
    }
    std::vector<Poly::Term> ts;
    for (const auto& [m, c] : f.terms()) ts.push_back({Monomial{m.ex - a, m.ey - b}, c});
    return {a, b, Poly::from_terms(std::move(ts))};
}

} // namespace

std::optional<std::uint64_t> branch_count(const Poly& f) {
    ExtNat mu = milnor_number(f);
    if (mu.is_infinite())
        throw Error(ErrorKind::not_isolated, "branch count needs an isolated singularity");
    if (mu.value() == 0) return 1; // smooth germ: a single branch

    auto [a, b, h] = split_monomial_part(f);
    std::uint64_t base = (a > 0 ? 1 : 0) + (b > 0 ? 1 : 0);
    if (h.is_constant() || !h.constant_term().is_zero()) return base; // unit cofactor

    if (auto direct = newton_nondegenerate_branches(h)) return base + *direct;

    // factor over Q and count each piece via its Newton boundary
    std::vector<Poly> pieces = irreducible_factors(h);
    if (pieces.size() <= 1) return std::nullopt;
    std::uint64_t total = 0;
    for (const auto& p : pieces) {
        if (!p.constant_term().is_zero()) continue; // unit germ at the origin
        auto rp = newton_nondegenerate_branches(p);
        if (!rp) return std::nullopt;
        total += *rp;
    }
    return base + total;
}

// ===================================================================
// catalog
// ===================================================================

Poly catalog_equation(const std::string& name) {
    auto starts_with = [&](const char* prefix) { return name.rfind(prefix, 0) == 0; };
    auto numeric_suffix = [&](std::size_t offset) -> std::optional<std::uint64_t> {
        if (offset >= name.size()) return std::nullopt;
        std::uint64_t v = 0;
        for (std::size_t i = offset; i < name.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
            v = v * 10 + static_cast<std::uint64_t>(name[i] - '0');
            if (v > 100000) return std::nullopt;
        }
        return v;
    };

    if (starts_with("A")) {
        auto k = numeric_suffix(1);
        if (k && *k >= 1)
            return parse_poly("y^2 - x^" + std::to_string(*k + 1));
    } else if (starts_with("D")) {
        auto k = numeric_suffix(1);
        if (k && *k >= 4)
            return parse_poly("x*(y^2 - x^" + std::to_string(*k - 2) + ")");
    } else if (starts_with("E")) {
        auto k = numeric_suffix(1);
        if (k == 6) return parse_poly("x^3 + y^4");
        if (k == 7) return parse_poly("x*(x^2 + y^3)");
        if (k == 8) return parse_poly("x^3 + y^5");
    } else if (starts_with("ord_")) {
        auto m = numeric_suffix(4);
        if (m && *m >= 2 && *m <= 64) {
            Poly p = Poly::one();
            for (std::uint64_t j = 1; j <= *m; ++j) {
                Poly lin = Poly::variable_y() - Poly::variable_x().scaled(Rat(static_cast<long>(j)));
                p = p * lin;
            }
            return p;
        }
    }
    throw Error(ErrorKind::unknown_type, "unknown catalog type '" + name + "'");
}

void Catalog::add_entry(SingularityType entry) {
    entry.validate();
    std::lock_guard<std::mutex> lock(mutex_);
    overlay_[{entry.name, entry.flavor}] = std::move(entry);
}

SingularityType Catalog::lookup_builtin(const std::string& name, Flavor flavor) const {
    Poly eq = catalog_equation(name); // throws unknown_type for foreign names
    ExtNat mu = milnor_number(eq), tau = tjurina_number(eq);
    if (mu.is_infinite() || tau.is_infinite())
        throw Error(ErrorKind::internal, "catalog equation with non-isolated singularity");
    auto r = branch_count(eq);
    if (!r)
        throw Error(ErrorKind::internal, "catalog equation with undecidable branch count");

    SingularityType t;
    t.name = name;
    t.flavor = flavor;
    t.mu = mu.value();
    t.tau = tau.value();
    t.r = *r;
    t.delta = delta_invariant(t.mu, t.r);
    // convention: tau_es defaults to tau for catalog entries; the value is
    // flagged as catalog provenance; users can override it per entry.
    t.tau_es = t.tau;
    t.tau_es_prov = Provenance::catalog;
    t.deg_x.value = deg_bound(flavor, t.mu, t.tau);
    t.deg_x.exact = t.deg_x.value == 3; // pinched against the universal lower bound
    t.deg_x_prov = Provenance::catalog;
    t.deg_x_star = flavor == Flavor::analytical ? t.tau : *t.tau_es;
    t.deg_x_star_prov = Provenance::catalog;
    t.mu_prov = t.tau_prov = t.r_prov = t.delta_prov = Provenance::computed;
    t.validate();
    return t;
}

SingularityType Catalog::lookup(const std::string& name, Flavor flavor) const {
    std::pair<std::string, Flavor> key{name, flavor};
    {
        std::lock_guard<std::mutex> lock(mutex_);
        if (auto it = overlay_.find(key); it != overlay_.end()) return it->second;
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    SingularityType t = lookup_builtin(name, flavor);
    std::lock_guard<std::mutex> lock(mutex_);
    cache_.emplace(key, t);
    return t;
}

const std::vector<std::string>& Catalog::default_names() {
    static const std::vector<std::string> names = {
        "A1", "A2", "A3", "A4", "A5", "A6", "D4", "D5", "D6",
        "E6", "E7", "E8", "ord_2", "ord_3", "ord_4", "ord_5"};
    return names;
}

std::vector<SingularityType> Catalog::default_listing(Flavor flavor) const {
    std::vector<SingularityType> out;
    {
        std::lock_guard<std::mutex> lock(mutex_);
        for (const auto& [key, entry] : overlay_)
            if (key.second == flavor) out.push_back(entry);
    }
    for (const auto& name : default_names()) {
        bool shadowed = false;
        for (const auto& e : out) shadowed = shadowed || e.name == name;
        if (!shadowed) out.push_back(lookup(name, flavor));
    }
    std::sort(out.begin(), out.end(),
              [](const SingularityType& a, const SingularityType& b) { return a.name < b.name; });
    return out;
}

namespace {

void apply_overrides(SingularityType& t, const Overrides& o) {
    if (o.mu) { t.mu = *o.mu; t.mu_prov = Provenance::user; }
    if (o.tau) { t.tau = *o.tau; t.tau_prov = Provenance::user; }
    if (o.r) { t.r = *o.r; t.r_prov = Provenance::user; }
    if (o.delta) { t.delta = *o.delta; t.delta_prov = Provenance::user; }
    if (o.tau_es) { t.tau_es = *o.tau_es; t.tau_es_prov = Provenance::user; }
    if (o.deg_x) { t.deg_x = *o.deg_x; t.deg_x_prov = Provenance::user; }
    if (o.deg_x_star) { t.deg_x_star = *o.deg_x_star; t.deg_x_star_prov = Provenance::user; }
}

} // namespace

SingularityType Catalog::resolve(const SingularitySpec& spec) const {
    int sources = (spec.catalog_name ? 1 : 0) + (spec.equation ? 1 : 0) + (spec.manual ? 1 : 0);
    if (sources != 1)
        throw Error(ErrorKind::config,
                    "singularity spec needs exactly one of: type name, equation, manual record");
    if (spec.count < 1)
        throw Error(ErrorKind::config, "singularity multiplicity must be >= 1");

    if (spec.manual) {
        SingularityType t = *spec.manual;
        t.flavor = spec.flavor;
        apply_overrides(t, spec.overrides);
        t.validate();
        return t;
    }

    if (spec.catalog_name) {
        SingularityType t = lookup(*spec.catalog_name, spec.flavor);
        if (!spec.overrides.empty()) {
            apply_overrides(t, spec.overrides);
            // re-derive dependent fields the user did not pin
            if (spec.overrides.tau_es && !spec.overrides.deg_x_star &&
                t.flavor == Flavor::topological) {
                t.deg_x_star = *t.tau_es;
            }
            t.validate();
        }
        return t;
    }

    // equation source
    Poly f = parse_poly(*spec.equation);
    ExtNat mu = milnor_number(f);
    if (mu.is_infinite())
        throw Error(ErrorKind::not_isolated,
                    "equation '" + *spec.equation + "' has a non-isolated singularity");
    if (mu.value() == 0)
        throw Error(ErrorKind::invariant_violation,
                    "equation '" + *spec.equation + "' defines a smooth germ (mu = 0)");
    ExtNat tau = tjurina_number(f);

    SingularityType t;
    t.name = f.str();
    t.flavor = spec.flavor;
    t.mu = mu.value();
    t.tau = tau.value();
    if (spec.overrides.mu) { t.mu = *spec.overrides.mu; t.mu_prov = Provenance::user; }
    if (spec.overrides.tau) { t.tau = *spec.overrides.tau; t.tau_prov = Provenance::user; }

    if (spec.overrides.r) {
        t.r = *spec.overrides.r;
        t.r_prov = Provenance::user;
    } else {
        auto r = branch_count(f);
        if (!r)
            throw Error(ErrorKind::missing_override,
                        "branch count of '" + *spec.equation +
                            "' is not decidable by the implemented methods; provide r");
        t.r = *r;
    }

    if (spec.overrides.delta) {
        t.delta = *spec.overrides.delta;
        t.delta_prov = Provenance::user;
    } else {
        t.delta = delta_invariant(t.mu, t.r);
    }

    if (spec.overrides.tau_es) {
        t.tau_es = *spec.overrides.tau_es;
        t.tau_es_prov = Provenance::user;
    }

    if (spec.overrides.deg_x) {
        t.deg_x = *spec.overrides.deg_x;
        t.deg_x_prov = Provenance::user;
    } else {
        t.deg_x.value = deg_bound(t.flavor, t.mu, t.tau);
        t.deg_x.exact = t.deg_x.value == 3;
    }

    if (spec.overrides.deg_x_star) {
        t.deg_x_star = *spec.overrides.deg_x_star;
        t.deg_x_star_prov = Provenance::user;
    } else if (t.flavor == Flavor::analytical) {
        t.deg_x_star = t.tau; // deg X^ea = tau: the scheme is cut out by the Tjurina ideal
    } else if (t.tau_es) {
        t.deg_x_star = *t.tau_es;
        t.deg_x_star_prov = t.tau_es_prov;
    }
    // topological equations without tau_es keep deg_x_star unset; the
    // criterion itself does not need it, only expected dimensions do.

    t.validate();
    return t;
}

namespace {

Catalog& default_catalog() {
    static Catalog catalog;
    return catalog;
}

} // namespace

SingularityType catalog_lookup(const std::string& name, Flavor flavor) {
    return default_catalog().lookup(name, flavor);
}

SingularityType resolve_type(const SingularitySpec& spec) {
    return default_catalog().resolve(spec);
}

long long hilbert_family_dimension(const SingularityType& t) {
    if (!t.deg_x.exact)
        throw Error(ErrorKind::inexact_degree,
                    "deg X of '" + t.name + "' is only an upper bound");
    if (!t.deg_x_star)
        throw Error(ErrorKind::missing_invariant, "deg X* of '" + t.name + "' is not set");
    return static_cast<long long>(t.deg_x.value) - static_cast<long long>(*t.deg_x_star);
}

} // namespace esf
