#ifndef ESF_SURFACES_HPP
#define ESF_SURFACES_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "esf/rational.hpp"
#include "esf/sings.hpp"

namespace esf {

enum class ChiMode { standard, paper_compat };

const char* chi_mode_name(ChiMode m);

/// Surface with NS = Z*L, L ample: K = kappa*L. chi(O) is stored in both
/// normalisations; they differ only for hypersurfaces in P^3, where the
/// classical closed-form constant is reproduced by the compat value (see
/// README and the verify-tables command).
struct PicardRankOne {
    long long l_squared = 1;
    long long kappa = 0;
    Rat chi_standard = Rat(1);
    Rat chi_paper_compat = Rat(1);
    ChiMode chi_mode = ChiMode::standard;
    std::string preset; // "P2", "P3:n", "K3:n", or empty for explicit models

    const Rat& chi() const {
        return chi_mode == ChiMode::standard ? chi_standard : chi_paper_compat;
    }
};

/// Sigma = C1 x C2 with NS = C1 Z + C2 Z, intersection form ((0,1),(1,0)).
struct ProductOfCurves {
    long long g1 = 0;
    long long g2 = 0;
};

/// Geometrically ruled surface over a genus-g curve with invariant e <= 0;
/// NS = C0 Z + F Z with intersection form ((-e,1),(1,0)).
struct RuledSurface {
    long long g = 0;
    long long e = 0;
};

class SurfaceModel {
public:
    using Data = std::variant<PicardRankOne, ProductOfCurves, RuledSurface>;

    static SurfaceModel p2();
    static SurfaceModel surface_in_p3(long long n);
    static SurfaceModel k3(long long n);
    static SurfaceModel rank_one(long long l_squared, long long kappa, Rat chi);
    static SurfaceModel product(long long g1, long long g2);
    static SurfaceModel ruled(long long g, long long e);

    /// "P2", "P3:n", "K3:n", "product:g1,g2", "ruled:g,e".
    static SurfaceModel from_preset(const std::string& text);

    const Data& data() const { return data_; }
    bool is_rank_one() const { return std::holds_alternative<PicardRankOne>(data_); }
    bool is_product() const { return std::holds_alternative<ProductOfCurves>(data_); }
    bool is_ruled() const { return std::holds_alternative<RuledSurface>(data_); }
    const PicardRankOne& rank_one_data() const;

    int arity() const { return is_rank_one() ? 1 : 2; }

    void set_chi_mode(ChiMode mode);
    ChiMode chi_mode() const;

    std::string describe() const;
    /// Preset string when built from one, empty otherwise.
    const std::string& preset() const { return preset_; }

private:
    explicit SurfaceModel(Data d, std::string preset = "");
    Data data_;
    std::string preset_;
};

/// Divisor class in the model's NS basis: one coordinate d for rank one,
/// a pair (a, b) otherwise.
struct DivisorClass {
    int arity = 1;
    long long c0 = 0;
    long long c1 = 0;

    static DivisorClass rank_one(long long d) { return {1, d, 0}; }
    static DivisorClass pair(long long a, long long b) { return {2, a, b}; }

    long long d() const { return c0; }
    long long a() const { return c0; }
    long long b() const { return c1; }

    friend DivisorClass operator-(const DivisorClass& x, const DivisorClass& y);
    std::string str() const;
};

long long intersect(const SurfaceModel& model, const DivisorClass& d1, const DivisorClass& d2);

DivisorClass canonical_class(const SurfaceModel& model);

long long d_minus_k_squared(const SurfaceModel& model, const DivisorClass& d);

struct HypothesisResult {
    std::string name;
    std::string formula; // the inequality being tested, in NS coordinates
    Rat lhs;
    Rat rhs;
    bool strict = true; // pass iff lhs < rhs (strict) or lhs <= rhs
    bool pass = false;
};

/// The positivity hypotheses of the per-model criterion, as exact integer
/// or rational inequalities in the divisor coordinates.
std::vector<HypothesisResult> hypothesis_check(const SurfaceModel& model, const DivisorClass& d);

/// chi(O) of a rank-one model, honoring its chi_mode. Other models raise
/// not_rank_one; their criteria never use chi directly.
Rat chi_structure_sheaf(const SurfaceModel& model);

/// chi(O) as used in the dimension formula; defined for every model.
Rat chi_for_dimension(const SurfaceModel& model);

/// (kappa1, kappa2) with (D-K)^2 = 2*kappa1*kappa2 for product and ruled
/// models; their ratio is the table parameter alpha.
std::pair<Rat, Rat> positivity_coordinates(const SurfaceModel& model, const DivisorClass& d);

/// dim|D| - sum k_i deg X*: chi(O) + (D^2 - D.K)/2 - 1 - sum k_i deg X*.
/// Requires the hypotheses to hold (D is then non-special) and every
/// deg X* to be present.
long long expected_dimension(const SurfaceModel& model, const DivisorClass& d,
                             const std::vector<std::pair<SingularityType, std::uint64_t>>& types);

} // namespace esf

#endif
