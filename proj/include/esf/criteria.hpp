#ifndef ESF_CRITERIA_HPP
#define ESF_CRITERIA_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "esf/quadrat.hpp"
#include "esf/sings.hpp"
#include "esf/surfaces.hpp"

namespace esf {

/// Which invariant feeds the degree sums: deg X itself, tau^2 (analytical
/// replacement), or (mu + 4/3)^2 (topological replacement).
enum class BoundMode { deg_x, tau_sq, mu_sq };

const char* bound_mode_name(BoundMode m);

struct BetaSpec {
    bool auto_mode = true;
    Rat value = Rat(1, 4); // used when auto_mode == false

    static BetaSpec automatic() { return {true, Rat(1, 4)}; }
    static BetaSpec fixed(Rat v) { return {false, std::move(v)}; }
};

struct EvalOptions {
    BoundMode bound_mode = BoundMode::deg_x;
    BetaSpec beta = BetaSpec::automatic();
    std::optional<ChiMode> chi_mode; // overrides the model's mode when set
};

struct ConditionResult {
    std::string name;
    Rat lhs;
    std::variant<Rat, QuadRat> rhs;
    bool strict = true;
    bool pass = false;
    std::string anchor; // the inequality, written out

    static ConditionResult make(std::string name, Rat lhs, std::variant<Rat, QuadRat> rhs,
                                bool strict, std::string anchor);
};

enum class Verdict { criterion_satisfied, not_satisfied, hypotheses_violated };

const char* verdict_name(Verdict v);

struct ResolvedSing {
    SingularityType type;
    std::uint64_t count = 1;
};

struct CriterionReport {
    SurfaceModel model;
    DivisorClass divisor;
    std::vector<ResolvedSing> types;
    Rat dk2 = Rat(0); // (D-K)^2
    std::optional<std::variant<Rat, QuadRat>> gamma;
    std::optional<Rat> beta;          // rank one: the beta the check ran at
    bool beta_auto = false;
    std::vector<ConditionResult> hypotheses;
    std::vector<ConditionResult> conditions;
    Verdict verdict = Verdict::not_satisfied;
    std::optional<long long> expected_dimension;
    BoundMode bound_mode = BoundMode::deg_x;
    std::vector<std::string> notes;
};

/// gamma of the rank-one criterion at a given beta in (0, 1/4]:
/// (1 + sqrt(1-4 beta))^2 L^2 / (4 chi(O) + max{0, 2 K.L} + 6 L^2).
QuadRat gamma_rank_one(const PicardRankOne& model, const Rat& beta);

struct RemarkGamma {
    Rat gamma;
    Rat beta;  // gamma / 3
    Rat alpha; // (4 chi + max{0, 2 K.L} + 6 L^2) / L^2
};

/// The closed rational form gamma = 36 alpha / (3 alpha + 4)^2 that makes
/// the degree-sum condition redundant; beta = gamma/3 <= 1/4 always.
RemarkGamma gamma_remark(const PicardRankOne& model);

/// Table value for products of curves; alpha = (a-2g2+2)/(b-2g1+2) > 0.
Rat gamma_product(long long g1, long long g2, const Rat& alpha);

/// Table value for ruled surfaces; alpha = (a+2)/(b+2-2g-ae/2) > 0.
Rat gamma_ruled(long long g, long long e, const Rat& alpha);

/// Resolves the specs, checks the hypotheses, evaluates the numeric
/// conditions of the matching criterion and assembles the full report.
CriterionReport evaluate(const SurfaceModel& model, const DivisorClass& divisor,
                         const std::vector<SingularitySpec>& specs, const EvalOptions& options,
                         const Catalog* catalog = nullptr);

} // namespace esf

#endif
