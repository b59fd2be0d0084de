#include "esf/criteria.hpp"

#include <algorithm>

namespace esf {

const char* bound_mode_name(BoundMode m) {
    switch (m) {
        case BoundMode::deg_x: return "degx";
        case BoundMode::tau_sq: return "tau2";
        case BoundMode::mu_sq: return "mu2";
    }
    return "?";
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::criterion_satisfied: return "CRITERION_SATISFIED";
        case Verdict::not_satisfied: return "NOT_SATISFIED";
        case Verdict::hypotheses_violated: return "HYPOTHESES_VIOLATED";
    }
    return "?";
}

ConditionResult ConditionResult::make(std::string name, Rat lhs, std::variant<Rat, QuadRat> rhs,
                                      bool strict, std::string anchor) {
    ConditionResult c;
    c.name = std::move(name);
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
    c.strict = strict;
    c.anchor = std::move(anchor);
    if (const Rat* r = std::get_if<Rat>(&c.rhs)) {
        c.pass = strict ? c.lhs < *r : c.lhs <= *r;
    } else {
        const QuadRat& q = std::get<QuadRat>(c.rhs);
        int cmp = q.compare(c.lhs); // sign of rhs - lhs
        c.pass = strict ? cmp > 0 : cmp >= 0;
    }
    return c;
}

namespace {

Rat rank_one_denominator(const PicardRankOne& m) {
    Rat kl = Rat(m.kappa) * Rat(m.l_squared); // K.L
    Rat correction = kl.sign() > 0 ? Rat(2) * kl : Rat(0);
    Rat denom = Rat(4) * m.chi() + correction + Rat(6) * Rat(m.l_squared);
    if (!(denom > Rat(0)))
        throw Error(ErrorKind::domain, "gamma denominator 4chi + max{0,2K.L} + 6L^2 must be positive");
    return denom;
}

QuadRat gamma_rank_one_at(const PicardRankOne& model, const Rat& beta) {
    // allows beta in [0, 1/4]; the public entry point enforces beta > 0
    Rat rho = Rat(1) - Rat(4) * beta;
    Rat l2 = Rat(model.l_squared);
    Rat denom = rank_one_denominator(model);
    // (1 + sqrt(rho))^2 = (1 + rho) + 2 sqrt(rho)
    return QuadRat::of((Rat(1) + rho) * l2 / denom, Rat(2) * l2 / denom, rho);
}

} // namespace

QuadRat gamma_rank_one(const PicardRankOne& model, const Rat& beta) {
    if (!(beta > Rat(0)) || beta > Rat(1, 4))
        throw Error(ErrorKind::beta_range, "beta must lie in (0, 1/4], got " + beta.str());
    return gamma_rank_one_at(model, beta);
}

RemarkGamma gamma_remark(const PicardRankOne& model) {
    Rat alpha = rank_one_denominator(model) / Rat(model.l_squared);
    Rat three_alpha_four = Rat(3) * alpha + Rat(4);
    Rat gamma = Rat(36) * alpha / (three_alpha_four * three_alpha_four);
    return {gamma, gamma / Rat(3), alpha};
}

Rat gamma_product(long long g1, long long g2, const Rat& alpha) {
    if (g2 < 0 || g1 < g2)
        throw Error(ErrorKind::domain, "gamma table needs g1 >= g2 >= 0");
    if (!(alpha > Rat(0)))
        throw Error(ErrorKind::domain, "gamma table needs alpha > 0");
    Rat two_alpha = Rat(2) * alpha;
    if (g1 == 0) return Rat(1, 24);
    if (g1 == 1 && g2 == 0) return Rat(1) / std::max(Rat(32), two_alpha);
    if (g2 == 0) return Rat(1) / std::max(Rat(24 + 16 * g1), Rat(4 * g1) * alpha);
    if (g1 == 1 && g2 == 1)
        return Rat(1) / std::max({Rat(32), two_alpha, Rat(2) / alpha});
    return Rat(1) / std::max({Rat(24 + 16 * g1 + 16 * g2), Rat(4 * g1) * alpha,
                              Rat(4 * g2) / alpha});
}

Rat gamma_ruled(long long g, long long e, const Rat& alpha) {
    if (g < 0 || e > 0 || e < -g)
        throw Error(ErrorKind::domain,
                    "gamma table covers ruled surfaces with 0 >= e >= -g only");
    if (!(alpha > Rat(0)))
        throw Error(ErrorKind::domain, "gamma table needs alpha > 0");
    if (g == 0) return Rat(1, 24); // e = 0 forced by e >= -g
    if (g == 1 && e == 0) return Rat(1) / std::max(Rat(24), Rat(2) * alpha);
    if (g == 1 && e == -1) {
        Rat first = std::min(Rat(30) + Rat(16) / alpha + Rat(4) * alpha,
                             Rat(40) + Rat(9) * alpha);
        return Rat(1) / std::max(first, Rat(13, 2) * alpha);
    }
    if (e == 0) return Rat(1) / std::max(Rat(24 + 16 * g), Rat(4 * g) * alpha);
    // g >= 2, e < 0
    Rat ea = Rat(e) * alpha;
    Rat first = std::min(Rat(24 + 16 * g) - Rat(9) * ea,
                         Rat(18 + 16 * g) - Rat(9) * ea - Rat(16) / ea);
    return Rat(1) / std::max(first, Rat(4 * g) * alpha - Rat(9) * ea);
}

namespace {

struct DegreeSurrogate {
    Rat linear; // enters sum k_i * w_i
    Rat square; // enters sum k_i * s_i with the mode's own right-hand scale
};

DegreeSurrogate surrogate(BoundMode mode, const SingularityType& t) {
    switch (mode) {
        case BoundMode::deg_x: {
            Rat w = Rat(static_cast<long>(t.deg_x.value));
            return {w, w * w};
        }
        case BoundMode::tau_sq: {
            Rat tau = Rat(static_cast<long>(t.tau));
            return {Rat(3) * tau, tau * tau};
        }
        case BoundMode::mu_sq: {
            Rat mu = Rat(static_cast<long>(t.mu));
            Rat w = Rat(3, 2) * mu + Rat(2);
            Rat s = mu + Rat(4, 3);
            return {w, s * s};
        }
    }
    throw Error(ErrorKind::internal, "unhandled bound mode");
}

// scale of the right-hand side gamma*(D-K)^2 under the mode
Rat mode_rhs_scale(BoundMode mode) {
    switch (mode) {
        case BoundMode::deg_x: return Rat(1);
        case BoundMode::tau_sq: return Rat(1, 9);
        case BoundMode::mu_sq: return Rat(4, 9);
    }
    return Rat(1);
}

std::string mode_sum_name(BoundMode mode, bool squared) {
    switch (mode) {
        case BoundMode::deg_x: return squared ? "sum k*degX^2" : "sum k*degX";
        case BoundMode::tau_sq: return squared ? "sum k*tau^2" : "sum k*3tau";
        case BoundMode::mu_sq: return squared ? "sum k*(mu+4/3)^2" : "sum k*(3/2 mu+2)";
    }
    return "?";
}

} // namespace

namespace {

void dedupe_notes(std::vector<std::string>& notes) {
    std::vector<std::string> unique;
    for (auto& n : notes)
        if (std::find(unique.begin(), unique.end(), n) == unique.end())
            unique.push_back(std::move(n));
    notes = std::move(unique);
}

} // namespace

CriterionReport evaluate(const SurfaceModel& model_in, const DivisorClass& divisor,
                         const std::vector<SingularitySpec>& specs, const EvalOptions& options,
                         const Catalog* catalog) {
    static const Catalog default_catalog;
    const Catalog& cat = catalog ? *catalog : default_catalog;

    SurfaceModel model = model_in;
    if (options.chi_mode) model.set_chi_mode(*options.chi_mode);

    CriterionReport report{model, divisor, {}, Rat(0), std::nullopt, std::nullopt,
                           false, {}, {}, Verdict::not_satisfied, std::nullopt,
                           options.bound_mode, {}};

    // resolve and merge
    std::optional<Flavor> flavor;
    for (const auto& spec : specs) {
        if (flavor && spec.flavor != *flavor)
            throw Error(ErrorKind::config,
                        "mixed topological and analytical types in one family are not supported; "
                        "the criteria fix one equivalence notion");
        flavor = spec.flavor;
        SingularityType t = cat.resolve(spec);
        bool merged = false;
        for (auto& existing : report.types) {
            if (existing.type.same_invariants(t)) {
                existing.count += spec.count;
                merged = true;
                break;
            }
        }
        if (merged)
            report.notes.push_back("types with identical invariant records were merged; "
                                   "genuine pairwise distinctness is assumed, not verified");
        else
            report.types.push_back({std::move(t), spec.count});
    }

    // hypotheses
    bool hyp_pass = true;
    for (const auto& h : hypothesis_check(model, divisor)) {
        report.hypotheses.push_back(
            ConditionResult::make(h.name, h.lhs, h.rhs, h.strict, h.formula));
        hyp_pass = hyp_pass && h.pass;
    }

    long long dk2_ll = d_minus_k_squared(model, divisor);
    report.dk2 = Rat(dk2_ll);

    if (!hyp_pass) {
        report.verdict = Verdict::hypotheses_violated;
        report.notes.push_back(
            "positivity hypotheses fail; the numeric conditions were not evaluated");
        dedupe_notes(report.notes);
        return report;
    }

    // degree sums
    Rat s1(0), s2(0);
    bool any_bound_only = false;
    for (const auto& [t, count] : report.types) {
        DegreeSurrogate w = surrogate(options.bound_mode, t);
        Rat k = Rat(static_cast<long>(count));
        s1 += k * w.linear;
        s2 += k * w.square;
        if (options.bound_mode == BoundMode::deg_x && !t.deg_x.exact) any_bound_only = true;
    }
    if (any_bound_only)
        report.notes.push_back("some deg X values are upper bounds; a PASS verdict remains valid");

    const Rat rhs_scale = mode_rhs_scale(options.bound_mode);
    const std::string s1_name = mode_sum_name(options.bound_mode, false);
    const std::string s2_name = mode_sum_name(options.bound_mode, true);

    if (model.is_rank_one()) {
        const auto& m = model.rank_one_data();
        Rat beta;
        if (options.beta.auto_mode) {
            // existence of a witnessing beta: gamma is continuous and strictly
            // decreasing, so some beta > S1/(D-K)^2 works exactly when the two
            // strict inequalities below hold.
            beta = s1 / report.dk2;
            report.beta_auto = true;
            if (beta > Rat(1, 4)) {
                report.notes.push_back("no admissible beta exists (degree sum exceeds a quarter "
                                       "of (D-K)^2); gamma shown at beta = 1/4");
                beta = Rat(1, 4);
            } else {
                report.notes.push_back("auto beta resolved at " + s1_name + " / (D-K)^2 = " +
                                       beta.str());
            }
            report.conditions.push_back(ConditionResult::make(
                s1_name + " vs (D-K)^2/4", s1, report.dk2 * Rat(1, 4), true,
                s1_name + " < 1/4*(D-K)^2"));
        } else {
            beta = options.beta.value;
            if (!(beta > Rat(0)) || beta > Rat(1, 4))
                throw Error(ErrorKind::beta_range,
                            "beta must lie in (0, 1/4], got " + beta.str());
            report.conditions.push_back(ConditionResult::make(
                s1_name + " vs beta*(D-K)^2", s1, beta * report.dk2, true,
                s1_name + " < beta*(D-K)^2 at beta = " + beta.str()));
        }
        report.beta = beta;
        QuadRat gamma = gamma_rank_one_at(m, beta);
        report.gamma = gamma;
        QuadRat rhs = gamma.scaled(rhs_scale * report.dk2);
        report.conditions.push_back(ConditionResult::make(
            s2_name + " vs gamma*(D-K)^2", s2,
            rhs.is_rational() ? std::variant<Rat, QuadRat>(rhs.rational_value())
                              : std::variant<Rat, QuadRat>(rhs),
            true,
            s2_name + " < " + (rhs_scale == Rat(1) ? std::string("gamma") :
                               rhs_scale.str() + "*gamma") + "*(D-K)^2"));
    } else {
        auto [k1, k2] = positivity_coordinates(model, divisor);
        Rat alpha = k1 / k2; // k1, k2 > 0 once the hypotheses hold
        Rat gamma;
        if (model.is_product()) {
            const auto& p = std::get<ProductOfCurves>(model.data());
            gamma = gamma_product(p.g1, p.g2, alpha);
        } else {
            const auto& s = std::get<RuledSurface>(model.data());
            gamma = gamma_ruled(s.g, s.e, alpha);
        }
        report.gamma = gamma;
        report.notes.push_back("table parameter alpha = " + alpha.str());
        report.conditions.push_back(ConditionResult::make(
            s2_name + " vs gamma*(D-K)^2", s2, gamma * rhs_scale * report.dk2, true,
            s2_name + " < " + (rhs_scale == Rat(1) ? std::string("gamma") :
                               rhs_scale.str() + "*gamma") + "*(D-K)^2"));
    }

    bool cond_pass = true;
    for (const auto& c : report.conditions) cond_pass = cond_pass && c.pass;
    report.verdict = cond_pass ? Verdict::criterion_satisfied : Verdict::not_satisfied;

    // expected dimension, when every deg X* is known
    bool have_all_star = true;
    for (const auto& [t, count] : report.types) {
        (void)count;
        if (!t.deg_x_star) {
            have_all_star = false;
            report.notes.push_back("expected dimension unavailable: deg X* of '" + t.name +
                                   "' is not set (tau_es needed)");
        }
    }
    if (have_all_star) {
        std::vector<std::pair<SingularityType, std::uint64_t>> pairs;
        for (const auto& rs : report.types) pairs.push_back({rs.type, rs.count});
        try {
            report.expected_dimension = expected_dimension(model, divisor, pairs);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::invariant_violation) throw;
            report.notes.push_back(std::string("expected dimension omitted: ") + e.what());
        }
    }
    for (const auto& [t, count] : report.types) {
        (void)count;
        if (t.tau_es && t.tau_es_prov == Provenance::catalog) {
            report.notes.push_back(
                "tau_es values default to tau for catalog entries (a convention, overridable)");
            break;
        }
    }
    if (report.types.size() >= 2)
        report.notes.push_back("pairwise distinctness of the listed types is assumed");
    if (model.chi_mode() == ChiMode::paper_compat)
        report.notes.push_back("chi(O) taken in paper-compat normalisation");

    dedupe_notes(report.notes);
    return report;
}

} // namespace esf
