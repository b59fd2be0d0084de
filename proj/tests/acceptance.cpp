// Acceptance suite: one line per criterion, non-zero exit on any failure.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "esf/cli.hpp"
#include "esf/criteria.hpp"
#include "esf/factor.hpp"
#include "esf/localalg.hpp"
#include "gen.hpp"
#include "oracle.hpp"

using namespace esf;

namespace {

struct Suite {
    bool all_pass = true;

    void report(int id, const std::string& name, bool pass, const std::string& detail = "") {
        all_pass = all_pass && pass;
        std::cout << "criterion " << id << " [" << name << "]: " << (pass ? "PASS" : "FAIL");
        if (!detail.empty()) std::cout << " (" << detail << ")";
        std::cout << "\n";
    }
};

SingularitySpec catalog_spec(const std::string& name, Flavor flavor, std::uint64_t count) {
    SingularitySpec s;
    s.catalog_name = name;
    s.flavor = flavor;
    s.count = count;
    return s;
}

Rat condition_rhs(const CriterionReport& report, std::size_t index) {
    const auto& rhs = report.conditions.at(index).rhs;
    if (const Rat* r = std::get_if<Rat>(&rhs)) return *r;
    const QuadRat& q = std::get<QuadRat>(rhs);
    return q.rational_value();
}

// --- criterion 1: the plane constant -------------------------------------

bool criterion_p2(std::string& detail) {
    RemarkGamma remark = gamma_remark(SurfaceModel::p2().rank_one_data());
    if (!(remark.gamma == Rat(90, 289))) {
        detail = "gamma != 90/289";
        return false;
    }
    EvalOptions opts;
    opts.beta = BetaSpec::fixed(remark.beta);
    for (long long d = 3; d <= 20; ++d) {
        CriterionReport r =
            evaluate(SurfaceModel::p2(), DivisorClass::rank_one(d), {}, opts);
        Rat rhs = condition_rhs(r, 1);
        if (!(rhs == Rat(90, 289) * Rat((d + 3) * (d + 3)))) {
            detail = "criterion rhs mismatch at d = " + std::to_string(d);
            return false;
        }
    }
    detail = "gamma = 90/289, rhs = 90/289*(d+3)^2 for d = 3..20";
    return true;
}

// --- criterion 2: K3 constants --------------------------------------------

bool criterion_k3(std::string& detail) {
    for (long long n : {4, 6, 8}) {
        RemarkGamma remark = gamma_remark(SurfaceModel::k3(n).rank_one_data());
        EvalOptions opts;
        opts.beta = BetaSpec::fixed(remark.beta);
        for (long long d : {1, 2, 5}) {
            CriterionReport r =
                evaluate(SurfaceModel::k3(n), DivisorClass::rank_one(d), {}, opts);
            Rat rhs = condition_rhs(r, 1);
            Rat expect = Rat(54 * n * n + 72 * n) / Rat((11 * n + 12) * (11 * n + 12)) *
                         Rat(d * d) * Rat(n);
            if (!(rhs == expect)) {
                detail = "mismatch at n = " + std::to_string(n) + ", d = " + std::to_string(d);
                return false;
            }
        }
    }
    detail = "rhs = (54n^2+72n)/(11n+12)^2 * d^2 * n for n in {4,6,8}";
    return true;
}

// --- criterion 3: the hypersurface discrepancy ----------------------------

bool criterion_p3(std::string& detail) {
    for (long long n : {4, 5, 6}) {
        SurfaceModel compat = SurfaceModel::surface_in_p3(n);
        compat.set_chi_mode(ChiMode::paper_compat);
        Rat got_pc = gamma_remark(compat.rank_one_data()).gamma * Rat(n);
        long long a = n * n * n - 3 * n * n + 8 * n - 6;
        long long b = n * n * n - 3 * n * n + 10 * n - 6;
        if (!(got_pc == Rat(6 * a * n * n) / Rat(b * b))) {
            detail = "paper-compat coefficient mismatch at n = " + std::to_string(n);
            return false;
        }
        Rat got_std = gamma_remark(SurfaceModel::surface_in_p3(n).rank_one_data()).gamma * Rat(n);
        long long a2 = n * n * n - 3 * n * n + 8 * n;
        long long b2 = n * n * n - 3 * n * n + 10 * n;
        if (!(got_std == Rat(6 * a2 * n * n) / Rat(b2 * b2))) {
            detail = "standard coefficient mismatch at n = " + std::to_string(n);
            return false;
        }
    }
    Rat p34 = gamma_remark(SurfaceModel::surface_in_p3(4).rank_one_data()).gamma;
    Rat k34 = gamma_remark(SurfaceModel::k3(4).rank_one_data()).gamma;
    if (!(p34 == k34)) {
        detail = "P3(4) standard does not match K3(4)";
        return false;
    }
    std::ostringstream sink;
    if (cli::cmd_verify_tables(sink) != 0) {
        detail = "verify-tables reported a mismatch";
        return false;
    }
    detail = "printed constants under paper-compat for n in {4,5,6}; P3(4) std = K3(4) = 18/49";
    return true;
}

// --- criterion 4: the negative control ------------------------------------

bool criterion_referee(const std::string& cli_path, const std::string& data_dir,
                       std::string& detail) {
    CriterionReport r = evaluate(SurfaceModel::surface_in_p3(4), DivisorClass::rank_one(1),
                                 {catalog_spec("A1", Flavor::topological, 3)}, EvalOptions{});
    if (r.verdict != Verdict::not_satisfied) {
        detail = "library verdict is not NOT_SATISFIED";
        return false;
    }
    if (!r.expected_dimension || *r.expected_dimension != 0) {
        detail = "expected dimension is not 0";
        return false;
    }
    if (cli_path.empty()) {
        detail = "library checks only (no CLI path given)";
        return true;
    }
    auto run = [&](const std::string& args) {
        int status = std::system((cli_path + " " + args + " > /dev/null 2>&1").c_str());
        return WEXITSTATUS(status);
    };
    int referee = run("check " + data_dir + "/referee.json");
    int positive = run("check " + data_dir + "/p2_d10_5a1.json");
    int uncovered = run("check " + data_dir + "/ruled_uncovered.json");
    int verify = run("verify-tables");
    if (referee != 1 || positive != 0 || uncovered != 3 || verify != 0) {
        detail = "CLI exits: referee=" + std::to_string(referee) +
                 " positive=" + std::to_string(positive) +
                 " uncovered=" + std::to_string(uncovered) + " verify=" + std::to_string(verify);
        return false;
    }
    detail = "NOT_SATISFIED, expected dimension 0; CLI exit codes 1/0/3/0";
    return true;
}

// --- criterion 5: engine vs oracle ----------------------------------------

bool criterion_oracle(std::string& detail) {
    for (const auto& name : Catalog::default_names()) {
        Poly f = catalog_equation(name);
        Poly fx = partial_derivative(f, Var::x), fy = partial_derivative(f, Var::y);
        ExtNat mu = milnor_number(f), tau = tjurina_number(f);
        if (!mu.is_finite() || !tau.is_finite()) {
            detail = name + ": engine reports non-isolated";
            return false;
        }
        auto mu_o = testing::local_quotient_dim_bruteforce({fx, fy}, 2 * mu.value() + 4);
        auto tau_o = testing::local_quotient_dim_bruteforce({f, fx, fy}, 2 * tau.value() + 4);
        if (!mu_o || *mu_o != mu.value()) {
            detail = name + ": mu oracle disagrees";
            return false;
        }
        if (!tau_o || *tau_o != tau.value()) {
            detail = name + ": tau oracle disagrees";
            return false;
        }
    }
    for (unsigned a = 2; a <= 6; ++a)
        for (unsigned b = 2; b <= 6; ++b) {
            Poly f = parse_poly("x^" + std::to_string(a) + " + y^" + std::to_string(b));
            ExtNat mu = milnor_number(f);
            if (!mu.is_finite() || mu.value() != std::uint64_t(a - 1) * (b - 1)) {
                detail = "mu(x^a + y^b) != (a-1)(b-1)";
                return false;
            }
            auto oracle = testing::local_quotient_dim_bruteforce(
                {partial_derivative(f, Var::x), partial_derivative(f, Var::y)},
                2 * mu.value() + 4);
            if (!oracle || *oracle != mu.value()) {
                detail = "oracle disagrees on x^a + y^b";
                return false;
            }
        }
    detail = "catalog mu/tau equal the linear-algebra oracle; mu(x^a+y^b) = (a-1)(b-1)";
    return true;
}

// --- criterion 6: relation suite -------------------------------------------

bool criterion_relations(std::string& detail) {
    for (Flavor flavor : {Flavor::topological, Flavor::analytical}) {
        for (const auto& name : Catalog::default_names()) {
            SingularityType t = catalog_lookup(name, flavor);
            bool ok = 2 * t.delta == t.mu + t.r - 1;
            ok = ok && t.tau <= t.mu;
            ok = ok && t.mu <= 2 * t.delta;
            ok = ok && t.tau_es && t.delta <= *t.tau_es;
            ok = ok && t.deg_x.value >= 3;
            if (flavor == Flavor::analytical)
                ok = ok && t.deg_x.value <= 3 * t.tau;
            else
                ok = ok && t.deg_x.value <= (3 * t.mu) / 2 + 2;
            try {
                t.validate();
            } catch (const Error&) {
                ok = false;
            }
            if (!ok) {
                detail = std::string(flavor_name(flavor)) + " " + name + " violates a relation";
                return false;
            }
        }
    }
    detail = "2delta = mu+r-1, tau <= mu, mu <= 2delta <= 2tau_es, degree bounds with floor 3";
    return true;
}

// --- criterion 7: the remark identity ---------------------------------------

bool criterion_remark(std::string& detail) {
    testing::Gen gen(20260809);
    for (int i = 0; i < 1000; ++i) {
        Rat alpha = i == 0 ? Rat(4, 3) : gen.positive_rational(2000, 500);
        Rat lhs = (Rat(3) * alpha + Rat(4)).pow(2) - Rat(48) * alpha;
        Rat rhs = (Rat(3) * alpha - Rat(4)).pow(2);
        if (!(lhs == rhs) || lhs.sign() < 0) {
            detail = "identity fails at alpha = " + alpha.str();
            return false;
        }
        bool is_zero = lhs.is_zero();
        if (is_zero != (alpha == Rat(4, 3))) {
            detail = "equality case mismatch at alpha = " + alpha.str();
            return false;
        }
    }
    for (const char* preset : {"P2", "P3:4", "P3:5", "P3:6", "K3:4", "K3:6", "K3:8"}) {
        SurfaceModel model = SurfaceModel::from_preset(preset);
        const PicardRankOne& m = model.rank_one_data();
        RemarkGamma remark = gamma_remark(m);
        if (remark.beta > Rat(1, 4)) {
            detail = std::string(preset) + ": beta above 1/4";
            return false;
        }
        QuadRat through_beta = gamma_rank_one(m, remark.beta);
        if (!through_beta.is_rational() ||
            !(through_beta.rational_value() == remark.gamma)) {
            detail = std::string(preset) + ": gamma(beta) != remark gamma";
            return false;
        }
    }
    detail = "(3a+4)^2 - 48a = (3a-4)^2 >= 0, equality iff a = 4/3; both gamma routes agree on presets";
    return true;
}

// --- criterion 8: table fidelity against a duplicate encoding ---------------

// second, independent transcription of the gamma tables
Rat product_gamma_duplicate(long long g1, long long g2, const Rat& a) {
    std::vector<Rat> cand;
    if (g1 == 0 && g2 == 0) return Rat(1, 24);
    if (g1 == 1 && g2 == 0) {
        cand.push_back(Rat(32));
        cand.push_back(Rat(2) * a);
    } else if (g2 == 0) {
        cand.push_back(Rat(24) + Rat(16) * Rat(g1));
        cand.push_back(Rat(4) * Rat(g1) * a);
    } else if (g1 == 1 && g2 == 1) {
        cand.push_back(Rat(32));
        cand.push_back(Rat(2) * a);
        cand.push_back(Rat(2) / a);
    } else {
        cand.push_back(Rat(24) + Rat(16) * Rat(g1) + Rat(16) * Rat(g2));
        cand.push_back(Rat(4) * Rat(g1) * a);
        cand.push_back(Rat(4) * Rat(g2) / a);
    }
    Rat worst = cand[0];
    for (const Rat& c : cand)
        if (c > worst) worst = c;
    return Rat(1) / worst;
}

Rat ruled_gamma_duplicate(long long g, long long e, const Rat& a) {
    auto max_of = [](std::vector<Rat> v) {
        Rat m = v[0];
        for (const Rat& c : v)
            if (c > m) m = c;
        return m;
    };
    auto min_of = [](const Rat& x, const Rat& y) { return x < y ? x : y; };
    if (g == 0) return Rat(1, 24);
    if (g == 1 && e == 0) return Rat(1) / max_of({Rat(24), Rat(2) * a});
    if (g == 1 && e == -1) {
        Rat left = min_of(Rat(30) + Rat(16) / a + Rat(4) * a, Rat(40) + Rat(9) * a);
        return Rat(1) / max_of({left, Rat(13, 2) * a});
    }
    if (e == 0) return Rat(1) / max_of({Rat(24) + Rat(16) * Rat(g), Rat(4) * Rat(g) * a});
    Rat ea = Rat(e) * a;
    Rat left = min_of(Rat(24) + Rat(16) * Rat(g) - Rat(9) * ea,
                      Rat(18) + Rat(16) * Rat(g) - Rat(9) * ea - Rat(16) / ea);
    return Rat(1) / max_of({left, Rat(4) * Rat(g) * a - Rat(9) * ea});
}

bool criterion_tables(std::string& detail) {
    testing::Gen gen(88);
    auto alpha_sample = [&] { return gen.positive_rational(200, 40); };
    // product rows
    for (int s = 0; s < 20; ++s) {
        struct Row {
            long long g1, g2;
        };
        std::vector<Row> rows = {{0, 0},
                                 {1, 0},
                                 {gen.integer(2, 7), 0},
                                 {1, 1},
                                 {gen.integer(2, 7), 0}};
        rows[4].g2 = gen.integer(1, rows[4].g1);
        for (const Row& row : rows) {
            Rat a = alpha_sample();
            if (!(gamma_product(row.g1, row.g2, a) == product_gamma_duplicate(row.g1, row.g2, a))) {
                detail = "product row (" + std::to_string(row.g1) + "," + std::to_string(row.g2) +
                         ") mismatch at alpha = " + a.str();
                return false;
            }
        }
    }
    // ruled rows
    for (int s = 0; s < 20; ++s) {
        struct Row {
            long long g, e;
        };
        std::vector<Row> rows = {{0, 0}, {1, 0}, {1, -1}, {gen.integer(2, 7), 0}, {0, 0}};
        rows[4].g = gen.integer(2, 7);
        rows[4].e = -gen.integer(1, rows[4].g);
        for (const Row& row : rows) {
            Rat a = alpha_sample();
            if (!(gamma_ruled(row.g, row.e, a) == ruled_gamma_duplicate(row.g, row.e, a))) {
                detail = "ruled row (" + std::to_string(row.g) + "," + std::to_string(row.e) +
                         ") mismatch at alpha = " + a.str();
                return false;
            }
        }
    }
    detail = "both tables match an independent duplicate encoding on 20 samples per row";
    return true;
}

// --- criterion 9: monotonicity ----------------------------------------------

bool criterion_monotonicity(std::string& detail) {
    testing::Gen gen(4242);
    const auto& names = Catalog::default_names();
    auto random_model = [&]() -> SurfaceModel {
        switch (gen.integer(0, 4)) {
            case 0: return SurfaceModel::p2();
            case 1: return SurfaceModel::surface_in_p3(gen.integer(4, 6));
            case 2: return SurfaceModel::k3(2 * gen.integer(1, 3)); // K3 lattices are even
            case 3: {
                long long g1 = gen.integer(0, 3);
                return SurfaceModel::product(g1, gen.integer(0, g1));
            }
            default: {
                long long g = gen.integer(0, 3);
                return SurfaceModel::ruled(g, g == 0 ? 0 : -gen.integer(0, g));
            }
        }
    };
    auto random_spec = [&](Flavor flavor) {
        return catalog_spec(
            names[static_cast<std::size_t>(gen.integer(0, static_cast<long>(names.size()) - 1))],
            flavor, static_cast<std::uint64_t>(gen.integer(1, 4)));
    };

    for (int i = 0; i < 1000; ++i) {
        SurfaceModel model = random_model();
        DivisorClass d = model.arity() == 1
                             ? DivisorClass::rank_one(gen.integer(-2, 40))
                             : DivisorClass::pair(gen.integer(-2, 30), gen.integer(-2, 30));
        Flavor flavor = gen.integer(0, 1) == 0 ? Flavor::topological : Flavor::analytical;
        std::vector<SingularitySpec> specs;
        int n = static_cast<int>(gen.integer(0, 3));
        for (int k = 0; k < n; ++k) specs.push_back(random_spec(flavor));

        EvalOptions opts;
        opts.bound_mode = static_cast<BoundMode>(gen.integer(0, 2));
        if (gen.integer(0, 1) == 0) opts.beta = BetaSpec::fixed(Rat(1, gen.integer(4, 40)));

        Verdict before = evaluate(model, d, specs, opts).verdict;

        std::vector<SingularitySpec> bigger = specs;
        if (bigger.empty() || gen.integer(0, 1) == 0)
            bigger.push_back(random_spec(flavor));
        else
            bigger[static_cast<std::size_t>(gen.integer(0, static_cast<long>(bigger.size()) - 1))]
                .count += 1;

        Verdict after = evaluate(model, d, bigger, opts).verdict;
        if (before == Verdict::not_satisfied && after == Verdict::criterion_satisfied) {
            detail = "flip at iteration " + std::to_string(i);
            return false;
        }
        if ((before == Verdict::hypotheses_violated) !=
            (after == Verdict::hypotheses_violated)) {
            detail = "hypothesis verdict changed with the singularity list";
            return false;
        }
    }
    detail = "1000 randomized configurations, no NOT_SATISFIED -> CRITERION_SATISFIED flip";
    return true;
}

// --- criterion 10: exactness ------------------------------------------------

bool criterion_exactness(std::string& detail) {
    testing::Gen gen(777);
    const int prec_bits = 768; // well above 200 decimal digits
    auto to_mpf = [&](const Rat& r) {
        mpf_class num(r.num(), prec_bits), den(r.den(), prec_bits);
        return mpf_class(num / den, prec_bits);
    };
    for (int i = 0; i < 1000; ++i) {
        Rat p = gen.rational(1000000, 997);
        Rat q = gen.rational(1000000, 997);
        Rat rho = gen.positive_rational(1000000, 997);
        Rat t = gen.rational(1000000, 997);
        QuadRat v = QuadRat::of(p, q, rho);
        int exact = v.compare(t);

        mpf_class root(0, prec_bits);
        mpf_sqrt(root.get_mpf_t(), to_mpf(rho).get_mpf_t());
        mpf_class approx = to_mpf(p) + to_mpf(q) * root - to_mpf(t);
        // tolerance 10^-180
        mpf_class tiny(1, prec_bits);
        mpz_class big = 1;
        for (int k = 0; k < 180; ++k) big *= 10;
        tiny /= mpf_class(big, prec_bits);

        if (exact == 0) {
            if (!(abs(approx) < tiny)) {
                detail = "exact zero but numeric value is large at i = " + std::to_string(i);
                return false;
            }
        } else {
            int numeric = sgn(approx);
            if (numeric != exact) {
                detail = "sign disagreement at i = " + std::to_string(i);
                return false;
            }
        }
    }
    detail = "1000 comparisons agree with 200+ digit evaluation";
    return true;
}

} // namespace

int main(int argc, char** argv) {
    auto start = std::chrono::steady_clock::now();
    std::string cli_path, data_dir = "tests/data";
    for (int i = 1; i + 1 < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--cli") cli_path = argv[i + 1];
        if (arg == "--data") data_dir = argv[i + 1];
    }

    Suite suite;
    std::string detail;

    detail.clear();
    suite.report(1, "P2 constant", criterion_p2(detail), detail);
    detail.clear();
    suite.report(2, "K3 constants", criterion_k3(detail), detail);
    detail.clear();
    suite.report(3, "P3 constant discrepancy", criterion_p3(detail), detail);
    detail.clear();
    suite.report(4, "negative control", criterion_referee(cli_path, data_dir, detail), detail);
    detail.clear();
    suite.report(5, "invariant engine vs oracle", criterion_oracle(detail), detail);
    detail.clear();
    suite.report(6, "relation suite", criterion_relations(detail), detail);
    detail.clear();
    suite.report(7, "remark identity", criterion_remark(detail), detail);
    detail.clear();
    suite.report(8, "table fidelity", criterion_tables(detail), detail);
    detail.clear();
    suite.report(9, "monotonicity", criterion_monotonicity(detail), detail);
    detail.clear();
    bool exactness = criterion_exactness(detail);
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    bool in_time = elapsed < 60000;
    suite.report(10, "exactness and runtime", exactness && in_time,
                 detail + "; acceptance runtime " + std::to_string(elapsed) + " ms");

    std::cout << (suite.all_pass ? "ACCEPTANCE: all criteria pass" : "ACCEPTANCE: FAILURES")
              << "\n";
    return suite.all_pass ? 0 : 1;
}
