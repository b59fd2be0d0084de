#include "doctest.h"

#include <fstream>
#include <sstream>

#include "esf/cli.hpp"

using namespace esf;
using nlohmann::json;

namespace {

json parse(const char* text) { return json::parse(text); }

} // namespace

TEST_CASE("run configuration parsing") {
    json doc = parse(R"({
        "surface": "P2",
        "divisor": {"d": 10},
        "singularities": [{"type": "A1", "flavor": "topological", "count": 5}],
        "options": {"bound_mode": "degx", "beta": "auto", "report_format": "json"}
    })");
    cli::RunConfig cfg = cli::parse_run_config(doc);
    CHECK(cfg.model.is_rank_one());
    CHECK(cfg.divisor.d() == 10);
    REQUIRE(cfg.specs.size() == 1);
    CHECK(cfg.specs[0].catalog_name == "A1");
    CHECK(cfg.specs[0].count == 5);
    CHECK(cfg.format == cli::Format::json);
}

TEST_CASE("run configuration with explicit surfaces and overrides") {
    json doc = parse(R"({
        "surface": {"rank_one": {"l_squared": 4, "kappa": 0, "chi": "2"}},
        "divisor": {"d": 3},
        "singularities": [
            {"equation": "y^2 - x^5", "flavor": "topological",
             "overrides": {"tau_es": 4}}
        ]
    })");
    cli::RunConfig cfg = cli::parse_run_config(doc);
    CHECK(cfg.model.rank_one_data().l_squared == 4);
    CHECK(cfg.specs[0].equation == "y^2 - x^5");
    CHECK(cfg.specs[0].overrides.tau_es == 4);
}

TEST_CASE("bad configurations are rejected with config errors") {
    const char* bad[] = {
        R"({"divisor": {"d": 1}})",                                     // no surface
        R"({"surface": "P2"})",                                         // no divisor
        R"({"surface": "P2", "divisor": {"a": 1, "b": 2}})",            // arity
        R"({"surface": "P2", "divisor": {"d": 1}, "extra": 1})",        // unknown key
        R"({"surface": "nope", "divisor": {"d": 1}})",                  // preset
        R"({"surface": "P2", "divisor": {"d": 1},
            "singularities": [{"count": 2}]})",                         // no source
        R"({"surface": "P2", "divisor": {"d": 1},
            "options": {"beta": "fast"}})",                             // beta literal
        R"({"surface": "P2", "divisor": {"d": 1},
            "singularities": [{"type": "A1", "count": 0}]})",           // zero count
    };
    for (const char* text : bad) {
        CHECK_THROWS_AS(cli::parse_run_config(parse(text)), Error);
    }
}

TEST_CASE("singularity records round-trip through JSON") {
    SingularityType t = catalog_lookup("D4", Flavor::topological);
    auto j = cli::singularity_type_to_json(t);
    SingularityType back = cli::singularity_type_from_json(j);
    CHECK(back.same_invariants(t));
    CHECK(back.name == t.name);
}

TEST_CASE("reports render to stable JSON") {
    json doc = parse(R"({
        "surface": "P2",
        "divisor": {"d": 10},
        "singularities": [{"type": "A1", "flavor": "topological", "count": 5}]
    })");
    cli::RunConfig cfg = cli::parse_run_config(doc);
    CriterionReport report = evaluate(cfg.model, cfg.divisor, cfg.specs, cfg.options);
    auto j = cli::report_to_json(report);
    CHECK(j.at("schema") == "criterion-report/1");
    CHECK(j.at("verdict") == "CRITERION_SATISFIED");
    CHECK(j.at("expected_dimension") == 60);
    CHECK(j.at("d_minus_k_squared") == "169");
    // round trip is byte-identical
    std::string once = j.dump(2);
    std::string twice = nlohmann::ordered_json::parse(once).dump(2);
    CHECK(once == twice);
}

TEST_CASE("cmd_check end to end with exit codes") {
    Catalog catalog;
    cli::FlagOverrides flags;

    std::istringstream ok(R"({
        "surface": "P2", "divisor": {"d": 10},
        "singularities": [{"type": "A1", "flavor": "topological", "count": 5}]
    })");
    std::ostringstream out1;
    CHECK(cli::cmd_check(ok, flags, catalog, out1) == 0);
    CHECK(out1.str().find("CRITERION_SATISFIED") != std::string::npos);

    std::istringstream referee(R"({
        "surface": "P3:4", "divisor": {"d": 1},
        "singularities": [{"type": "A1", "flavor": "topological", "count": 3}]
    })");
    std::ostringstream out2;
    CHECK(cli::cmd_check(referee, flags, catalog, out2) == 1);
    CHECK(out2.str().find("expected dimension: 0") != std::string::npos);

    std::istringstream hyp(R"({
        "surface": "P2", "divisor": {"d": 2},
        "singularities": [{"type": "A1", "flavor": "topological", "count": 1}]
    })");
    std::ostringstream out3;
    CHECK(cli::cmd_check(hyp, flags, catalog, out3) == 2);

    std::istringstream bad("{ not json");
    std::ostringstream out4;
    CHECK(cli::cmd_check(bad, flags, catalog, out4) == 3);

    std::istringstream uncovered(R"({
        "surface": "ruled:0,-1", "divisor": {"a": 3, "b": 5}
    })");
    std::ostringstream out5;
    flags.format = cli::Format::json;
    CHECK(cli::cmd_check(uncovered, flags, catalog, out5) == 3);
    auto err = json::parse(out5.str());
    CHECK(err.at("error").at("kind") == "domain");
}

TEST_CASE("exit codes match verdicts") {
    CHECK(cli::exit_code(Verdict::criterion_satisfied) == 0);
    CHECK(cli::exit_code(Verdict::not_satisfied) == 1);
    CHECK(cli::exit_code(Verdict::hypotheses_violated) == 2);
}

TEST_CASE("verify-tables passes") {
    std::ostringstream out;
    CHECK(cli::cmd_verify_tables(out) == 0);
    CHECK(out.str().find("P2 gamma: 90/289 OK") != std::string::npos);
}

TEST_CASE("catalog listing contains the expected lines") {
    Catalog catalog;
    std::ostringstream out;
    CHECK(cli::cmd_catalog(catalog, cli::Format::text, out) == 0);
    std::string text = out.str();
    CHECK(text.find("A1: mu=1 tau=1 r=2 delta=1") != std::string::npos);
    CHECK(text.find("E8: mu=8 tau=8") != std::string::npos);
    CHECK(text.find("ord_5") != std::string::npos);
}

TEST_CASE("catalog extension files load and shadow built-ins") {
    Catalog catalog;
    json doc = parse(R"({
        "schema": "singularity-catalog/1",
        "entries": [{
            "name": "W24", "flavor": "topological",
            "mu": 10, "tau": 9, "r": 1, "delta": 5, "tau_es": 9,
            "deg_x": {"value": 17, "exact": false}, "deg_x_star": 9
        }]
    })");
    cli::load_catalog_file(catalog, doc);
    SingularityType t = catalog.lookup("W24", Flavor::topological);
    CHECK(t.mu == 10);
    CHECK(t.deg_x_star == 9);
    // resolvable through a spec as well
    SingularitySpec spec;
    spec.catalog_name = "W24";
    spec.flavor = Flavor::topological;
    CHECK(catalog.resolve(spec).tau == 9);

    json invalid = parse(R"({
        "schema": "singularity-catalog/1",
        "entries": [{
            "name": "bad", "flavor": "topological",
            "mu": 1, "tau": 2, "r": 2, "delta": 1,
            "deg_x": {"value": 3, "exact": true}
        }]
    })");
    Catalog other;
    CHECK_THROWS_AS(cli::load_catalog_file(other, invalid), Error);
}
