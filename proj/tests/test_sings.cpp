#include "doctest.h"

#include "esf/sings.hpp"
#include "gen.hpp"

using namespace esf;

TEST_CASE("branch counts of model equations") {
    CHECK(branch_count(parse_poly("y^2 - x^2")) == 2);
    CHECK(branch_count(parse_poly("y^2 - x^3")) == 1);
    CHECK(branch_count(parse_poly("y^2 - x^4")) == 2);
    CHECK(branch_count(parse_poly("x*y")) == 2);
    CHECK(branch_count(parse_poly("x*(y^2 - x^2)")) == 3);        // D4
    CHECK(branch_count(parse_poly("x*(x^2 + y^3)")) == 2);        // E7
    CHECK(branch_count(parse_poly("x^3 + y^5")) == 1);            // E8
    CHECK(branch_count(parse_poly("x^3 + y^4")) == 1);            // E6
    CHECK(branch_count(parse_poly("y - x^2")) == 1);              // smooth
    CHECK(branch_count(parse_poly("(y^2 - x^3)*(y^3 - x^2)")) == 2);
}

TEST_CASE("branch count via rational factorisation of degenerate equations") {
    // two smooth branches sharing their tangent: Newton-degenerate,
    // resolved by factoring over Q
    CHECK(branch_count(parse_poly("(y - x)*(y - x + x^2)")) == 2);
    CHECK(branch_count(parse_poly("(y - x)*(y - x + x^3)*(y + x)")) == 3);
}

TEST_CASE("branch count is Unknown for a degenerate irreducible equation") {
    // cusp with a sheared tangent: irreducible over Q, degenerate face
    CHECK_FALSE(branch_count(parse_poly("y^2 - 2*x*y + x^2 - x^3")).has_value());
}

TEST_CASE("branch count rejects non-isolated singularities") {
    CHECK_THROWS_AS(branch_count(parse_poly("x^2*y")), Error);
    try {
        branch_count(parse_poly("x^2*y"));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::not_isolated);
    }
}

TEST_CASE("delta invariant from the relation 2delta = mu + r - 1") {
    CHECK(delta_invariant(1, 2) == 1); // node
    CHECK(delta_invariant(2, 1) == 1); // cusp
    CHECK(delta_invariant(4, 3) == 3); // ordinary triple point
    CHECK_THROWS_AS(delta_invariant(2, 2), Error);
    try {
        delta_invariant(2, 2);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::parity);
    }
}

TEST_CASE("degree bounds") {
    CHECK(deg_bound(Flavor::topological, 1, 1) == 3);
    CHECK(deg_bound(Flavor::analytical, 1, 2) == 6);
    CHECK(deg_bound(Flavor::topological, 2, 2) == 5);
    CHECK(deg_bound(Flavor::analytical, 1, 1) == 3);
    CHECK(deg_bound(Flavor::topological, 3, 3) == 6); // floor(4.5 + 2)
}

TEST_CASE("catalog lookups match the expected records") {
    SingularityType a1 = catalog_lookup("A1", Flavor::topological);
    CHECK(a1.mu == 1);
    CHECK(a1.tau == 1);
    CHECK(a1.r == 2);
    CHECK(a1.delta == 1);
    CHECK(a1.deg_x.value == 3);
    CHECK(a1.deg_x.exact);
    CHECK(a1.deg_x_star == 1);

    SingularityType a2 = catalog_lookup("A2", Flavor::topological);
    CHECK(a2.mu == 2);
    CHECK(a2.tau == 2);
    CHECK(a2.r == 1);
    CHECK(a2.delta == 1);
    CHECK(a2.deg_x.value == 5);
    CHECK_FALSE(a2.deg_x.exact);

    SingularityType e8 = catalog_lookup("E8", Flavor::analytical);
    CHECK(e8.mu == 8);
    CHECK(e8.tau == 8);
    CHECK(e8.deg_x.value == 24);
    CHECK_FALSE(e8.deg_x.exact);
    CHECK(e8.deg_x_star == 8);

    SingularityType o3 = catalog_lookup("ord_3", Flavor::topological);
    CHECK(o3.mu == 4);
    CHECK(o3.r == 3);
    CHECK(o3.delta == 3);
}

TEST_CASE("catalog rejects unknown names") {
    for (const char* bad : {"A0", "D3", "E9", "Q7", "ord_1", "ord_x", "zzz"}) {
        CHECK_THROWS_AS(catalog_lookup(bad, Flavor::topological), Error);
        try {
            catalog_lookup(bad, Flavor::topological);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::unknown_type);
        }
    }
}

TEST_CASE("A_k series: mu = tau = k and r alternates") {
    for (std::uint64_t k = 1; k <= 6; ++k) {
        SingularityType t = catalog_lookup("A" + std::to_string(k), Flavor::topological);
        CHECK(t.mu == k);
        CHECK(t.tau == k);
        CHECK(t.r == (k % 2 == 1 ? 2 : 1));
        t.validate();
    }
}

TEST_CASE("catalog relations hold for every default entry") {
    for (Flavor f : {Flavor::topological, Flavor::analytical}) {
        for (const auto& name : Catalog::default_names()) {
            SingularityType t = catalog_lookup(name, f);
            CHECK(2 * t.delta == t.mu + t.r - 1);
            CHECK(t.tau <= t.mu);
            REQUIRE(t.tau_es.has_value());
            CHECK(t.mu <= 2 * t.delta);
            CHECK(t.delta <= *t.tau_es);
            CHECK(t.deg_x.value >= 3);
            t.validate();
        }
    }
}

TEST_CASE("delta from (mu, branch count) is swap invariant") {
    for (const auto& name : Catalog::default_names()) {
        Poly f = catalog_equation(name);
        Poly g = f.swap_xy();
        auto rf = branch_count(f), rg = branch_count(g);
        REQUIRE(rf.has_value());
        REQUIRE(rg.has_value());
        CHECK(*rf == *rg);
        CHECK(delta_invariant(milnor_number(f).value(), *rf) ==
              delta_invariant(milnor_number(g).value(), *rg));
    }
}

TEST_CASE("resolve from an equation") {
    SingularitySpec spec;
    spec.equation = "y^2 - x^5";
    spec.flavor = Flavor::topological;
    SingularityType t = resolve_type(spec);
    CHECK(t.mu == 4);
    CHECK(t.tau == 4);
    CHECK(t.r == 1);
    CHECK(t.delta == 2);
    CHECK(t.deg_x.value == 8);
    CHECK_FALSE(t.deg_x.exact);
    CHECK_FALSE(t.deg_x_star.has_value()); // no tau_es for a raw topological equation
}

TEST_CASE("resolve from an equation, analytical flavor fills deg X*") {
    SingularitySpec spec;
    spec.equation = "y^2 - x^5";
    spec.flavor = Flavor::analytical;
    SingularityType t = resolve_type(spec);
    CHECK(t.deg_x.value == 12);
    CHECK(t.deg_x_star == 4); // tau
}

TEST_CASE("resolve honours overrides") {
    SingularitySpec spec;
    spec.equation = "y^2 - x^5";
    spec.flavor = Flavor::topological;
    spec.overrides.tau_es = 4;
    SingularityType t = resolve_type(spec);
    CHECK(t.tau_es == 4);
    CHECK(t.deg_x_star == 4);
    CHECK(t.deg_x_star_prov == Provenance::user);
}

TEST_CASE("resolve rejects non-isolated and smooth equations") {
    SingularitySpec spec;
    spec.flavor = Flavor::topological;
    spec.equation = "x^2*y";
    CHECK_THROWS_AS(resolve_type(spec), Error);
    spec.equation = "x + y^2";
    CHECK_THROWS_AS(resolve_type(spec), Error);
}

TEST_CASE("resolve demands an override when the branch count is unknown") {
    SingularitySpec spec;
    spec.flavor = Flavor::analytical;
    spec.equation = "y^2 - 2*x*y + x^2 - x^3";
    try {
        resolve_type(spec);
        FAIL("expected missing_override");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::missing_override);
    }
    spec.overrides.r = 1;
    SingularityType t = resolve_type(spec);
    CHECK(t.mu == 2);
    CHECK(t.r == 1);
    CHECK(t.delta == 1);
}

TEST_CASE("resolve of a manual record is idempotent") {
    SingularityType a1 = catalog_lookup("A1", Flavor::topological);
    SingularitySpec spec;
    spec.manual = a1;
    spec.flavor = Flavor::topological;
    SingularityType t = resolve_type(spec);
    CHECK(t.same_invariants(a1));
    CHECK(t.name == a1.name);

    spec.manual = t;
    SingularityType t2 = resolve_type(spec);
    CHECK(t2.same_invariants(t));
}

TEST_CASE("invalid manual records are rejected with the violated relation") {
    SingularityType bad = catalog_lookup("A1", Flavor::topological);
    bad.tau = 5; // tau > mu
    SingularitySpec spec;
    spec.manual = bad;
    spec.flavor = Flavor::topological;
    try {
        resolve_type(spec);
        FAIL("expected invariant_violation");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::invariant_violation);
        CHECK(std::string(e.what()).find("tau <= mu") != std::string::npos);
    }
}

TEST_CASE("hilbert family dimension") {
    SingularityType a1 = catalog_lookup("A1", Flavor::topological);
    CHECK(hilbert_family_dimension(a1) == 2);

    SingularityType flat = a1;
    flat.deg_x_star = 3; // deg X == deg X*
    CHECK(hilbert_family_dimension(flat) == 0);

    SingularityType a2 = catalog_lookup("A2", Flavor::topological);
    CHECK_THROWS_AS(hilbert_family_dimension(a2), Error);
    try {
        hilbert_family_dimension(a2);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::inexact_degree);
    }
}

TEST_CASE("catalog overlay entries shadow built-ins") {
    Catalog catalog;
    SingularityType custom = catalog_lookup("A1", Flavor::topological);
    custom.name = "A1";
    custom.tau_es = 1;
    custom.deg_x = DegX{3, true};
    custom.mu_prov = Provenance::catalog;
    catalog.add_entry(custom);
    SingularityType got = catalog.lookup("A1", Flavor::topological);
    CHECK(got.mu_prov == Provenance::catalog);

    SingularityType invalid = custom;
    invalid.tau = 7;
    CHECK_THROWS_AS(catalog.add_entry(invalid), Error);
}
