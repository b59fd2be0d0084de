#include "doctest.h"

#include <algorithm>

#include "esf/localalg.hpp"
#include "gen.hpp"
#include "oracle.hpp"

using namespace esf;

namespace {

IdealBasis ideal(std::initializer_list<const char*> gens) {
    std::vector<Poly> ps;
    for (const char* g : gens) ps.push_back(parse_poly(g));
    return IdealBasis::of(std::move(ps));
}

std::vector<std::string> basis_strings(const IdealBasis& I) {
    std::vector<std::string> out;
    for (const auto& p : standard_basis(I)) out.push_back(p.str());
    return out;
}

} // namespace

TEST_CASE("standard basis of monomial-ish inputs") {
    CHECK(basis_strings(ideal({"-3*x^2", "2*y"})) == std::vector<std::string>{"y", "x^2"});
    CHECK(basis_strings(ideal({"y^2-x^3", "x^2", "y"})) == std::vector<std::string>{"y", "x^2"});
    CHECK(basis_strings(ideal({"2*x*y", "x^2"})) == std::vector<std::string>{"x^2", "x*y"});
}

TEST_CASE("normal form certifies membership") {
    auto sb = standard_basis(ideal({"x^2", "y"}));
    CHECK(normal_form_mora(parse_poly("y^2 - x^3"), sb).is_zero());
    CHECK_FALSE(normal_form_mora(parse_poly("x"), sb).is_zero());
}

TEST_CASE("quotient dimensions") {
    CHECK(quotient_dimension(ideal({"x", "y"})) == ExtNat::finite(1));
    CHECK(quotient_dimension(ideal({"x^2", "y"})) == ExtNat::finite(2));

    auto mons = standard_monomials(ideal({"x^2", "y"}));
    REQUIRE(mons.size() == 2);
    CHECK(mons[0] == Monomial{0, 0});
    CHECK(mons[1] == Monomial{1, 0});

    CHECK(quotient_dimension(ideal({"2*x*y", "x^2"})).is_infinite());
}

TEST_CASE("units make the quotient trivial") {
    CHECK(quotient_dimension(ideal({"1 + x"})) == ExtNat::finite(0));
    CHECK(quotient_dimension(ideal({"2", "x"})) == ExtNat::finite(0));
}

TEST_CASE("milnor numbers of model equations") {
    CHECK(milnor_number(parse_poly("y^2 - x^2")) == ExtNat::finite(1));
    CHECK(milnor_number(parse_poly("y^2 - x^3")) == ExtNat::finite(2));
    CHECK(milnor_number(parse_poly("x^3 + y^5")) == ExtNat::finite(8));
    CHECK(milnor_number(parse_poly("x^2*y")).is_infinite());
    CHECK(milnor_number(parse_poly("x + y^2")) == ExtNat::finite(0)); // smooth germ
}

TEST_CASE("tjurina numbers") {
    CHECK(tjurina_number(parse_poly("y^2 - x^2")) == ExtNat::finite(1));
    CHECK(tjurina_number(parse_poly("y^2 - x^3")) == ExtNat::finite(2));
    CHECK(tjurina_number(parse_poly("x^3 + y^5")) == ExtNat::finite(8));
}

TEST_CASE("tau differs from mu for non-quasihomogeneous equations") {
    // classic: x^4 + y^5 + x^2 y^3 hits tau = mu - 1
    Poly f = parse_poly("x^4 + y^5 + x^2*y^3");
    CHECK(milnor_number(f) == ExtNat::finite(12));
    CHECK(tjurina_number(f) == ExtNat::finite(11));
}

TEST_CASE("local equation preconditions") {
    CHECK_THROWS_AS(milnor_number(parse_poly("1 + x")), Error);
    CHECK_THROWS_AS(milnor_number(Poly::zero()), Error);
    try {
        milnor_number(parse_poly("1 + x"));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::not_at_origin);
    }
}

TEST_CASE("mu of x^a + y^b matches (a-1)(b-1) and the brute-force oracle") {
    for (unsigned a = 2; a <= 5; ++a)
        for (unsigned b = 2; b <= 5; ++b) {
            Poly f = parse_poly("x^" + std::to_string(a) + " + y^" + std::to_string(b));
            ExtNat mu = milnor_number(f);
            REQUIRE(mu.is_finite());
            CHECK(mu.value() == (a - 1) * (b - 1));
            auto oracle = testing::local_quotient_dim_bruteforce(
                {partial_derivative(f, Var::x), partial_derivative(f, Var::y)},
                2 * mu.value() + 4);
            REQUIRE(oracle.has_value());
            CHECK(*oracle == mu.value());
        }
}

TEST_CASE("mu and tau are invariant under scaling and coordinate swap") {
    testing::Gen gen(31337);
    const char* eqs[] = {"y^2-x^3", "x^3+y^4", "x*(x^2+y^3)", "y^2-x^7",
                         "x^3+y^5", "x^2*y - y^4", "(x+y)*(x-y)*(x+2*y)"};
    for (const char* raw : eqs) {
        Poly f = parse_poly(raw);
        ExtNat mu = milnor_number(f), tau = tjurina_number(f);
        Rat c = gen.positive_rational();
        CHECK(milnor_number(f.scaled(c)) == mu);
        CHECK(tjurina_number(f.scaled(c)) == tau);
        CHECK(milnor_number(f.swap_xy()) == mu);
        CHECK(tjurina_number(f.swap_xy()) == tau);
        if (mu.is_finite()) {
            REQUIRE(tau.is_finite());
            CHECK(tau.value() <= mu.value());
        }
    }
}

TEST_CASE("engine agrees with the oracle on random isolated singularities") {
    testing::Gen gen(555);
    int done = 0;
    while (done < 25) {
        Poly f = gen.poly(5, 4, 6);
        if (f.is_zero() || !f.constant_term().is_zero()) continue;
        ExtNat mu = milnor_number(f);
        if (!mu.is_finite() || mu.value() == 0 || mu.value() > 24) continue;
        auto oracle = testing::local_quotient_dim_bruteforce(
            {partial_derivative(f, Var::x), partial_derivative(f, Var::y)},
            2 * mu.value() + 4);
        REQUIRE(oracle.has_value());
        CHECK(*oracle == mu.value());
        ++done;
    }
}
