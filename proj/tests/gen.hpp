#ifndef ESF_TESTS_GEN_HPP
#define ESF_TESTS_GEN_HPP

#include <random>

#include "esf/poly.hpp"

namespace esf::testing {

struct Gen {
    std::mt19937_64 rng;
    explicit Gen(std::uint64_t seed) : rng(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(rng);
    }

    Rat rational(long max_abs = 20, long max_den = 12) {
        long num = integer(-max_abs, max_abs);
        long den = integer(1, max_den);
        return Rat(num, den);
    }

    Rat positive_rational(long max_abs = 50, long max_den = 20) {
        long num = integer(1, max_abs);
        long den = integer(1, max_den);
        return Rat(num, den);
    }

    Monomial monomial(std::uint32_t max_deg = 6) {
        std::uint32_t ex = static_cast<std::uint32_t>(integer(0, max_deg));
        std::uint32_t ey = static_cast<std::uint32_t>(integer(0, max_deg));
        return Monomial{ex, ey};
    }

    Poly poly(int max_terms = 6, std::uint32_t max_deg = 6, long max_abs = 10) {
        std::vector<Poly::Term> ts;
        int n = static_cast<int>(integer(0, max_terms));
        for (int k = 0; k < n; ++k) ts.push_back({monomial(max_deg), rational(max_abs)});
        return Poly::from_terms(std::move(ts));
    }

    Poly nonzero_poly(int max_terms = 6, std::uint32_t max_deg = 6) {
        for (;;) {
            Poly p = poly(max_terms, max_deg);
            if (!p.is_zero()) return p;
        }
    }
};

} // namespace esf::testing

#endif
