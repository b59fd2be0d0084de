#ifndef ESF_TESTS_ORACLE_HPP
#define ESF_TESTS_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "esf/poly.hpp"

namespace esf::testing {

/// Brute-force quotient dimension for the local ring at the origin,
/// independent of the standard-basis engine: Gaussian elimination over Q
/// on the monomial basis truncated at total degree N, for N = 1, 2, ...
/// dim Q[x,y]/(I + m^{N+1}) is non-decreasing in N and stalls exactly at
/// the local quotient dimension, so the first repeat is the answer.
/// Returns nullopt when no stall happens up to max_degree (the quotient
/// is then bigger than the cap, e.g. infinite-dimensional).
std::optional<std::uint64_t>
local_quotient_dim_bruteforce(const std::vector<Poly>& generators, std::uint64_t max_degree);

/// Dense-array polynomial expansion used as an arithmetic oracle for the
/// sparse Poly type.
class DensePoly {
public:
    DensePoly() : w_(1), h_(1), c_(1, Rat(0)) {}
    static DensePoly constant(const Rat& r);
    static DensePoly var_x();
    static DensePoly var_y();

    Rat at(std::uint32_t ex, std::uint32_t ey) const;

    friend DensePoly operator+(const DensePoly& a, const DensePoly& b);
    friend DensePoly operator-(const DensePoly& a, const DensePoly& b);
    friend DensePoly operator*(const DensePoly& a, const DensePoly& b);
    DensePoly pow(unsigned e) const;

    bool matches(const Poly& p) const;

private:
    std::uint32_t w_, h_; // sizes in x and y direction
    std::vector<Rat> c_;  // row-major: c_[ey * w_ + ex]
    Rat& ref(std::uint32_t ex, std::uint32_t ey) { return c_[ey * w_ + ex]; }
    static DensePoly sized(std::uint32_t w, std::uint32_t h);
};

} // namespace esf::testing

#endif
