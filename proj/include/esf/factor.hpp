#ifndef ESF_FACTOR_HPP
#define ESF_FACTOR_HPP

#include <vector>

#include "esf/poly.hpp"

namespace esf {

/// Irreducible factorisation of a squarefree f in Q[x,y]. The returned
/// factors are content-normalised with a positive leading coefficient;
/// their product equals f up to a non-zero rational constant. Throws
/// invariant_violation when f is detectably not squarefree.
std::vector<Poly> irreducible_factors(const Poly& f);

/// True when the univariate polynomial with the given coefficients
/// (ascending degree) has no repeated roots, i.e. gcd(p, p') is constant.
bool univariate_squarefree_q(const std::vector<Rat>& coeffs);

} // namespace esf

#endif
