#ifndef ESF_LOCALALG_HPP
#define ESF_LOCALALG_HPP

#include <vector>

#include "esf/poly.hpp"

namespace esf {

/// Generators of an ideal in the local ring Q[x,y] localised at the
/// origin, with the degree-anticompatible LocalOrder understood.
struct IdealBasis {
    std::vector<Poly> generators;

    static IdealBasis of(std::vector<Poly> gens);
};

/// Weak normal form of f with respect to the reducers, computed with
/// Mora's ecart-driven selection. The result r satisfies u*f = sum q_i g_i + r
/// for some unit u of the local ring; in particular r == 0 certifies
/// membership of f in the localised ideal.
Poly normal_form_mora(Poly f, const std::vector<Poly>& reducers);

/// Minimal standard basis of I for LocalOrder: the leading terms of the
/// result generate the leading ideal of I in the local ring, no leading
/// monomial divides another, every element is monic, and the list is
/// sorted with descending leading monomials.
std::vector<Poly> standard_basis(const IdealBasis& ideal);

/// dim_Q of the local ring modulo I: the number of monomials outside the
/// leading-term staircase. Infinite exactly when the staircase misses a
/// pure power of x or of y.
ExtNat quotient_dimension(const IdealBasis& ideal);

/// Standard monomials of a zero-dimensional leading ideal, for callers
/// that want the explicit basis (testing, diagnostics).
std::vector<Monomial> standard_monomials(const IdealBasis& ideal);

/// Milnor number: dim of the quotient by the Jacobian ideal (f_x, f_y).
/// Zero signals a smooth germ, Infinite a non-isolated singularity.
/// Throws not_at_origin if f has a non-zero constant term.
ExtNat milnor_number(const Poly& f);

/// Tjurina number: dim of the quotient by (f, f_x, f_y).
ExtNat tjurina_number(const Poly& f);

} // namespace esf

#endif
