#ifndef ESF_POLY_HPP
#define ESF_POLY_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "esf/rational.hpp"

namespace esf {

/// Monomial x^ex * y^ey in the two local coordinates.
struct Monomial {
    std::uint32_t ex = 0;
    std::uint32_t ey = 0;

    std::uint64_t total_degree() const {
        return std::uint64_t(ex) + std::uint64_t(ey);
    }
    bool divides(const Monomial& m) const { return ex <= m.ex && ey <= m.ey; }
    bool is_one() const { return ex == 0 && ey == 0; }

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// Quotient of divisible monomials.
    friend Monomial operator/(const Monomial& a, const Monomial& b);
    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        return Monomial{a.ex > b.ex ? a.ex : b.ex, a.ey > b.ey ? a.ey : b.ey};
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;

    std::string str() const;
};

/// Degree-anticompatible ordering for the local ring at the origin:
/// lower total degree means larger, ties broken lexicographically with
/// x before y. The constant monomial 1 is maximal, and the ordering is
/// compatible with multiplication.
struct LocalOrder {
    /// +1 if a > b, 0 if equal, -1 if a < b.
    static int cmp(const Monomial& a, const Monomial& b) {
        const auto da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db ? 1 : -1;
        if (a.ex != b.ex) return a.ex > b.ex ? 1 : -1;
        if (a.ey != b.ey) return a.ey > b.ey ? 1 : -1;
        return 0;
    }
    static bool greater(const Monomial& a, const Monomial& b) { return cmp(a, b) > 0; }
    bool operator()(const Monomial& a, const Monomial& b) const { return greater(a, b); }
};

/// Exact polynomial in Q[x,y], stored as coefficient terms sorted in
/// descending LocalOrder (leading term first). Zero coefficients are
/// never stored; the zero polynomial has no terms. Immutable value
/// semantics; all operations are pure.
class Poly {
public:
    using Term = std::pair<Monomial, Rat>;

    Poly() = default;
    explicit Poly(Rat constant);

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(Rat(1)); }
    static Poly variable_x() { return monomial(Monomial{1, 0}); }
    static Poly variable_y() { return monomial(Monomial{0, 1}); }
    static Poly monomial(Monomial m, Rat coeff = Rat(1));
    /// Builds the canonical form from arbitrary (possibly repeated) terms.
    static Poly from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
    }

    std::size_t term_count() const { return terms_.size(); }
    std::span<const Term> terms() const { return terms_; }

    /// Leading term for the local order; polynomial must be non-zero.
    const Term& leading() const;
    const Monomial& leading_monomial() const { return leading().first; }
    const Rat& leading_coeff() const { return leading().second; }

    /// Coefficient of m (zero if absent).
    Rat coeff(const Monomial& m) const;
    Rat constant_term() const { return coeff(Monomial{0, 0}); }

    /// Minimal total degree among terms; Infinite for the zero polynomial.
    ExtNat order_of_vanishing() const;
    /// Maximal total degree among terms; 0 for the zero polynomial.
    std::uint64_t max_degree() const;

    std::uint32_t degree_in_x() const;
    std::uint32_t degree_in_y() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    Poly scaled(const Rat& c) const;
    Poly mul_monomial(const Monomial& m, const Rat& c) const;
    Poly pow(std::uint64_t e) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    Poly swap_xy() const;
    Rat evaluate(const Rat& x, const Rat& y) const;

    /// Divides every coefficient by the leading coefficient.
    Poly monic() const;
    /// Scales by a positive rational so that coefficients become coprime
    /// integers; the sign of the leading coefficient is preserved.
    Poly content_normalized() const;

    /// Canonical text form, terms in descending local order, e.g. "y^2 - x^3".
    std::string str() const;

private:
    std::vector<Term> terms_;
    void normalize();
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

enum class Var { x, y };

/// Parses the documented grammar (see docs/poly-grammar.ebnf). Throws a
/// syntax Error carrying the byte offset of the offending token.
Poly parse_poly(const std::string& text);

Poly partial_derivative(const Poly& f, Var v);

inline ExtNat order_of_vanishing(const Poly& f) { return f.order_of_vanishing(); }

} // namespace esf

#endif
