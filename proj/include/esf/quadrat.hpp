#ifndef ESF_QUADRAT_HPP
#define ESF_QUADRAT_HPP

#include <string>

#include "esf/rational.hpp"

namespace esf {

/// Exact number of the form p + q*sqrt(radicand) with rational p, q and a
/// non-negative rational radicand. Comparisons against rationals (and other
/// QuadRats) are decided by sign analysis and squaring; no floating point
/// is involved anywhere.
class QuadRat {
public:
    QuadRat() : p_(0), q_(0), rad_(0) {}
    QuadRat(Rat rational) : p_(std::move(rational)), q_(0), rad_(0) {}

    /// p + q*sqrt(radicand); radicand must be >= 0. The representation is
    /// normalised: integer radicand, square factors extracted, perfect
    /// squares folded into the rational part.
    static QuadRat of(Rat p, Rat q, const Rat& radicand);

    const Rat& rational_part() const { return p_; }
    const Rat& radical_coeff() const { return q_; }
    const mpz_class& radicand() const { return rad_; }

    bool is_rational() const { return q_.is_zero(); }
    /// Requires is_rational().
    const Rat& rational_value() const;

    int sign() const;
    /// Sign of (*this - r).
    int compare(const Rat& r) const;
    int compare(const QuadRat& o) const;

    QuadRat scaled(const Rat& c) const;
    QuadRat plus(const Rat& c) const;

    friend bool operator<(const QuadRat& a, const Rat& b) { return a.compare(b) < 0; }
    friend bool operator<(const Rat& a, const QuadRat& b) { return b.compare(a) > 0; }
    friend bool operator<=(const Rat& a, const QuadRat& b) { return b.compare(a) >= 0; }
    friend bool operator==(const QuadRat& a, const QuadRat& b) { return a.compare(b) == 0; }

    double to_double() const;
    std::string str() const;

private:
    Rat p_, q_;
    mpz_class rad_; // non-negative integer; 0 exactly when q_ == 0
};

/// Sign of a + b*sqrt(rho) for rational a, b and rho >= 0.
int quad_sign(const Rat& a, const Rat& b, const Rat& rho);

} // namespace esf

#endif
