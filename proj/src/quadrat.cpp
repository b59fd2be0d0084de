#include "esf/quadrat.hpp"

#include <cmath>

namespace esf {

int quad_sign(const Rat& a, const Rat& b, const Rat& rho) {
    if (rho.sign() < 0)
        throw Error(ErrorKind::internal, "negative radicand");
    if (b.is_zero() || rho.is_zero()) return a.sign();
    int sa = a.sign(), sb = b.sign();
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 with b^2 * rho
    Rat lhs = a * a, rhs = b * b * rho;
    if (lhs == rhs) return 0;
    bool a_dominates = lhs > rhs;
    return a_dominates ? sa : sb;
}

QuadRat QuadRat::of(Rat p, Rat q, const Rat& radicand) {
    if (radicand.sign() < 0)
        throw Error(ErrorKind::internal, "negative radicand in QuadRat");
    QuadRat r;
    r.p_ = std::move(p);
    if (q.is_zero() || radicand.is_zero()) {
        r.q_ = Rat(0);
        r.rad_ = 0;
        return r;
    }
    // integerise: q*sqrt(n/d) = (q/d)*sqrt(n*d)
    mpz_class n = radicand.num() * radicand.den();
    q /= Rat(radicand.den());

    // extract small square factors
    for (long prime : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        mpz_class p2 = mpz_class(prime) * prime;
        while (mpz_divisible_p(n.get_mpz_t(), p2.get_mpz_t())) {
            n /= p2;
            q *= Rat(prime);
        }
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_class s;
        mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
        r.p_ += q * Rat(s);
        r.q_ = Rat(0);
        r.rad_ = 0;
        return r;
    }
    r.q_ = std::move(q);
    r.rad_ = std::move(n);
    return r;
}

const Rat& QuadRat::rational_value() const {
    if (!is_rational())
        throw Error(ErrorKind::internal, "QuadRat is irrational");
    return p_;
}

int QuadRat::sign() const { return quad_sign(p_, q_, Rat(rad_)); }

int QuadRat::compare(const Rat& r) const { return quad_sign(p_ - r, q_, Rat(rad_)); }

int QuadRat::compare(const QuadRat& o) const {
    // sign of (p - p') + q*sqrt(r) - q'*sqrt(r')
    Rat a = p_ - o.p_;
    if (rad_ == o.rad_) return quad_sign(a, q_ - o.q_, Rat(rad_));
    // t = q*sqrt(r) - q'*sqrt(r'): sign via one squaring
    Rat qr = q_ * q_ * Rat(rad_), qr2 = o.q_ * o.q_ * Rat(o.rad_);
    int st;
    if (q_.sign() >= 0 && o.q_.sign() <= 0) {
        st = (q_.is_zero() && o.q_.is_zero()) ? 0 : 1;
    } else if (q_.sign() <= 0 && o.q_.sign() >= 0) {
        st = (q_.is_zero() && o.q_.is_zero()) ? 0 : -1;
    } else {
        int mag = qr == qr2 ? 0 : (qr > qr2 ? 1 : -1);
        st = q_.sign() > 0 ? mag : -mag;
    }
    if (a.is_zero()) return st;
    if (st == 0) return a.sign();
    if (a.sign() == st) return a.sign();
    // a and t have opposite signs: compare a^2 with t^2,
    // t^2 = q^2 r + q'^2 r' - 2 q q' sqrt(r r')
    Rat u = a * a - qr - qr2;
    Rat v = Rat(2) * q_ * o.q_;
    // sign of a^2 - t^2 = u + v*sqrt(r r')
    int s2 = quad_sign(u, v, Rat(mpz_class(rad_ * o.rad_)));
    if (s2 == 0) return 0;
    return s2 > 0 ? a.sign() : st;
}

QuadRat QuadRat::scaled(const Rat& c) const {
    if (c.is_zero()) return QuadRat(Rat(0));
    QuadRat r;
    r.p_ = p_ * c;
    r.q_ = q_ * c;
    r.rad_ = rad_;
    if (r.q_.is_zero()) r.rad_ = 0;
    return r;
}

QuadRat QuadRat::plus(const Rat& c) const {
    QuadRat r = *this;
    r.p_ += c;
    return r;
}

double QuadRat::to_double() const {
    return p_.to_double() + q_.to_double() * std::sqrt(mpz_class(rad_).get_d());
}

std::string QuadRat::str() const {
    if (is_rational()) return p_.str();
    std::string root = "sqrt(" + rad_.get_str() + ")";
    std::string rhs;
    Rat qa = q_.abs();
    rhs = (qa == Rat(1)) ? root : qa.str() + "*" + root;
    if (p_.is_zero()) return (q_.sign() < 0 ? "-" : "") + rhs;
    return p_.str() + (q_.sign() < 0 ? " - " : " + ") + rhs;
}

} // namespace esf
