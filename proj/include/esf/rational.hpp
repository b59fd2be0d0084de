#ifndef ESF_RATIONAL_HPP
#define ESF_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

#include "esf/errors.hpp"

namespace esf {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. Thin wrapper around GMP's mpq_class; every operation is
/// exact.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}
    Rat(long n) : v_(n) {}
    Rat(long long n) : v_(static_cast<long>(n)) {}
    Rat(const mpz_class& n) : v_(n) {}
    explicit Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    Rat(long num, long den) : v_(num, den) {
        if (den == 0) throw Error(ErrorKind::internal, "rational with zero denominator");
        v_.canonicalize();
    }

    Rat(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        if (den == 0) throw Error(ErrorKind::internal, "rational with zero denominator");
        v_.canonicalize();
    }

    /// Parses "p" or "p/q" with optional leading sign.
    static Rat from_string(const std::string& text);

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    const mpq_class& mpq() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /// Largest integer <= value.
    mpz_class floor() const {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
        return q;
    }

    Rat abs() const { return Rat(mpq_class(::abs(v_))); }

    Rat pow(unsigned long e) const;

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw Error(ErrorKind::internal, "rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// "p" if integral, "p/q" otherwise.
    std::string str() const;

    double to_double() const { return v_.get_d(); }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// Natural number extended with a point at infinity; carries quotient
/// dimensions and vanishing orders.
class ExtNat {
public:
    ExtNat() : finite_(true), value_(0) {}
    static ExtNat finite(std::uint64_t v) { ExtNat e; e.finite_ = true; e.value_ = v; return e; }
    static ExtNat infinite() { ExtNat e; e.finite_ = false; e.value_ = 0; return e; }

    bool is_finite() const { return finite_; }
    bool is_infinite() const { return !finite_; }

    std::uint64_t value() const {
        if (!finite_) throw Error(ErrorKind::internal, "value() on infinite ExtNat");
        return value_;
    }

    friend bool operator==(const ExtNat& a, const ExtNat& b) {
        return a.finite_ == b.finite_ && a.value_ == b.value_;
    }
    friend bool operator<(const ExtNat& a, const ExtNat& b) {
        if (a.finite_ && b.finite_) return a.value_ < b.value_;
        return a.finite_ && !b.finite_;
    }

    std::string str() const { return finite_ ? std::to_string(value_) : "infinite"; }

private:
    bool finite_;
    std::uint64_t value_;
};

std::ostream& operator<<(std::ostream& os, const ExtNat& e);

} // namespace esf

#endif
