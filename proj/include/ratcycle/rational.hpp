#pragma once

#include <gmpxx.h>

#include <string>

#include "ratcycle/errors.hpp"

namespace ratcycle {

// Arbitrary-precision integer. GMP carries the digits; everything domain
// specific lives above it.
using Int = mpz_class;

inline Int ipow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline bool divides(const Int& d, const Int& value) {
    return d != 0 && mpz_divisible_p(value.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Exact reduced fraction. Denominator is always positive, the sign lives in
// the numerator, and zero is 0/1 — one representative per value, so equality
// is plain field comparison.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(const Int& n) : num_(n), den_(1) {}
    Rational(long n) : num_(n), den_(1) {}
    Rational(const Int& num, const Int& den) : num_(num), den_(den) {
        require(den_ != 0, errc::zero_denominator, "rational with zero denominator");
        reduce();
    }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    // Exact integer value; trips on a proper fraction.
    const Int& as_integer() const {
        invariant(den_ == 1, num_.get_str() + "/" + den_.get_str() + " is not an integer");
        return num_;
    }

    std::string str() const {
        if (den_ == 1) return num_.get_str();
        return num_.get_str() + "/" + den_.get_str();
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        require(b.num_ != 0, errc::division_by_zero, "division by zero rational");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

private:
    void reduce() {
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = gcd(num_, den_);
        num_ /= g;
        den_ /= g;
    }

    Int num_;
    Int den_;
};

inline Rational rat_make(const Int& num, const Int& den) { return Rational(num, den); }

// u in [0, m) with a*u = 1 (mod m), by the extended Euclidean algorithm.
Int mod_inverse(const Int& a, const Int& m);

// phi(n) via trial-division factorization; plenty for desk-scale |D|.
Int euler_totient(const Int& n);

}  // namespace ratcycle
