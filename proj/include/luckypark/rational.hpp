#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

#include "luckypark/bigint.hpp"

namespace luckypark {

/// Exact rational number, always in lowest terms with positive denominator.
///
/// Harmonic numbers, moments and polynomial coefficients live here, as do
/// intermediate values of counting formulas whose terms are individually
/// fractional; those finish with to_integer(), which asserts integrality
/// instead of trusting an integer-division ordering.
class Rational {
public:
    Rational() = default;
    Rational(int value) : v_(static_cast<long>(value)) {}
    Rational(long value) : v_(value) {}
    Rational(const BigInt& value) : v_(value.mpz()) {}

    Rational(const BigInt& num, const BigInt& den) : v_(num.mpz(), den.mpz()) {
        if (den.is_zero()) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }

    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    static Rational from_mpq(mpq_class q) {
        Rational r;
        r.v_ = std::move(q);
        return r;
    }

    const mpq_class& mpq() const { return v_; }

    BigInt numerator() const { return BigInt::from_mpz(mpz_class(v_.get_num())); }
    BigInt denominator() const { return BigInt::from_mpz(mpz_class(v_.get_den())); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    /// Narrow to BigInt; throws std::domain_error if not an integer.
    BigInt to_integer() const {
        if (!is_integer())
            throw std::domain_error("Rational " + to_string() + " is not an integer");
        return numerator();
    }

    double to_double() const { return v_.get_d(); }

    std::string to_string() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return from_mpq(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return from_mpq(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return from_mpq(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return from_mpq(a.v_ / b.v_);
    }
    friend Rational operator-(const Rational& a) { return from_mpq(-a.v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

private:
    mpq_class v_{0};
};

/// base^exponent for a signed exponent. Border formulas produce terms like
/// n^(i-2) with i = 1; keeping the whole computation rational makes those
/// cases uniform. Throws std::domain_error on 0 raised to a negative power.
inline Rational pow_signed(const BigInt& base, long exponent) {
    if (exponent >= 0) return Rational(int_pow(base, static_cast<unsigned long>(exponent)));
    if (base.is_zero()) throw std::domain_error("pow_signed: zero base with negative exponent");
    return Rational(BigInt(1), int_pow(base, static_cast<unsigned long>(-exponent)));
}

inline Rational pow_signed(long base, long exponent) { return pow_signed(BigInt(base), exponent); }

inline Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

std::ostream& operator<<(std::ostream& os, const Rational& v);

}  // namespace luckypark
