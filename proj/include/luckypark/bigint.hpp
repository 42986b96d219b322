#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

namespace luckypark {

/// Arbitrary-precision signed integer.
///
/// Every count in this library is exact. Quantities like (n+1)^(n-1) pass
/// 110 decimal digits well before n = 64, so all public counting results
/// flow through this type; machine integers appear only as private
/// accumulators whose ranges are proven small.
///
/// Thin value wrapper around GMP's mpz_class. Division is deliberately not
/// an operator: use divexact() when the quotient is known to be integral,
/// or go through Rational.
class BigInt {
public:
    BigInt() = default;
    BigInt(int value) : v_(static_cast<long>(value)) {}
    BigInt(long value) : v_(value) {}
    BigInt(unsigned long value) : v_(value) {}

    /// Parses a base-10 literal. Throws std::invalid_argument on garbage.
    explicit BigInt(const std::string& decimal) : v_(decimal, 10) {}

    static BigInt from_mpz(mpz_class z) {
        BigInt r;
        r.v_ = std::move(z);
        return r;
    }

    /// Underlying GMP value; escape hatch for interop (bindings, Rational).
    const mpz_class& mpz() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    std::string to_string() const { return v_.get_str(); }

    /// Checked narrowing; throws std::overflow_error if out of range.
    long to_long() const {
        if (!v_.fits_slong_p()) throw std::overflow_error("BigInt does not fit in long");
        return v_.get_si();
    }

    double to_double() const { return v_.get_d(); }

    friend BigInt operator+(const BigInt& a, const BigInt& b) { return from_mpz(a.v_ + b.v_); }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return from_mpz(a.v_ - b.v_); }
    friend BigInt operator*(const BigInt& a, const BigInt& b) { return from_mpz(a.v_ * b.v_); }
    friend BigInt operator-(const BigInt& a) { return from_mpz(-a.v_); }

    BigInt& operator+=(const BigInt& o) { v_ += o.v_; return *this; }
    BigInt& operator-=(const BigInt& o) { v_ -= o.v_; return *this; }
    BigInt& operator*=(const BigInt& o) { v_ *= o.v_; return *this; }

    friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) >= 0; }

private:
    mpz_class v_{0};
};

/// a / b where b must divide a exactly; throws std::domain_error otherwise.
inline BigInt divexact(const BigInt& a, const BigInt& b) {
    if (b.is_zero()) throw std::domain_error("divexact: division by zero");
    if (!mpz_divisible_p(a.mpz().get_mpz_t(), b.mpz().get_mpz_t()))
        throw std::domain_error("divexact: " + b.to_string() + " does not divide " + a.to_string());
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
    return BigInt::from_mpz(std::move(q));
}

inline bool divides(const BigInt& d, const BigInt& a) {
    return !d.is_zero() && mpz_divisible_p(a.mpz().get_mpz_t(), d.mpz().get_mpz_t()) != 0;
}

/// base^exponent with a nonnegative exponent.
inline BigInt int_pow(const BigInt& base, unsigned long exponent) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.mpz().get_mpz_t(), exponent);
    return BigInt::from_mpz(std::move(r));
}

inline BigInt int_pow(long base, unsigned long exponent) {
    return int_pow(BigInt(base), exponent);
}

inline BigInt abs(const BigInt& a) { return a.sign() < 0 ? -a : a; }

std::ostream& operator<<(std::ostream& os, const BigInt& v);

}  // namespace luckypark
