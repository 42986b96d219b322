#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "luckypark/rational.hpp"

namespace luckypark {

/// Dense univariate polynomial with exact rational coefficients.
///
/// coefficient k is the coefficient of x^k; the zero polynomial is the
/// empty coefficient vector and reports degree() == -1. Degrees stay small
/// (at most n for the lucky polynomial), so a dense representation is the
/// right trade.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(const Rational& c) { return Polynomial({c}); }

    /// c * x^k
    static Polynomial monomial(const Rational& c, int k);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    Rational coefficient(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
        return c_[static_cast<std::size_t>(k)];
    }

    Rational leading_coefficient() const { return c_.empty() ? Rational(0) : c_.back(); }

    const std::vector<Rational>& coefficients() const { return c_; }

    Rational evaluate(const Rational& x) const;

    Polynomial derivative() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, const Polynomial& p);

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Human-readable rendering, highest degree first, e.g. "13/8*n^2 - 13/4*n + 9/8".
    std::string to_string(const std::string& var = "x") const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

}  // namespace luckypark
