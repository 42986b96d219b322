#include <ostream>
#include <stdexcept>

#include "luckypark/bigint.hpp"
#include "luckypark/combinatorics.hpp"
#include "luckypark/interpolation.hpp"
#include "luckypark/polynomial.hpp"
#include "luckypark/rational.hpp"

namespace luckypark {

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }
std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

// ---------------------------------------------------------------------------
// Polynomial
// ---------------------------------------------------------------------------

Polynomial Polynomial::monomial(const Rational& c, int k) {
    if (k < 0) throw std::invalid_argument("monomial: negative degree");
    if (c.is_zero()) return Polynomial();
    std::vector<Rational> coeffs(static_cast<std::size_t>(k) + 1, Rational(0));
    coeffs.back() = c;
    return Polynomial(std::move(coeffs));
}

Rational Polynomial::evaluate(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<Rational> d;
    d.reserve(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
        d.push_back(Rational(static_cast<long>(k)) * c_[k]);
    return Polynomial(std::move(d));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t k = 0; k < r.size(); ++k)
        r[k] = a.coefficient(static_cast<int>(k)) + b.coefficient(static_cast<int>(k));
    return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t k = 0; k < r.size(); ++k)
        r[k] = a.coefficient(static_cast<int>(k)) - b.coefficient(static_cast<int>(k));
    return Polynomial(std::move(r));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
    if (s.is_zero()) return Polynomial();
    std::vector<Rational> r = p.c_;
    for (auto& c : r) c *= s;
    return Polynomial(std::move(r));
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        Rational c = coefficient(k);
        if (c.is_zero()) continue;
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        Rational a = abs(c);
        bool unit = (a == Rational(1));
        if (k == 0 || !unit) out += a.to_string();
        if (k > 0) {
            if (!unit) out += "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Combinatorial primitives
// ---------------------------------------------------------------------------

BigInt binomial(long m, long k) {
    if (m < 0) throw std::invalid_argument("binomial: m must be nonnegative");
    if (k < 0 || k > m) return BigInt(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
    return BigInt::from_mpz(std::move(r));
}

BigInt factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return BigInt::from_mpz(std::move(r));
}

BigInt catalan(unsigned long n) {
    long m = static_cast<long>(n);
    return divexact(binomial(2 * m, m), BigInt(m + 1));
}

BigInt narayana(long n, long k) {
    if (n < 1) throw std::invalid_argument("narayana: n must be positive");
    if (k < 1 || k > n) throw std::invalid_argument("narayana: k must lie in [1, n]");
    return divexact(binomial(n - 1, k - 1) * binomial(n, k - 1), BigInt(k));
}

Rational harmonic(long n) {
    if (n < 1) throw std::invalid_argument("harmonic: n must be positive");
    Rational h(0);
    for (long i = 1; i <= n; ++i) h += Rational(1, i);
    return h;
}

// ---------------------------------------------------------------------------
// Interpolation
// ---------------------------------------------------------------------------

Polynomial lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    if (points.empty()) throw std::invalid_argument("lagrange_interpolate: no points");
    Polynomial result;
    for (std::size_t i = 0; i < points.size(); ++i) {
        Polynomial basis = Polynomial::constant(Rational(1));
        Rational denom(1);
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            Rational dx = points[i].first - points[j].first;
            if (dx.is_zero())
                throw std::invalid_argument("lagrange_interpolate: duplicate x coordinate " +
                                            points[j].first.to_string());
            basis = basis * Polynomial({-points[j].first, Rational(1)});
            denom *= dx;
        }
        result = result + (points[i].second / denom) * basis;
    }
    return result;
}

}  // namespace luckypark
