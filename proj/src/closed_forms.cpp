#include "luckypark/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "luckypark/combinatorics.hpp"

namespace luckypark {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

BigInt as_integer(const Rational& value, const char* what) {
    if (!value.is_integer())
        throw std::logic_error(std::string(what) + ": expected an integer, got " + value.to_string());
    return value.numerator();
}

// Bottom border: the last car prefers j; split into parking functions on
// the spots before and after j, interleaved (OEIS A298594).
Rational q_bottom(int n, int j) {
    return Rational(binomial(n - 1, j - 1)) * pow_signed(j, j - 2) *
           pow_signed(n - j + 1, n - j - 1);
}

// Top border: the first car prefers j; sum the bottom form over the gap
// position (OEIS A298592).
Rational q_top(int n, int j) {
    Rational sum(0);
    for (int k = j; k <= n; ++k) sum += q_bottom(n, k);
    return sum;
}

// Right border: some car prefers n, the rest form a parking function on n-1 spots.
Rational q_right(int n) { return pow_signed(n, n - 2); }

// Left border: the first 1 sits in slot i.
Rational q_left(int n, int i) {
    return pow_signed(n + 1, n - i - 1) * pow_signed(n, i - 2) * Rational(2 * n + 1 - i);
}

}  // namespace

RestrictionSets::RestrictionSets(int n_, std::vector<int> lucky_, std::vector<int> unlucky_)
    : n(n_), lucky(std::move(lucky_)), unlucky(std::move(unlucky_)) {
    require(n >= 1, "RestrictionSets: n must be positive");
    std::set<int> seen;
    for (int i : lucky) {
        require(i >= 1 && i <= n, "RestrictionSets: L contains a position outside [1, n]");
        require(seen.insert(i).second, "RestrictionSets: duplicate position in L");
    }
    for (int i : unlucky) {
        require(i >= 1 && i <= n, "RestrictionSets: U contains a position outside [1, n]");
        require(seen.insert(i).second, "RestrictionSets: L and U must be disjoint");
    }
}

BigInt pollak_restricted_count(const RestrictionSets& r) {
    const long n = r.n;
    Rational product(1);
    for (int i : r.lucky) product *= Rational(n + 2 - i);
    for (int i : r.unlucky) product *= Rational(i - 1);
    const long free_exponent = n - static_cast<long>(r.lucky.size()) -
                               static_cast<long>(r.unlucky.size()) - 1;
    product *= pow_signed(n + 1, free_exponent);
    return as_integer(product, "pollak_restricted_count");
}

Polynomial lucky_polynomial(int n) {
    require(n >= 1, "lucky_polynomial: n must be positive");
    Polynomial f = Polynomial::constant(Rational(1));
    for (int i = 1; i <= n; ++i)
        f = f * Polynomial({Rational(i - 1), Rational(n + 2 - i)});
    return Rational(1, static_cast<long>(n) + 1) * f;
}

Rational factorial_moment(int n, int ell) {
    require(n >= 1, "factorial_moment: n must be positive");
    require(ell >= 1, "factorial_moment: ell must be positive");
    if (ell > n) return Rational(0);
    Polynomial d = lucky_polynomial(n);
    for (int k = 0; k < ell; ++k) d = d.derivative();
    return d.evaluate(Rational(1)) / Rational(int_pow(static_cast<long>(n) + 1, static_cast<unsigned long>(n - 1)));
}

Rational mean_lucky(int n) {
    require(n >= 1, "mean_lucky: n must be positive");
    return Rational(static_cast<long>(n) * (n + 3), 2L * (n + 1));
}

Rational variance_lucky(int n) {
    require(n >= 1, "variance_lucky: n must be positive");
    return Rational(static_cast<long>(n - 1) * n * (n + 4), 6L * (n + 1) * (n + 1));
}

BigInt partial_parking_count(int cars, int spots) {
    require(cars >= 0, "partial_parking_count: negative car count");
    require(spots >= 1, "partial_parking_count: spot count must be positive");
    require(cars <= spots, "partial_parking_count: more cars than spots");
    if (cars == 0) return BigInt(1);
    return BigInt(static_cast<long>(spots) + 1 - cars) *
           int_pow(static_cast<long>(spots) + 1, static_cast<unsigned long>(cars - 1));
}

BigInt q_border(int n, int i, int j) {
    require(n >= 1, "q_border: n must be positive");
    require(i >= 1 && i <= n && j >= 1 && j <= n, "q_border: cell out of range");
    std::vector<Rational> values;
    if (i == n) values.push_back(q_bottom(n, j));
    if (i == 1) values.push_back(q_top(n, j));
    if (j == n) values.push_back(q_right(n));
    if (j == 1) values.push_back(q_left(n, i));
    require(!values.empty(),
            "q_border: (" + std::to_string(i) + ", " + std::to_string(j) +
                ") is interior; use the oracle");
    for (std::size_t k = 1; k < values.size(); ++k)
        if (values[k] != values[0])
            throw std::logic_error("q_border: corner formulas disagree at (" + std::to_string(i) +
                                   ", " + std::to_string(j) + ")");
    return as_integer(values[0], "q_border");
}

BigInt car_lucky_count(int n, int i) {
    require(n >= 1, "car_lucky_count: n must be positive");
    require(i >= 1 && i <= n, "car_lucky_count: car out of range");
    return as_integer(Rational(n + 2 - i) * pow_signed(n + 1, n - 2), "car_lucky_count");
}

BigInt spot_lucky_count(int n, int j) {
    require(n >= 1, "spot_lucky_count: n must be positive");
    require(j >= 1 && j <= n, "spot_lucky_count: spot out of range");
    const Rational all = pow_signed(n + 1, n - 1);

    Rational value;
    bool have_small_j = true;
    switch (j) {
        case 1:
            value = all;
            break;
        case 2:
            value = Rational(3, 4) * all - Rational(1, 4) * pow_signed(n - 1, n - 1);
            break;
        case 3:
            value = Rational(2, 3) * all -
                    Rational(1, 3) * Rational(2L * n - 1) * pow_signed(n - 2, n - 2);
            break;
        case 4:
            value = Rational(5, 8) * all -
                    Rational(1, 8) * Rational(13L * n * n - 26L * n + 9) * pow_signed(n - 3, n - 3);
            break;
        case 5:
            value = Rational(3, 5) * all -
                    Rational(1, 30) *
                        Rational(118L * n * n * n - 531L * n * n + 659L * n - 192) *
                        pow_signed(n - 4, n - 4);
            break;
        default:
            have_small_j = false;
            break;
    }

    if (j == n) {
        const Rational last = pow_signed(n, n - 1);
        if (have_small_j && value != last)
            throw std::logic_error("spot_lucky_count: j = n disagrees with the small-j formula at n = " +
                                   std::to_string(n));
        return as_integer(last, "spot_lucky_count");
    }
    if (!have_small_j)
        throw NoClosedFormError("spot_lucky_count: no closed form for spot " + std::to_string(j) +
                                " of " + std::to_string(n) + " (only j <= 5 and j = n)");
    return as_integer(value, "spot_lucky_count");
}

AsymptoticConstant rho_asymptotic(int j) {
    require(j >= 1 && j <= 5, "rho_asymptotic: only j = 1..5 are known");
    static const Rational coefficients[5] = {
        Rational(0), Rational(1, 4), Rational(2, 3), Rational(13, 8), Rational(59, 15)};
    AsymptoticConstant c;
    c.j = j;
    c.rational_part = Rational(j + 1, 2L * j);
    c.exp_coefficient = coefficients[j - 1];
    c.numeric = c.rational_part.to_double() -
                c.exp_coefficient.to_double() * std::exp(static_cast<double>(-j));
    return c;
}

BigInt increasing_lucky_count(int n, int i) {
    require(n >= 1, "increasing_lucky_count: n must be positive");
    require(i >= 1 && i <= n, "increasing_lucky_count: position out of range");
    return catalan(static_cast<unsigned long>(i - 1)) * catalan(static_cast<unsigned long>(n - i + 1));
}

Rational increasing_expected(int n) {
    require(n >= 1, "increasing_expected: n must be positive");
    return Rational(3L * n, static_cast<long>(n) + 2);
}

BigInt decreasing_q(int n, int i, int j) {
    require(n >= 1, "decreasing_q: n must be positive");
    require(i >= 1 && i <= n && j >= 1 && j <= n, "decreasing_q: cell out of range");
    if (i + j > n + 1) return BigInt(0);
    const Rational prefactor(BigInt(static_cast<long>(n - i - j + 2)) * BigInt(static_cast<long>(n - i - j + 2)),
                             BigInt(static_cast<long>(n - i + 1)) * BigInt(static_cast<long>(n - j + 1)));
    const Rational value = prefactor * Rational(binomial(n - i + j - 1, j - 1)) *
                           Rational(binomial(n - j + i - 1, i - 1));
    return as_integer(value, "decreasing_q");
}

BigInt ballot_paths(int k, int ell) {
    require(k >= 0 && ell >= 0, "ballot_paths: negative endpoint");
    require(ell >= k, "ballot_paths: endpoint below the diagonal");
    const Rational value =
        Rational(static_cast<long>(ell) - k + 1, static_cast<long>(ell) + 1) *
        Rational(binomial(static_cast<long>(k) + ell, k));
    return as_integer(value, "ballot_paths");
}

BigInt decreasing_spot_count(int n, int j) {
    require(n >= 1, "decreasing_spot_count: n must be positive");
    require(j >= 1 && j <= n, "decreasing_spot_count: spot out of range");
    BigInt column_sum(0);
    for (int i = 1; i <= n + 1 - j; ++i) column_sum += decreasing_q(n, i, j);
    BigInt convolution(0);
    for (int k = 0; k <= n - j; ++k)
        convolution += catalan(static_cast<unsigned long>(n - 1 - k)) * catalan(static_cast<unsigned long>(k));
    if (column_sum != convolution)
        throw std::logic_error("decreasing_spot_count: the two formulas disagree at n = " +
                               std::to_string(n) + ", j = " + std::to_string(j) + " (" +
                               column_sum.to_string() + " vs " + convolution.to_string() + ")");
    return convolution;
}

BigInt decreasing_total(int n) {
    require(n >= 1, "decreasing_total: n must be positive");
    return divexact(binomial(2L * n, n), BigInt(2));
}

Rational decreasing_expected(int n) {
    require(n >= 1, "decreasing_expected: n must be positive");
    const Rational expected(static_cast<long>(n) + 1, 2);
    if (expected * Rational(catalan(static_cast<unsigned long>(n))) != Rational(decreasing_total(n)))
        throw std::logic_error("decreasing_expected: expectation and total disagree at n = " +
                               std::to_string(n));
    return expected;
}

}  // namespace luckypark
