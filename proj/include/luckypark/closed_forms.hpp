#pragma once

#include <stdexcept>
#include <vector>

#include "luckypark/bigint.hpp"
#include "luckypark/polynomial.hpp"
#include "luckypark/rational.hpp"

namespace luckypark {

/// Closed-form counterparts of the oracle's counts. Everything here is
/// computed independently of the enumeration so the two sides can be
/// compared cell by cell. Divisions inside formulas run through exact
/// rationals and finish with an integrality assertion.

/// Requested a column for which no closed formula is known (2..5 and the
/// last column are covered; the rest need the oracle).
class NoClosedFormError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Positions whose cars are forced lucky (L) or forced unlucky (U).
/// Validates L, U subset of [n] and disjointness.
struct RestrictionSets {
    int n;
    std::vector<int> lucky;    // L
    std::vector<int> unlucky;  // U

    RestrictionSets(int n_, std::vector<int> lucky_, std::vector<int> unlucky_);
};

/// Count of parking functions whose cars in L park at their preference and
/// cars in U do not: (prod_{i in L} (n+2-i)) (prod_{i in U} (i-1)) (n+1)^(n-|L|-|U|-1).
BigInt pollak_restricted_count(const RestrictionSets& r);

/// f(x) = (1/(n+1)) prod_{i=1..n} ((n+2-i) x + (i-1)); the coefficient of
/// x^k counts parking functions with exactly k lucky cars.
Polynomial lucky_polynomial(int n);

/// E[X (X-1) ... (X-l+1)] for X = number of lucky cars, via the l-th
/// derivative of the lucky polynomial at 1. Returns 0 for l > n.
Rational factorial_moment(int n, int ell);

/// n(n+3) / (2(n+1))
Rational mean_lucky(int n);

/// (n-1) n (n+4) / (6 (n+1)^2)
Rational variance_lucky(int n);

/// Preference lists for s cars on t >= s spots where every car parks:
/// (t+1-s)(t+1)^(s-1), and 1 for s = 0.
BigInt partial_parking_count(int cars, int spots);

/// Border cells of the lucky table: first/last row, first/last column.
/// Corners evaluate every applicable formula and insist they agree.
/// Throws std::invalid_argument for interior cells.
BigInt q_border(int n, int i, int j);

/// Row sum: number of parking functions where car i is lucky,
/// (n+2-i)(n+1)^(n-2).
BigInt car_lucky_count(int n, int i);

/// Column sum: number of parking functions where spot j is lucky. Closed
/// forms exist for j in {1..5} and j = n; anything else throws
/// NoClosedFormError so callers fall back to the oracle explicitly.
BigInt spot_lucky_count(int n, int j);

/// Limit probability that spot j is lucky: rational_part - exp_coefficient * e^-j.
/// The exact pieces stay symbolic; numeric is their double rendering.
struct AsymptoticConstant {
    int j;
    Rational rational_part;     // (j+1) / (2j)
    Rational exp_coefficient;   // r_j
    double numeric;
};

/// Known constants for j = 1..5.
AsymptoticConstant rho_asymptotic(int j);

/// Weakly-increasing parking functions where car (= spot) i is lucky:
/// C_{i-1} C_{n-i+1}.
BigInt increasing_lucky_count(int n, int i);

/// Expected lucky count for a uniform weakly-increasing parking function: 3n/(n+2).
Rational increasing_expected(int n);

/// Weakly-decreasing parking functions where car i prefers spot j and is
/// lucky; zero when i + j > n + 1, and symmetric in i and j.
BigInt decreasing_q(int n, int i, int j);

/// Lattice paths from (0,0) to (k,l), l >= k, staying on or above y = x:
/// ((l-k+1)/(l+1)) C(k+l, k).
BigInt ballot_paths(int k, int ell);

/// Weakly-decreasing parking functions where spot (= car) j is lucky.
/// Evaluated along two independent routes - the column sum of
/// decreasing_q and the Catalan convolution tail sum_{k=0..n-j}
/// C_{n-1-k} C_k - which are asserted equal before returning (no direct
/// algebraic proof of their equality is known).
BigInt decreasing_spot_count(int n, int j);

/// Total lucky spots over all weakly-decreasing parking functions: C(2n,n)/2.
BigInt decreasing_total(int n);

/// Expected lucky spots for a uniform weakly-decreasing parking function:
/// (n+1)/2. Consistency with decreasing_total is asserted.
Rational decreasing_expected(int n);

}  // namespace luckypark
