#pragma once

#include "luckypark/bigint.hpp"
#include "luckypark/rational.hpp"

namespace luckypark {

/// C(m, k). Requires m >= 0; returns 0 for k < 0 or k > m, matching the
/// summation conventions used throughout the counting formulas.
BigInt binomial(long m, long k);

BigInt factorial(unsigned long n);

/// n-th Catalan number C(2n,n)/(n+1)  (OEIS A000108).
BigInt catalan(unsigned long n);

/// Narayana number N(n,k) = (1/k) C(n-1,k-1) C(n,k-1)  (OEIS A001263).
/// Rejects k outside [1, n].
BigInt narayana(long n, long k);

/// H_n = 1 + 1/2 + ... + 1/n, exact. Rejects n < 1.
Rational harmonic(long n);

}  // namespace luckypark
