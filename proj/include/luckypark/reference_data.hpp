#pragma once

#include <optional>

#include "luckypark/bigint.hpp"

namespace luckypark {

/// Published column-sum values kept as embedded constants so commands can
/// cross-check small cases and cover n = 10 without a billions-of-leaves
/// enumeration (the triangle is OEIS A374756; its subdiagonal is A374533).

/// Number of parking functions of length n whose spot j is lucky, for
/// n <= 10 and j <= 6; nullopt outside the stored range.
std::optional<BigInt> reference_column_sum(int n, int j);

/// Subdiagonal column sum (j = n-1) for 2 <= n <= 10; nullopt otherwise.
std::optional<BigInt> reference_subdiagonal(int n);

/// Largest n with stored column sums.
int reference_column_sum_max_n();

}  // namespace luckypark
