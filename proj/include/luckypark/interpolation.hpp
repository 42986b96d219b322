#pragma once

#include <utility>
#include <vector>

#include "luckypark/polynomial.hpp"
#include "luckypark/rational.hpp"

namespace luckypark {

/// Exact Lagrange interpolation: the unique polynomial of degree < #points
/// through all points. Requires at least one point and pairwise distinct
/// x coordinates (throws std::invalid_argument otherwise).
Polynomial lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& points);

}  // namespace luckypark
