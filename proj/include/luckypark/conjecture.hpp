#pragma once

#include <string>
#include <utility>
#include <vector>

#include "luckypark/bigint.hpp"
#include "luckypark/closed_forms.hpp"
#include "luckypark/polynomial.hpp"

namespace luckypark {

/// Exact-rational exploration of the ansatz
///
///   S_j(n) = ((j+1)/(2j)) (n+1)^(n-1)  -  f_j(n) (n-j+1)^(n-j+1)
///
/// for the column sums S_j, where f_j is conjectured to be a polynomial of
/// degree j-2. Fits are exact interpolation, never least squares: a wrong
/// ansatz must fail loudly on a held-out sample instead of being absorbed
/// into residuals.

/// One column-sum sample with its provenance ("closed-form", "oracle" or
/// "reference").
struct ColumnSample {
    int n;
    BigInt value;
    std::string provenance;
};

/// Solves the ansatz for f_j(n) at each sample: requires n >= j.
std::vector<std::pair<int, Rational>> extract_f_values(int j, const std::vector<ColumnSample>& samples);

struct ConjectureFit {
    int j = 0;
    Polynomial f;                       // polynomial in n
    Rational leading;                   // r_j
    AsymptoticConstant predicted_rho;   // (j+1)/(2j) - r_j e^-j
    bool degree_claim_holds = false;    // deg f <= j-2 and >= 1 matching held-out sample
    bool exploratory = false;           // no held-out samples were available
    std::vector<ColumnSample> samples;  // in the order used; first j-1 interpolate
    int holdout_matched = 0;
    std::vector<int> holdout_mismatched;  // n values inconsistent with the fit
};

/// Interpolates f_j on the first max(j-1, 1) samples and validates the rest
/// as held-out data. Throws std::invalid_argument with fewer than j-1
/// samples or duplicate n.
ConjectureFit fit_conjecture(int j, const std::vector<ColumnSample>& samples);

/// Sampling policy for column j: closed forms where they exist (j <= 5),
/// otherwise the oracle up to oracle_limit, otherwise embedded reference
/// values. Produces `count` samples starting at n = j when possible.
std::vector<ColumnSample> default_samples(int j, int count, int oracle_limit = 7, int threads = 0);

}  // namespace luckypark
