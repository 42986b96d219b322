#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "luckypark/bigint.hpp"
#include "luckypark/parking.hpp"

namespace luckypark {

enum class Variant { All, WeaklyIncreasing, WeaklyDecreasing };

std::string to_string(Variant v);
Variant variant_from_string(const std::string& name);

/// n x n matrix of exact counts: cell (i, j) is the number of parking
/// functions of the variant where car i prefers spot j and car i is lucky.
/// Row sums count "car i lucky", column sums count "spot j lucky".
struct LuckyTable {
    Variant variant = Variant::All;
    int n = 0;
    std::vector<BigInt> cells;  // row-major, (i-1)*n + (j-1)

    const BigInt& at(int car, int spot) const {
        return cells[static_cast<std::size_t>(car - 1) * static_cast<std::size_t>(n) +
                     static_cast<std::size_t>(spot - 1)];
    }

    std::vector<BigInt> row_sums() const;
    std::vector<BigInt> column_sums() const;
    BigInt total() const;

    friend bool operator==(const LuckyTable&, const LuckyTable&) = default;
};

/// counts[k] = number of parking functions of the variant with exactly k
/// lucky cars, k = 0..n (k = 0 never occurs: the first car always parks
/// where it wants).
struct LuckyDistribution {
    Variant variant = Variant::All;
    int n = 0;
    std::vector<BigInt> counts;

    const BigInt& count(int k) const { return counts[static_cast<std::size_t>(k)]; }
    BigInt total() const;

    friend bool operator==(const LuckyDistribution&, const LuckyDistribution&) = default;
};

/// Thrown when an enumeration request exceeds the configured size ceiling.
class LimitError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct OracleOptions {
    /// Worker threads for the full variant; 0 means hardware concurrency.
    /// Results are bit-identical for every thread count.
    int threads = 0;

    /// Called after each completed subtree of a full-variant run with
    /// (done, total); invocations are serialized. Results are unaffected.
    std::function<void(std::size_t done, std::size_t total)> progress;

    /// Ceiling for Variant::All. n = 9 walks 10^8 leaves in seconds;
    /// allow_long raises the ceiling to 12 for deliberate long runs
    /// (n = 10 is minutes-scale).
    int full_limit = 9;
    bool allow_long = false;

    /// Ceiling for the monotone variants (Catalan growth; C_15 ~ 9.7M).
    int monotone_limit = 15;
};

struct OracleCounts {
    LuckyTable table;
    LuckyDistribution distribution;
    double elapsed_seconds = 0.0;
};

/// One pruned exhaustive pass producing both the lucky table and the
/// lucky-count distribution. The prefix pruning is exact: the search tree
/// has one leaf per parking function of the variant, never more.
OracleCounts enumerate_and_count(int n, Variant variant, const OracleOptions& opts = {});

LuckyTable compute_lucky_table(int n, Variant variant, const OracleOptions& opts = {});
LuckyDistribution compute_lucky_distribution(int n, const OracleOptions& opts = {});

/// Streams every parking function of the variant in lexicographic order
/// (serial; meant for cross-checks and CLI inspection at small n).
void for_each_parking_function(int n, Variant variant,
                               const std::function<void(const PreferenceVector&)>& visit,
                               const OracleOptions& opts = {});

/// Bumped whenever a change could alter any count; cache entries written by
/// other versions are treated as stale.
const std::string& oracle_generator_version();

}  // namespace luckypark
