#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "luckypark/parking.hpp"

namespace luckypark {

enum class Step : unsigned char { North, East };

/// Monotone lattice path from (0,0) to (n,n) staying weakly above y = x.
///
/// Stored as its step sequence; coordinates are recomputed on demand, which
/// keeps the split/merge surgery below a matter of splicing step ranges.
/// Serializes as a string over {N, E}, e.g. "NNENEE".
class DyckPath {
public:
    DyckPath() = default;  // the empty path of size 0

    /// Validates the balance and prefix conditions; throws std::invalid_argument.
    static DyckPath from_steps(std::vector<Step> steps);

    /// Parses "NNENEE"; accepts lowercase. Throws std::invalid_argument.
    static DyckPath parse(std::string_view text);

    int size() const { return static_cast<int>(steps_.size() / 2); }
    const std::vector<Step>& steps() const { return steps_; }
    std::string to_string() const;

    friend bool operator==(const DyckPath&, const DyckPath&) = default;

private:
    explicit DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {}

    std::vector<Step> steps_;
};

/// North step immediately followed by an east step. For the corner at
/// lattice point (j-1, n-i+1) the pair (i, j) names the car and spot that
/// are lucky in the weakly-decreasing parking function of the path.
struct Peak {
    int car;
    int spot;

    friend bool operator==(const Peak&, const Peak&) = default;
};

/// Visits every Dyck path of the given size exactly once (norths explored
/// before easts, so the all-norths-first path comes first).
void for_each_dyck_path(int n, const std::function<void(const DyckPath&)>& visit);

std::vector<DyckPath> all_dyck_paths(int n);

/// Reading a path row by row from the bottom: the preference of car i is
/// one plus the x position of the i-th north step.
PreferenceVector dyck_to_increasing(const DyckPath& path);

/// Inverse of dyck_to_increasing; rejects inputs that are not
/// weakly-increasing parking functions.
DyckPath increasing_to_dyck(const PreferenceVector& prefs);

/// Same reading with rows labeled from the top; equals the reverse of the
/// weakly-increasing image.
PreferenceVector dyck_to_decreasing(const DyckPath& path);

DyckPath decreasing_to_dyck(const PreferenceVector& prefs);

/// All peaks in path order (increasing spot, decreasing car).
std::vector<Peak> peaks(const DyckPath& path);

bool has_peak_in_column(const DyckPath& path, int j);

/// Involution flipping the path across the anti-diagonal; sends each peak
/// (i, j) to (j, i).
DyckPath reflect_antidiagonal(const DyckPath& path);

struct SplitResult {
    DyckPath big;    // size n-1-k
    DyckPath small;  // size k
    int k = 0;
};

/// Decomposes a path with a peak in column j into an ordered pair of
/// smaller paths: walk to the first point on x = j-1, drop the north step
/// leaving it, excise the sub-path up to the first later return to the
/// line y = x + l - j + 1 (dropping the east step that lands on it), and
/// join the remainder. Throws std::domain_error when no column-j peak
/// exists, std::invalid_argument for j out of range.
SplitResult split_at_column(const DyckPath& path, int j);

/// Exact inverse of split_at_column: re-inserts north + small + east at the
/// first point of big on x = j-1. Requires size(big) >= j-1.
DyckPath merge_at_column(const DyckPath& big, const DyckPath& small, int j);

}  // namespace luckypark
