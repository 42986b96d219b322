#pragma once

#include <string>
#include <vector>

namespace luckypark {

/// Preference list for n cars entering a one-way street with n spots.
/// Entries are 1-based spot indices; entry i is the spot car i+1 heads for.
class PreferenceVector {
public:
    PreferenceVector() = default;

    /// Throws std::invalid_argument unless every entry lies in [1, n], n >= 1.
    explicit PreferenceVector(std::vector<int> prefs);

    int size() const { return static_cast<int>(prefs_.size()); }

    /// Preference of the given car (1-based).
    int pref(int car) const { return prefs_[static_cast<std::size_t>(car - 1)]; }

    const std::vector<int>& values() const { return prefs_; }

    friend bool operator==(const PreferenceVector&, const PreferenceVector&) = default;

    std::string to_string() const;

private:
    std::vector<int> prefs_;
};

enum class OrderClass { WeaklyIncreasing, WeaklyDecreasing, Both, Neither };

std::string to_string(OrderClass c);

/// Result of running the parking process. A car that reaches the end of the
/// street without parking exits; the partial assignment is kept so failures
/// stay inspectable. Car i is lucky iff it parked exactly at its preference;
/// spot j is lucky iff the car occupying it preferred j. The two sets index
/// the same parked-car/spot pairs, so they always have equal size.
struct ParkingOutcome {
    bool success = false;
    std::vector<int> spot_of_car;  // index car-1; 0 = exited
    std::vector<int> car_at_spot;  // index spot-1; 0 = empty
    std::vector<int> lucky_cars;   // ascending
    std::vector<int> lucky_spots;  // ascending

    bool car_is_lucky(int car) const;
    bool spot_is_lucky(int spot) const;
};

/// Runs the parking process: cars enter in order, each parks in the first
/// free spot at or after its preference, or exits at the end of the street.
ParkingOutcome park(const PreferenceVector& p);

/// True iff every car parks. Cross-checked internally against the sorted
/// criterion (i-th smallest preference <= i); a disagreement would be a bug
/// and throws std::logic_error.
bool is_parking_function(const PreferenceVector& p);

OrderClass classify_order(const PreferenceVector& p);

}  // namespace luckypark
