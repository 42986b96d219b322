#include "luckypark/parking.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace luckypark {

PreferenceVector::PreferenceVector(std::vector<int> prefs) : prefs_(std::move(prefs)) {
    if (prefs_.empty()) throw std::invalid_argument("PreferenceVector: need at least one car");
    const int n = static_cast<int>(prefs_.size());
    for (int v : prefs_) {
        if (v < 1 || v > n)
            throw std::invalid_argument("PreferenceVector: preference " + std::to_string(v) +
                                        " outside [1, " + std::to_string(n) + "]");
    }
}

std::string PreferenceVector::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < prefs_.size(); ++i) {
        if (i) os << ", ";
        os << prefs_[i];
    }
    os << ")";
    return os.str();
}

std::string to_string(OrderClass c) {
    switch (c) {
        case OrderClass::WeaklyIncreasing: return "weakly-increasing";
        case OrderClass::WeaklyDecreasing: return "weakly-decreasing";
        case OrderClass::Both: return "both";
        case OrderClass::Neither: return "neither";
    }
    return "?";
}

bool ParkingOutcome::car_is_lucky(int car) const {
    return std::binary_search(lucky_cars.begin(), lucky_cars.end(), car);
}

bool ParkingOutcome::spot_is_lucky(int spot) const {
    return std::binary_search(lucky_spots.begin(), lucky_spots.end(), spot);
}

ParkingOutcome park(const PreferenceVector& p) {
    const int n = p.size();
    ParkingOutcome out;
    out.success = true;
    out.spot_of_car.assign(static_cast<std::size_t>(n), 0);
    out.car_at_spot.assign(static_cast<std::size_t>(n), 0);
    for (int car = 1; car <= n; ++car) {
        int s = p.pref(car);
        while (s <= n && out.car_at_spot[static_cast<std::size_t>(s - 1)] != 0) ++s;
        if (s > n) {
            out.success = false;  // car exits, the rest still try to park
            continue;
        }
        out.car_at_spot[static_cast<std::size_t>(s - 1)] = car;
        out.spot_of_car[static_cast<std::size_t>(car - 1)] = s;
        if (s == p.pref(car)) {
            out.lucky_cars.push_back(car);
            out.lucky_spots.push_back(s);
        }
    }
    std::sort(out.lucky_spots.begin(), out.lucky_spots.end());
    return out;
}

bool is_parking_function(const PreferenceVector& p) {
    const bool parked = park(p).success;
    // Sorted criterion: the i-th smallest preference is at most i.
    std::vector<int> sorted = p.values();
    std::sort(sorted.begin(), sorted.end());
    bool sorted_ok = true;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] > static_cast<int>(i) + 1) {
            sorted_ok = false;
            break;
        }
    }
    if (parked != sorted_ok)
        throw std::logic_error("is_parking_function: simulation disagrees with sorted criterion for " +
                               p.to_string());
    return parked;
}

OrderClass classify_order(const PreferenceVector& p) {
    bool inc = true, dec = true;
    for (int i = 1; i < p.size(); ++i) {
        if (p.pref(i) > p.pref(i + 1)) inc = false;
        if (p.pref(i) < p.pref(i + 1)) dec = false;
    }
    if (inc && dec) return OrderClass::Both;
    if (inc) return OrderClass::WeaklyIncreasing;
    if (dec) return OrderClass::WeaklyDecreasing;
    return OrderClass::Neither;
}

}  // namespace luckypark
