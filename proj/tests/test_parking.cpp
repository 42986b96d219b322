#include <doctest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "luckypark/oracle.hpp"
#include "luckypark/parking.hpp"

using namespace luckypark;

namespace {

std::vector<int> all_values(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    return v;
}

// Every preference vector of length n, no pruning.
void for_all_vectors(int n, const std::function<void(const PreferenceVector&)>& fn) {
    std::vector<int> prefs(static_cast<std::size_t>(n), 1);
    for (;;) {
        fn(PreferenceVector(prefs));
        int pos = n - 1;
        while (pos >= 0 && prefs[static_cast<std::size_t>(pos)] == n) {
            prefs[static_cast<std::size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) return;
        ++prefs[static_cast<std::size_t>(pos)];
    }
}

}  // namespace

TEST_CASE("PreferenceVector validation") {
    CHECK_THROWS_AS(PreferenceVector(std::vector<int>{}), std::invalid_argument);
    CHECK_THROWS_AS(PreferenceVector({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(PreferenceVector({1, 3}), std::invalid_argument);
    CHECK(PreferenceVector({2, 1}).pref(1) == 2);
    CHECK(PreferenceVector({2, 1}).to_string() == "(2, 1)");
}

TEST_CASE("park on the worked example (2,4,2,3,1)") {
    const ParkingOutcome out = park(PreferenceVector({2, 4, 2, 3, 1}));
    CHECK(out.success);
    CHECK(out.lucky_cars == std::vector<int>{1, 2, 5});
    CHECK(out.lucky_spots == std::vector<int>{1, 2, 4});
    CHECK(out.spot_of_car == std::vector<int>{2, 4, 3, 5, 1});
    CHECK(out.car_at_spot == std::vector<int>{5, 1, 3, 2, 4});
    CHECK(out.car_is_lucky(1));
    CHECK_FALSE(out.car_is_lucky(3));
    CHECK(out.spot_is_lucky(4));
    CHECK_FALSE(out.spot_is_lucky(3));
}

TEST_CASE("park edge cases") {
    SUBCASE("identity preferences: everything lucky") {
        const ParkingOutcome out = park(PreferenceVector(all_values(6)));
        CHECK(out.success);
        CHECK(out.lucky_cars == all_values(6));
        CHECK(out.lucky_spots == all_values(6));
    }
    SUBCASE("all ones cascade") {
        const ParkingOutcome out = park(PreferenceVector({1, 1, 1, 1}));
        CHECK(out.success);
        CHECK(out.lucky_cars == std::vector<int>{1});
        CHECK(out.spot_of_car == std::vector<int>{1, 2, 3, 4});
    }
    SUBCASE("failure keeps the partial assignment") {
        const ParkingOutcome out = park(PreferenceVector({2, 2}));
        CHECK_FALSE(out.success);
        CHECK(out.spot_of_car == std::vector<int>{2, 0});
        CHECK(out.car_at_spot == std::vector<int>{0, 1});
        CHECK(out.lucky_cars == std::vector<int>{1});
        CHECK(out.lucky_spots == std::vector<int>{2});
    }
    SUBCASE("later cars still park after an exit") {
        const ParkingOutcome out = park(PreferenceVector({3, 3, 1}));
        CHECK_FALSE(out.success);
        CHECK(out.spot_of_car == std::vector<int>{3, 0, 1});
    }
}

TEST_CASE("is_parking_function") {
    CHECK(is_parking_function(PreferenceVector({2, 4, 2, 3, 1})));
    CHECK(is_parking_function(PreferenceVector({1, 1, 1})));
    CHECK_FALSE(is_parking_function(PreferenceVector({2, 2})));
    CHECK_FALSE(is_parking_function(PreferenceVector({3, 3, 3})));
}

TEST_CASE("lucky cars and lucky spots are equinumerous") {
    for (int n = 1; n <= 4; ++n) {
        for_all_vectors(n, [](const PreferenceVector& p) {
            const ParkingOutcome out = park(p);
            CHECK(out.lucky_cars.size() == out.lucky_spots.size());
        });
    }
}

TEST_CASE("rearrangements of a parking function are parking functions") {
    for_all_vectors(5, [](const PreferenceVector& p) {
        std::vector<int> sorted = p.values();
        std::sort(sorted.begin(), sorted.end());
        CHECK(is_parking_function(p) == is_parking_function(PreferenceVector(sorted)));
    });
}

TEST_CASE("classify_order") {
    CHECK(classify_order(PreferenceVector({1, 1, 2, 2, 2, 6, 7, 7})) == OrderClass::WeaklyIncreasing);
    CHECK(classify_order(PreferenceVector({7, 7, 6, 2, 2, 2, 1, 1})) == OrderClass::WeaklyDecreasing);
    CHECK(classify_order(PreferenceVector({3, 3, 3})) == OrderClass::Both);
    CHECK(classify_order(PreferenceVector({1})) == OrderClass::Both);
    CHECK(classify_order(PreferenceVector({2, 1, 2})) == OrderClass::Neither);
}

TEST_CASE("weakly-increasing order: car i parks in spot i and lucky = fixed points") {
    for_each_parking_function(6, Variant::WeaklyIncreasing, [](const PreferenceVector& p) {
        const ParkingOutcome out = park(p);
        REQUIRE(out.success);
        std::vector<int> fixed;
        for (int i = 1; i <= p.size(); ++i) {
            CHECK(out.spot_of_car[static_cast<std::size_t>(i - 1)] == i);
            if (p.pref(i) == i) fixed.push_back(i);
        }
        CHECK(out.lucky_cars == fixed);
        CHECK(out.lucky_spots == fixed);
    });
}

TEST_CASE("weakly-decreasing order: lucky spots are the distinct preferred values") {
    for_each_parking_function(6, Variant::WeaklyDecreasing, [](const PreferenceVector& p) {
        const ParkingOutcome out = park(p);
        REQUIRE(out.success);
        std::vector<int> distinct = p.values();
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        CHECK(out.lucky_spots == distinct);
    });
}

TEST_CASE("monotone rearrangements attain the minimum and maximum lucky counts") {
    // Group every parking function of length n by its preference multiset;
    // the weakly-increasing arrangement must attain the group's minimum
    // lucky count and the weakly-decreasing arrangement its maximum.
    for (int n = 2; n <= 7; ++n) {
        struct Extremes {
            std::size_t lo = 100, hi = 0;
        };
        std::map<std::vector<int>, Extremes> by_multiset;
        for_each_parking_function(n, Variant::All, [&](const PreferenceVector& p) {
            std::vector<int> key = p.values();
            std::sort(key.begin(), key.end());
            auto& e = by_multiset[key];
            const std::size_t lucky = park(p).lucky_cars.size();
            e.lo = std::min(e.lo, lucky);
            e.hi = std::max(e.hi, lucky);
        });
        for (const auto& [key, extremes] : by_multiset) {
            std::vector<int> dec = key;
            std::reverse(dec.begin(), dec.end());
            CHECK(park(PreferenceVector(key)).lucky_cars.size() == extremes.lo);
            CHECK(park(PreferenceVector(dec)).lucky_cars.size() == extremes.hi);
        }
    }
}
