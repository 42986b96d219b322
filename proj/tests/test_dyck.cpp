#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "luckypark/combinatorics.hpp"
#include "luckypark/dyck.hpp"
#include "luckypark/oracle.hpp"
#include "luckypark/parking.hpp"

using namespace luckypark;

namespace {

// The size-8 path of the worked increasing/decreasing example.
const char* kExamplePath = "NNENNNEEEENENNEE";

std::string staircase(int n) {
    std::string s;
    for (int i = 0; i < n; ++i) s += "NE";
    return s;
}

std::set<std::pair<int, int>> peak_set(const DyckPath& p) {
    std::set<std::pair<int, int>> s;
    for (const Peak& pk : peaks(p)) s.insert({pk.car, pk.spot});
    return s;
}

}  // namespace

TEST_CASE("parse and validation") {
    CHECK(DyckPath::parse("NNENEE").to_string() == "NNENEE");
    CHECK(DyckPath::parse("").size() == 0);
    CHECK(DyckPath::parse("nnenee").to_string() == "NNENEE");
    CHECK_THROWS_AS(DyckPath::parse("EN"), std::invalid_argument);      // dips below y = x
    CHECK_THROWS_AS(DyckPath::parse("NEN"), std::invalid_argument);     // unbalanced
    CHECK_THROWS_AS(DyckPath::parse("NXEE"), std::invalid_argument);    // bad character
}

TEST_CASE("enumeration counts are Catalan") {
    int count0 = 0;
    for_each_dyck_path(0, [&](const DyckPath& p) {
        ++count0;
        CHECK(p.size() == 0);
    });
    CHECK(count0 == 1);
    CHECK(all_dyck_paths(3).size() == 5);
    CHECK(all_dyck_paths(8).size() == 1430);
    std::set<std::string> seen;
    for (const DyckPath& p : all_dyck_paths(6)) seen.insert(p.to_string());
    CHECK(seen.size() == 132);  // distinct, and C_6 of them
}

TEST_CASE("worked example maps to the increasing and decreasing parking functions") {
    const DyckPath p = DyckPath::parse(kExamplePath);
    CHECK(dyck_to_increasing(p) == PreferenceVector({1, 1, 2, 2, 2, 6, 7, 7}));
    CHECK(dyck_to_decreasing(p) == PreferenceVector({7, 7, 6, 2, 2, 2, 1, 1}));
    CHECK(increasing_to_dyck(PreferenceVector({1, 1, 2, 2, 2, 6, 7, 7})) == p);
    CHECK(decreasing_to_dyck(PreferenceVector({7, 7, 6, 2, 2, 2, 1, 1})) == p);
}

TEST_CASE("staircase and pyramid paths") {
    const int n = 5;
    const DyckPath stair = DyckPath::parse(staircase(n));
    CHECK(dyck_to_increasing(stair) == PreferenceVector({1, 2, 3, 4, 5}));
    CHECK(dyck_to_decreasing(stair) == PreferenceVector({5, 4, 3, 2, 1}));
    const DyckPath pyramid = DyckPath::parse("NNNNNEEEEE");
    CHECK(dyck_to_increasing(pyramid) == PreferenceVector({1, 1, 1, 1, 1}));
    CHECK(peaks(pyramid) == std::vector<Peak>{Peak{1, 1}});
    CHECK(peaks(stair).size() == 5);
}

TEST_CASE("bijection round trips and image coverage") {
    for (int n = 1; n <= 6; ++n) {
        std::set<std::vector<int>> increasing_images;
        for (const DyckPath& p : all_dyck_paths(n)) {
            const PreferenceVector inc = dyck_to_increasing(p);
            const PreferenceVector dec = dyck_to_decreasing(p);
            CHECK(increasing_to_dyck(inc) == p);
            CHECK(decreasing_to_dyck(dec) == p);
            const OrderClass oc = classify_order(inc);
            CHECK((oc == OrderClass::WeaklyIncreasing || oc == OrderClass::Both));
            CHECK(is_parking_function(inc));
            std::vector<int> reversed = inc.values();
            std::reverse(reversed.begin(), reversed.end());
            CHECK(dec.values() == reversed);
            increasing_images.insert(inc.values());
        }
        // The image is exactly the set of weakly-increasing parking functions.
        std::set<std::vector<int>> expected;
        for_each_parking_function(n, Variant::WeaklyIncreasing,
                                  [&](const PreferenceVector& p) { expected.insert(p.values()); });
        CHECK(increasing_images == expected);
    }
}

TEST_CASE("bijection rejects out-of-domain input") {
    CHECK_THROWS_AS(increasing_to_dyck(PreferenceVector({2, 1})), std::invalid_argument);
    CHECK_THROWS_AS(increasing_to_dyck(PreferenceVector({1, 3, 3})), std::invalid_argument);
    CHECK_THROWS_AS(decreasing_to_dyck(PreferenceVector({1, 2})), std::invalid_argument);
    CHECK_THROWS_AS(decreasing_to_dyck(PreferenceVector({3, 3, 1})), std::invalid_argument);
}

TEST_CASE("peaks name exactly the lucky pairs of the decreasing parking function") {
    const DyckPath example = DyckPath::parse(kExamplePath);
    const ParkingOutcome out = park(dyck_to_decreasing(example));
    CHECK(out.lucky_spots == std::vector<int>{1, 2, 6, 7});

    for (int n = 1; n <= 6; ++n) {
        for (const DyckPath& p : all_dyck_paths(n)) {
            const PreferenceVector dec = dyck_to_decreasing(p);
            const ParkingOutcome o = park(dec);
            REQUIRE(o.success);
            std::set<std::pair<int, int>> lucky_pairs;
            for (int car : o.lucky_cars) lucky_pairs.insert({car, dec.pref(car)});
            CHECK(peak_set(p) == lucky_pairs);
        }
    }
}

TEST_CASE("peak counts distribute as Narayana numbers") {
    for (int n = 1; n <= 7; ++n) {
        std::map<int, long> by_peaks;
        for_each_dyck_path(n, [&](const DyckPath& p) {
            ++by_peaks[static_cast<int>(peaks(p).size())];
        });
        for (int k = 1; k <= n; ++k)
            CHECK(BigInt(by_peaks[k]) == narayana(n, k));
    }
}

TEST_CASE("anti-diagonal reflection") {
    CHECK(reflect_antidiagonal(DyckPath::parse(staircase(4))) == DyckPath::parse(staircase(4)));
    for (const DyckPath& p : all_dyck_paths(6)) {
        const DyckPath r = reflect_antidiagonal(p);
        CHECK(reflect_antidiagonal(r) == p);
        std::set<std::pair<int, int>> transposed;
        for (const Peak& pk : peaks(p)) transposed.insert({pk.spot, pk.car});
        CHECK(peak_set(r) == transposed);
    }
}

TEST_CASE("split on the worked ten-by-ten example") {
    const DyckPath p = DyckPath::parse("NENENNNEENNNENEEEENE");
    REQUIRE(p.size() == 10);
    const SplitResult r = split_at_column(p, 5);
    CHECK(r.k == 3);
    CHECK(r.small.to_string() == "NNENEE");
    CHECK(r.big.to_string() == "NENENNNEEENE");
    CHECK(merge_at_column(r.big, r.small, 5) == p);
}

TEST_CASE("split smallest case and domain errors") {
    const SplitResult r = split_at_column(DyckPath::parse("NE"), 1);
    CHECK(r.big.size() == 0);
    CHECK(r.small.size() == 0);
    CHECK(r.k == 0);
    CHECK(merge_at_column(DyckPath(), DyckPath(), 1) == DyckPath::parse("NE"));

    CHECK_THROWS_AS(split_at_column(DyckPath::parse("NNNEEE"), 3), std::domain_error);
    CHECK_THROWS_AS(split_at_column(DyckPath::parse("NNEE"), 5), std::invalid_argument);
    CHECK_THROWS_AS(merge_at_column(DyckPath::parse("NE"), DyckPath::parse("NE"), 3),
                    std::invalid_argument);
}

TEST_CASE("split/merge round trip with full k coverage") {
    for (int n = 1; n <= 7; ++n) {
        const auto paths = all_dyck_paths(n);
        for (int j = 1; j <= n; ++j) {
            std::set<int> k_seen;
            for (const DyckPath& p : paths) {
                if (!has_peak_in_column(p, j)) continue;
                const SplitResult r = split_at_column(p, j);
                CHECK(r.k >= 0);
                CHECK(r.k <= n - j);
                CHECK(r.big.size() == n - 1 - r.k);
                CHECK(merge_at_column(r.big, r.small, j) == p);
                k_seen.insert(r.k);
            }
            CHECK(static_cast<int>(k_seen.size()) == n - j + 1);  // every k in [0, n-j]
        }
    }
}

TEST_CASE("has_peak_in_column") {
    CHECK(has_peak_in_column(DyckPath::parse(staircase(4)), 3));
    CHECK_FALSE(has_peak_in_column(DyckPath::parse("NNNEEE"), 2));
    CHECK_THROWS_AS(has_peak_in_column(DyckPath::parse("NE"), 2), std::invalid_argument);
    long with_peak = 0;
    for_each_dyck_path(7, [&](const DyckPath& p) { with_peak += has_peak_in_column(p, 4); });
    CHECK(with_peak == 227);
}
