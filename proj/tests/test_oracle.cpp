#include <doctest.h>

#include <algorithm>
#include <vector>

#include "luckypark/combinatorics.hpp"
#include "luckypark/oracle.hpp"
#include "luckypark/parking.hpp"

using namespace luckypark;

namespace {

// Reference accumulation straight over the stream: park every vector and
// tally outcomes. Slower than the incremental walk inside the oracle, which
// is exactly why it makes a good cross-check.
OracleCounts accumulate_by_simulation(int n, Variant variant) {
    OracleCounts out;
    out.table.variant = variant;
    out.table.n = n;
    out.table.cells.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), BigInt(0));
    out.distribution.variant = variant;
    out.distribution.n = n;
    out.distribution.counts.assign(static_cast<std::size_t>(n) + 1, BigInt(0));
    for_each_parking_function(n, variant, [&](const PreferenceVector& p) {
        const ParkingOutcome o = park(p);
        REQUIRE(o.success);
        for (int car : o.lucky_cars)
            out.table.cells[static_cast<std::size_t>(car - 1) * static_cast<std::size_t>(n) +
                            static_cast<std::size_t>(p.pref(car) - 1)] += BigInt(1);
        out.distribution.counts[o.lucky_cars.size()] += BigInt(1);
    });
    return out;
}

}  // namespace

TEST_CASE("stream yields exactly the parking functions, in lexicographic order") {
    std::vector<std::vector<int>> seen;
    for_each_parking_function(2, Variant::All,
                              [&](const PreferenceVector& p) { seen.push_back(p.values()); });
    CHECK(seen == std::vector<std::vector<int>>{{1, 1}, {1, 2}, {2, 1}});

    long count3 = 0;
    for_each_parking_function(3, Variant::All, [&](const PreferenceVector&) { ++count3; });
    CHECK(count3 == 16);

    long count_dec = 0;
    for_each_parking_function(4, Variant::WeaklyDecreasing, [&](const PreferenceVector& p) {
        ++count_dec;
        CHECK(is_parking_function(p));
        CHECK((classify_order(p) == OrderClass::WeaklyDecreasing || classify_order(p) == OrderClass::Both));
    });
    CHECK(count_dec == 14);  // C_4
}

TEST_CASE("pruning is exact: leaf count is (n+1)^(n-1), every leaf a parking function") {
    for (int n = 1; n <= 6; ++n) {
        BigInt leaves(0);
        std::vector<std::vector<int>> order;
        for_each_parking_function(n, Variant::All, [&](const PreferenceVector& p) {
            leaves += BigInt(1);
            if (n <= 5) CHECK(is_parking_function(p));
            order.push_back(p.values());
        });
        CHECK(leaves == int_pow(n + 1, static_cast<unsigned long>(n - 1)));
        CHECK(std::is_sorted(order.begin(), order.end()));
    }
    for (int n = 1; n <= 8; ++n) {
        BigInt monotone(0);
        for_each_parking_function(n, Variant::WeaklyIncreasing,
                                  [&](const PreferenceVector&) { monotone += BigInt(1); });
        CHECK(monotone == catalan(static_cast<unsigned long>(n)));
    }
}

TEST_CASE("tiny tables computed by hand") {
    const LuckyTable t2 = compute_lucky_table(2, Variant::All);
    CHECK(t2.at(1, 1) == BigInt(2));
    CHECK(t2.at(1, 2) == BigInt(1));
    CHECK(t2.at(2, 1) == BigInt(1));
    CHECK(t2.at(2, 2) == BigInt(1));

    const LuckyDistribution d2 = compute_lucky_distribution(2);
    CHECK(d2.count(1) == BigInt(1));
    CHECK(d2.count(2) == BigInt(2));

    const LuckyDistribution d3 = compute_lucky_distribution(3);
    CHECK(d3.count(0) == BigInt(0));
    CHECK(d3.count(1) == BigInt(2));
    CHECK(d3.count(2) == BigInt(8));
    CHECK(d3.count(3) == BigInt(6));
    CHECK(d3.total() == BigInt(16));

    const LuckyTable t1 = compute_lucky_table(1, Variant::All);
    CHECK(t1.at(1, 1) == BigInt(1));
}

TEST_CASE("oracle agrees with direct simulation over the stream") {
    for (int n = 1; n <= 5; ++n) {
        for (Variant v : {Variant::All, Variant::WeaklyIncreasing, Variant::WeaklyDecreasing}) {
            const OracleCounts fast = enumerate_and_count(n, v);
            const OracleCounts slow = accumulate_by_simulation(n, v);
            CHECK(fast.table == slow.table);
            CHECK(fast.distribution == slow.distribution);
        }
    }
}

TEST_CASE("row and column sums at small n") {
    for (int n = 2; n <= 6; ++n) {
        const LuckyTable t = compute_lucky_table(n, Variant::All);
        const auto rows = t.row_sums();
        for (int i = 1; i <= n; ++i)
            CHECK(Rational(rows[static_cast<std::size_t>(i - 1)]) ==
                  Rational(n + 2 - i) * pow_signed(n + 1, n - 2));
        const auto cols = t.column_sums();
        CHECK(cols.front() == int_pow(n + 1, static_cast<unsigned long>(n - 1)));
        CHECK(cols.back() == int_pow(n, static_cast<unsigned long>(n - 1)));
    }
}

TEST_CASE("total lucky cars at n = 7") {
    const LuckyDistribution d = compute_lucky_distribution(7);
    BigInt weighted(0);
    for (int k = 1; k <= 7; ++k) weighted += BigInt(k) * d.count(k);
    CHECK(weighted == BigInt(1146880));  // 7*10/2 * 8^5
}

TEST_CASE("monotone variants have the expected shapes") {
    const LuckyTable inc = compute_lucky_table(7, Variant::WeaklyIncreasing);
    for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 7; ++j)
            if (i != j) CHECK(inc.at(i, j) == BigInt(0));

    const LuckyTable dec = compute_lucky_table(8, Variant::WeaklyDecreasing);
    for (int i = 1; i <= 8; ++i) {
        for (int j = 1; j <= 8; ++j) {
            CHECK(dec.at(i, j) == dec.at(j, i));
            if (i + j > 9) CHECK(dec.at(i, j) == BigInt(0));
        }
    }
}

TEST_CASE("weakly-decreasing lucky counts are Narayana distributed") {
    for (int n = 1; n <= 8; ++n) {
        const LuckyDistribution d = enumerate_and_count(n, Variant::WeaklyDecreasing).distribution;
        for (int k = 1; k <= n; ++k) CHECK(d.count(k) == narayana(n, k));
    }
}

TEST_CASE("thread count never changes the result") {
    const OracleCounts serial = enumerate_and_count(7, Variant::All, {.threads = 1});
    for (int threads : {2, 4, 0}) {
        const OracleCounts parallel = enumerate_and_count(7, Variant::All, {.threads = threads});
        CHECK(parallel.table == serial.table);
        CHECK(parallel.distribution == serial.distribution);
    }
}

TEST_CASE("size limits") {
    OracleOptions opts;
    CHECK_THROWS_AS(compute_lucky_table(10, Variant::All, opts), LimitError);
    opts.allow_long = true;
    CHECK_THROWS_AS(compute_lucky_table(13, Variant::All, opts), LimitError);
    CHECK_THROWS_AS(compute_lucky_table(16, Variant::WeaklyDecreasing), LimitError);
    CHECK_THROWS_AS(compute_lucky_table(0, Variant::All), std::invalid_argument);
}
