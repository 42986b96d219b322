#include "luckypark/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <mutex>
#include <cstdint>
#include <thread>

namespace luckypark {

namespace {

// uint64 accumulators hold every cell exactly while n <= kMaxN: the full
// variant is capped at 12 (13^11 ~ 1.8e12 leaves) and monotone counts stay
// below C_20 ~ 6.6e9.
constexpr int kMaxN = 20;

struct Tally {
    std::vector<std::uint64_t> q;                 // n*n, row-major
    std::array<std::uint64_t, kMaxN + 1> dist{};  // by lucky count

    explicit Tally(int n) : q(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}

    void add(const Tally& o) {
        for (std::size_t i = 0; i < q.size(); ++i) q[i] += o.q[i];
        for (std::size_t k = 0; k < dist.size(); ++k) dist[k] += o.dist[k];
    }
};

// Depth-first walk over preference prefixes. Parking state is maintained
// incrementally: placing car m+1 with preference v parks it in the first
// free spot >= v, which exists for every prefix the pruning admits.
struct Walker {
    int n;
    Variant variant;
    Tally* tally;
    std::uint32_t occupied = 0;
    std::array<int, kMaxN + 1> value_count{};  // multiplicities of placed preferences
    int lucky = 0;

    // Largest admissible next preference for the full variant. A prefix of
    // length m extends to a parking function iff every value k satisfies
    // #{entries <= k} + (n - m) >= k; appending v keeps that true exactly
    // when v <= min{ k : k - #{entries <= k} = n - m } (k = n always
    // qualifies because #{entries <= n} = m).
    int completable_max(int placed) const {
        const int slack = n - placed;
        int below = 0;
        for (int k = 1; k < n; ++k) {
            below += value_count[static_cast<std::size_t>(k)];
            if (k - below == slack) return k;
        }
        return n;
    }

    std::uint64_t run(int placed, int prev) {
        if (placed == n) {
            ++tally->dist[static_cast<std::size_t>(lucky)];
            return 1;
        }
        int lo = 1, hi = 0;
        switch (variant) {
            case Variant::All:
                hi = completable_max(placed);
                break;
            case Variant::WeaklyIncreasing:
                lo = prev;
                hi = placed + 1;  // sorted criterion: entry m+1 is at most m+1
                break;
            case Variant::WeaklyDecreasing:
                // Car i can only be lucky-or-park at all with preference
                // <= n+1-i once the later, smaller preferences arrive.
                hi = std::min(prev, n - placed);
                break;
        }
        std::uint64_t total = 0;
        for (int v = lo; v <= hi; ++v) {
            const int spot = place(v);
            const bool is_lucky = (spot == v);
            lucky += is_lucky;
            const std::uint64_t sub = run(placed + 1, v);
            lucky -= is_lucky;
            unplace(v, spot);
            if (is_lucky)
                tally->q[static_cast<std::size_t>(placed) * static_cast<std::size_t>(n) +
                         static_cast<std::size_t>(v - 1)] += sub;
            total += sub;
        }
        return total;
    }

    int place(int v) {
        int s = v;
        while (occupied >> (s - 1) & 1u) ++s;
        occupied |= 1u << (s - 1);
        ++value_count[static_cast<std::size_t>(v)];
        return s;
    }

    void unplace(int v, int spot) {
        occupied &= ~(1u << (spot - 1));
        --value_count[static_cast<std::size_t>(v)];
    }
};

int check_limits(int n, Variant variant, const OracleOptions& opts) {
    if (n < 1) throw std::invalid_argument("oracle: n must be positive");
    if (n > kMaxN) throw LimitError("oracle: n = " + std::to_string(n) + " is beyond any supported size");
    if (variant == Variant::All) {
        const int limit = opts.allow_long ? 12 : opts.full_limit;
        if (n > limit)
            throw LimitError("oracle: n = " + std::to_string(n) + " exceeds the limit of " +
                             std::to_string(limit) + (opts.allow_long ? "" : " (enable allow_long to raise it)"));
    } else {
        if (n > opts.monotone_limit)
            throw LimitError("oracle: n = " + std::to_string(n) + " exceeds the monotone limit of " +
                             std::to_string(opts.monotone_limit));
    }
    return n;
}

// Independent subtrees for the full variant, keyed by the first two
// preferences (lexicographic order). Merging per-task tallies in task order
// makes the result independent of scheduling; exact addition commutes
// anyway.
struct Task {
    int p1, p2;  // p2 = 0 when n == 1
};

std::vector<Task> make_tasks(int n) {
    std::vector<Task> tasks;
    if (n == 1) {
        tasks.push_back({1, 0});
        return tasks;
    }
    Walker probe{n, Variant::All, nullptr};
    for (int p1 = 1; p1 <= n; ++p1) {
        probe.place(p1);
        const int hi = probe.completable_max(1);
        for (int p2 = 1; p2 <= hi; ++p2) tasks.push_back({p1, p2});
        probe.unplace(p1, p1);  // car 1 always parks at its preference
    }
    return tasks;
}

void run_task(int n, const Task& task, Tally& tally) {
    Walker w{n, Variant::All, &tally};
    w.place(task.p1);  // the street is empty: car 1 parks at its preference
    ++w.lucky;
    std::uint64_t leaves = 0;
    if (task.p2 == 0) {
        leaves = w.run(1, task.p1);
    } else {
        const int s2 = w.place(task.p2);
        const bool lucky2 = (s2 == task.p2);
        w.lucky += lucky2;
        leaves = w.run(2, task.p2);
        if (lucky2)
            tally.q[static_cast<std::size_t>(n) + static_cast<std::size_t>(task.p2 - 1)] += leaves;
    }
    tally.q[static_cast<std::size_t>(task.p1 - 1)] += leaves;
}

Tally run_full_parallel(int n, const OracleOptions& opts) {
    const std::vector<Task> tasks = make_tasks(n);
    int threads = opts.threads;
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min<int>(threads, static_cast<int>(tasks.size())));

    std::mutex progress_mutex;
    std::size_t completed = 0;
    auto report = [&] {
        if (!opts.progress) return;
        const std::lock_guard<std::mutex> lock(progress_mutex);
        opts.progress(++completed, tasks.size());
    };

    std::vector<Tally> per_task(tasks.size(), Tally(n));
    if (threads == 1) {
        for (std::size_t t = 0; t < tasks.size(); ++t) {
            run_task(n, tasks[t], per_task[t]);
            report();
        }
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                const std::size_t t = next.fetch_add(1);
                if (t >= tasks.size()) return;
                run_task(n, tasks[t], per_task[t]);
                report();
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    Tally merged(n);
    for (const Tally& t : per_task) merged.add(t);
    return merged;
}

}  // namespace

std::string to_string(Variant v) {
    switch (v) {
        case Variant::All: return "all";
        case Variant::WeaklyIncreasing: return "weakly-increasing";
        case Variant::WeaklyDecreasing: return "weakly-decreasing";
    }
    return "?";
}

Variant variant_from_string(const std::string& name) {
    if (name == "all") return Variant::All;
    if (name == "weakly-increasing" || name == "increasing") return Variant::WeaklyIncreasing;
    if (name == "weakly-decreasing" || name == "decreasing") return Variant::WeaklyDecreasing;
    throw std::invalid_argument("unknown variant: " + name);
}

std::vector<BigInt> LuckyTable::row_sums() const {
    std::vector<BigInt> sums(static_cast<std::size_t>(n), BigInt(0));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) sums[static_cast<std::size_t>(i - 1)] += at(i, j);
    return sums;
}

std::vector<BigInt> LuckyTable::column_sums() const {
    std::vector<BigInt> sums(static_cast<std::size_t>(n), BigInt(0));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) sums[static_cast<std::size_t>(j - 1)] += at(i, j);
    return sums;
}

BigInt LuckyTable::total() const {
    BigInt t(0);
    for (const BigInt& c : cells) t += c;
    return t;
}

BigInt LuckyDistribution::total() const {
    BigInt t(0);
    for (const BigInt& c : counts) t += c;
    return t;
}

OracleCounts enumerate_and_count(int n, Variant variant, const OracleOptions& opts) {
    check_limits(n, variant, opts);
    const auto t0 = std::chrono::steady_clock::now();

    Tally tally(n);
    if (variant == Variant::All) {
        tally = run_full_parallel(n, opts);
    } else {
        Walker w{n, variant, &tally};
        w.run(0, variant == Variant::WeaklyIncreasing ? 1 : n);
    }

    OracleCounts out;
    out.table.variant = variant;
    out.table.n = n;
    out.table.cells.reserve(tally.q.size());
    for (std::uint64_t c : tally.q) out.table.cells.emplace_back(static_cast<unsigned long>(c));
    out.distribution.variant = variant;
    out.distribution.n = n;
    out.distribution.counts.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        out.distribution.counts.emplace_back(static_cast<unsigned long>(tally.dist[static_cast<std::size_t>(k)]));

    out.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

LuckyTable compute_lucky_table(int n, Variant variant, const OracleOptions& opts) {
    return enumerate_and_count(n, variant, opts).table;
}

LuckyDistribution compute_lucky_distribution(int n, const OracleOptions& opts) {
    return enumerate_and_count(n, Variant::All, opts).distribution;
}

void for_each_parking_function(int n, Variant variant,
                               const std::function<void(const PreferenceVector&)>& visit,
                               const OracleOptions& opts) {
    check_limits(n, variant, opts);
    std::vector<int> prefs;
    prefs.reserve(static_cast<std::size_t>(n));
    Walker w{n, variant, nullptr};
    auto rec = [&](auto&& self, int placed, int prev) -> void {
        if (placed == n) {
            visit(PreferenceVector(prefs));
            return;
        }
        int lo = 1, hi = 0;
        switch (variant) {
            case Variant::All: hi = w.completable_max(placed); break;
            case Variant::WeaklyIncreasing: lo = prev; hi = placed + 1; break;
            case Variant::WeaklyDecreasing: hi = std::min(prev, n - placed); break;
        }
        for (int v = lo; v <= hi; ++v) {
            const int spot = w.place(v);
            prefs.push_back(v);
            self(self, placed + 1, v);
            prefs.pop_back();
            w.unplace(v, spot);
        }
    };
    rec(rec, 0, variant == Variant::WeaklyIncreasing ? 1 : n);
}

const std::string& oracle_generator_version() {
    static const std::string version = "1";
    return version;
}

}  // namespace luckypark
