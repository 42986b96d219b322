#include "luckypark/dyck.hpp"

#include <algorithm>
#include <stdexcept>

namespace luckypark {

namespace {

void check_balanced(const std::vector<Step>& steps) {
    int diff = 0;
    for (Step s : steps) {
        diff += (s == Step::North) ? 1 : -1;
        if (diff < 0) throw std::invalid_argument("DyckPath: prefix dips below the diagonal");
    }
    if (diff != 0) throw std::invalid_argument("DyckPath: unequal numbers of north and east steps");
}

}  // namespace

DyckPath DyckPath::from_steps(std::vector<Step> steps) {
    check_balanced(steps);
    return DyckPath(std::move(steps));
}

DyckPath DyckPath::parse(std::string_view text) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case 'N': case 'n': steps.push_back(Step::North); break;
            case 'E': case 'e': steps.push_back(Step::East); break;
            default:
                throw std::invalid_argument(std::string("DyckPath: unexpected character '") + c +
                                            "' (want N or E)");
        }
    }
    return from_steps(std::move(steps));
}

std::string DyckPath::to_string() const {
    std::string s;
    s.reserve(steps_.size());
    for (Step st : steps_) s += (st == Step::North) ? 'N' : 'E';
    return s;
}

void for_each_dyck_path(int n, const std::function<void(const DyckPath&)>& visit) {
    if (n < 0) throw std::invalid_argument("for_each_dyck_path: negative size");
    std::vector<Step> steps;
    steps.reserve(static_cast<std::size_t>(2 * n));
    // DFS over prefixes with #north >= #east.
    auto rec = [&](auto&& self, int norths, int easts) -> void {
        if (norths + easts == 2 * n) {
            visit(DyckPath::from_steps(steps));
            return;
        }
        if (norths < n) {
            steps.push_back(Step::North);
            self(self, norths + 1, easts);
            steps.pop_back();
        }
        if (easts < norths) {
            steps.push_back(Step::East);
            self(self, norths, easts + 1);
            steps.pop_back();
        }
    };
    rec(rec, 0, 0);
}

std::vector<DyckPath> all_dyck_paths(int n) {
    std::vector<DyckPath> out;
    for_each_dyck_path(n, [&](const DyckPath& p) { out.push_back(p); });
    return out;
}

PreferenceVector dyck_to_increasing(const DyckPath& path) {
    if (path.size() == 0) throw std::invalid_argument("dyck_to_increasing: empty path");
    std::vector<int> prefs;
    prefs.reserve(static_cast<std::size_t>(path.size()));
    int easts = 0;
    for (Step s : path.steps()) {
        if (s == Step::North)
            prefs.push_back(easts + 1);
        else
            ++easts;
    }
    return PreferenceVector(std::move(prefs));
}

DyckPath increasing_to_dyck(const PreferenceVector& prefs) {
    const int n = prefs.size();
    std::vector<Step> steps;
    steps.reserve(static_cast<std::size_t>(2 * n));
    int easts = 0;
    for (int car = 1; car <= n; ++car) {
        const int p = prefs.pref(car);
        if (car > 1 && p < prefs.pref(car - 1))
            throw std::invalid_argument("increasing_to_dyck: preferences not weakly increasing");
        if (p > car)
            throw std::invalid_argument("increasing_to_dyck: not a parking function (entry " +
                                        std::to_string(p) + " at position " + std::to_string(car) + ")");
        while (easts < p - 1) {
            steps.push_back(Step::East);
            ++easts;
        }
        steps.push_back(Step::North);
    }
    while (easts < n) {
        steps.push_back(Step::East);
        ++easts;
    }
    return DyckPath::from_steps(std::move(steps));
}

PreferenceVector dyck_to_decreasing(const DyckPath& path) {
    std::vector<int> prefs = dyck_to_increasing(path).values();
    std::reverse(prefs.begin(), prefs.end());
    return PreferenceVector(std::move(prefs));
}

DyckPath decreasing_to_dyck(const PreferenceVector& prefs) {
    std::vector<int> rev = prefs.values();
    std::reverse(rev.begin(), rev.end());
    try {
        return increasing_to_dyck(PreferenceVector(std::move(rev)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("decreasing_to_dyck: input is not a weakly-decreasing parking function");
    }
}

std::vector<Peak> peaks(const DyckPath& path) {
    const int n = path.size();
    std::vector<Peak> out;
    const auto& steps = path.steps();
    int easts = 0, norths = 0;
    for (std::size_t t = 0; t < steps.size(); ++t) {
        if (steps[t] == Step::North) {
            ++norths;
            if (t + 1 < steps.size() && steps[t + 1] == Step::East)
                out.push_back(Peak{n + 1 - norths, easts + 1});
        } else {
            ++easts;
        }
    }
    return out;
}

bool has_peak_in_column(const DyckPath& path, int j) {
    if (j < 1 || j > path.size())
        throw std::invalid_argument("has_peak_in_column: column out of range");
    for (const Peak& p : peaks(path))
        if (p.spot == j) return true;
    return false;
}

DyckPath reflect_antidiagonal(const DyckPath& path) {
    std::vector<Step> steps(path.steps().rbegin(), path.steps().rend());
    for (Step& s : steps) s = (s == Step::North) ? Step::East : Step::North;
    return DyckPath::from_steps(std::move(steps));
}

SplitResult split_at_column(const DyckPath& path, int j) {
    const int n = path.size();
    if (j < 1 || j > n) throw std::invalid_argument("split_at_column: column out of range");
    const auto& steps = path.steps();

    // First lattice point on x = j-1; index a counts the steps before it.
    std::size_t a = 0;
    int x = 0, y = 0;
    while (x < j - 1) {
        if (steps[a] == Step::North) ++y; else ++x;
        ++a;
    }
    const int ell = y;
    // A peak in column j exists iff the path leaves this point northward.
    if (a >= steps.size() || steps[a] != Step::North)
        throw std::domain_error("split_at_column: no peak in column " + std::to_string(j));

    // First later return to the line y = x + ell - j + 1.
    const int target = ell - (j - 1);
    std::size_t b = a;
    int diff = target;
    do {
        diff += (steps[b] == Step::North) ? 1 : -1;
        ++b;
    } while (diff != target);

    // steps[a] is the dropped north, steps[b-1] the dropped east.
    std::vector<Step> small(steps.begin() + static_cast<std::ptrdiff_t>(a) + 1,
                            steps.begin() + static_cast<std::ptrdiff_t>(b) - 1);
    std::vector<Step> big(steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(a));
    big.insert(big.end(), steps.begin() + static_cast<std::ptrdiff_t>(b), steps.end());

    SplitResult r;
    r.small = DyckPath::from_steps(std::move(small));
    r.big = DyckPath::from_steps(std::move(big));
    r.k = r.small.size();
    return r;
}

DyckPath merge_at_column(const DyckPath& big, const DyckPath& small, int j) {
    const int n = big.size() + small.size() + 1;
    if (j < 1 || j > n) throw std::invalid_argument("merge_at_column: column out of range");
    if (big.size() < j - 1)
        throw std::invalid_argument("merge_at_column: big path never touches x = j-1 (size " +
                                    std::to_string(big.size()) + " < " + std::to_string(j - 1) + ")");
    const auto& steps = big.steps();
    std::size_t a = 0;
    int x = 0;
    while (x < j - 1) {
        if (steps[a] == Step::East) ++x;
        ++a;
    }
    std::vector<Step> merged(steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(a));
    merged.push_back(Step::North);
    merged.insert(merged.end(), small.steps().begin(), small.steps().end());
    merged.push_back(Step::East);
    merged.insert(merged.end(), steps.begin() + static_cast<std::ptrdiff_t>(a), steps.end());
    return DyckPath::from_steps(std::move(merged));
}

}  // namespace luckypark
