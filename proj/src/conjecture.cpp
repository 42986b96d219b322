#include "luckypark/conjecture.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "luckypark/interpolation.hpp"
#include "luckypark/oracle.hpp"
#include "luckypark/reference_data.hpp"

namespace luckypark {

namespace {

Rational ansatz_main_term(int j, int n) {
    return Rational(j + 1, 2L * j) * pow_signed(static_cast<long>(n) + 1, n - 1);
}

Rational correction_power(int j, int n) {
    return pow_signed(static_cast<long>(n) - j + 1, static_cast<long>(n) - j + 1);
}

}  // namespace

std::vector<std::pair<int, Rational>> extract_f_values(int j, const std::vector<ColumnSample>& samples) {
    if (j < 1) throw std::invalid_argument("extract_f_values: j must be positive");
    std::vector<std::pair<int, Rational>> out;
    out.reserve(samples.size());
    for (const ColumnSample& s : samples) {
        if (s.n < j)
            throw std::invalid_argument("extract_f_values: sample n = " + std::to_string(s.n) +
                                        " is smaller than j = " + std::to_string(j));
        out.emplace_back(s.n, (ansatz_main_term(j, s.n) - Rational(s.value)) / correction_power(j, s.n));
    }
    return out;
}

ConjectureFit fit_conjecture(int j, const std::vector<ColumnSample>& samples) {
    if (j < 1) throw std::invalid_argument("fit_conjecture: j must be positive");
    const std::size_t needed = static_cast<std::size_t>(std::max(j - 1, 1));
    if (samples.size() < needed)
        throw std::invalid_argument("fit_conjecture: need at least " + std::to_string(needed) +
                                    " samples for j = " + std::to_string(j) + ", got " +
                                    std::to_string(samples.size()));
    {
        std::set<int> ns;
        for (const ColumnSample& s : samples)
            if (!ns.insert(s.n).second)
                throw std::invalid_argument("fit_conjecture: duplicate sample at n = " + std::to_string(s.n));
    }

    ConjectureFit fit;
    fit.j = j;
    fit.samples = samples;

    const auto f_values = extract_f_values(j, samples);
    std::vector<std::pair<Rational, Rational>> support;
    support.reserve(needed);
    for (std::size_t i = 0; i < needed; ++i)
        support.emplace_back(Rational(f_values[i].first), f_values[i].second);
    fit.f = lagrange_interpolate(support);
    fit.leading = fit.f.leading_coefficient();

    fit.predicted_rho.j = j;
    fit.predicted_rho.rational_part = Rational(j + 1, 2L * j);
    fit.predicted_rho.exp_coefficient = fit.leading;
    fit.predicted_rho.numeric = fit.predicted_rho.rational_part.to_double() -
                                fit.leading.to_double() * std::exp(static_cast<double>(-j));

    const bool degree_ok = fit.f.degree() <= j - 2;
    for (std::size_t i = needed; i < samples.size(); ++i) {
        const Rational predicted =
            ansatz_main_term(j, samples[i].n) - fit.f.evaluate(Rational(samples[i].n)) * correction_power(j, samples[i].n);
        if (predicted == Rational(samples[i].value))
            ++fit.holdout_matched;
        else
            fit.holdout_mismatched.push_back(samples[i].n);
    }
    fit.exploratory = (samples.size() == needed);
    fit.degree_claim_holds = degree_ok && fit.holdout_matched >= 1 && fit.holdout_mismatched.empty();
    return fit;
}

std::vector<ColumnSample> default_samples(int j, int count, int oracle_limit, int threads) {
    if (j < 1) throw std::invalid_argument("default_samples: j must be positive");
    if (count < 1) throw std::invalid_argument("default_samples: count must be positive");

    std::vector<ColumnSample> out;
    OracleOptions opts;
    opts.threads = threads;
    for (int n = std::max(j, 1); static_cast<int>(out.size()) < count; ++n) {
        if (j <= 5 || j == n) {
            out.push_back({n, spot_lucky_count(n, j), "closed-form"});
            continue;
        }
        if (n <= oracle_limit) {
            out.push_back({n, compute_lucky_table(n, Variant::All, opts).column_sums()
                                  [static_cast<std::size_t>(j - 1)],
                           "oracle"});
            continue;
        }
        if (auto ref = reference_column_sum(n, j)) {
            out.push_back({n, *ref, "reference"});
            continue;
        }
        break;  // no further source for this column
    }
    return out;
}

}  // namespace luckypark
