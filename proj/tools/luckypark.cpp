// luckypark: simulate the parking process, generate exact lucky-car /
// lucky-spot tables, verify closed formulas against the enumeration oracle,
// run the Dyck-path bijections, fit column-sum correction polynomials and
// export integer sequences.
//
// Exit codes: 0 success, 1 domain-level negative result (not a parking
// function, failed verification, input outside a bijection's domain),
// 2 usage error (malformed input, size limit without --allow-long).

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "luckypark/cache.hpp"
#include "luckypark/closed_forms.hpp"
#include "luckypark/combinatorics.hpp"
#include "luckypark/conjecture.hpp"
#include "luckypark/dyck.hpp"
#include "luckypark/interpolation.hpp"
#include "luckypark/oracle.hpp"
#include "luckypark/parking.hpp"
#include "luckypark/reference_data.hpp"

using namespace luckypark;
using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// Shared plumbing
// ---------------------------------------------------------------------------

struct CommonOptions {
    int threads = 0;
    bool allow_long = false;
    std::string cache_dir;  // flag wins over LUCKYPARK_CACHE_DIR
    bool provenance = false;
};

OracleOptions make_oracle_options(const CommonOptions& common) {
    OracleOptions opts;
    opts.threads = common.threads;
    opts.allow_long = common.allow_long;
    if (isatty(STDERR_FILENO)) {
        opts.progress = [](std::size_t done, std::size_t total) {
            std::cerr << "\renumerating: " << done << "/" << total << " subtrees" << std::flush;
            if (done == total) std::cerr << "\n";
        };
    }
    return opts;
}

std::optional<TableCache> make_cache(const CommonOptions& common) {
    std::string dir = common.cache_dir;
    if (dir.empty()) {
        if (const char* env = std::getenv("LUCKYPARK_CACHE_DIR")) dir = env;
    }
    if (dir.empty()) return std::nullopt;
    return TableCache(dir);
}

// Memoizing front end over the oracle with optional on-disk caching.
class OracleService {
public:
    OracleService(const CommonOptions& common)
        : opts_(make_oracle_options(common)), cache_(make_cache(common)) {}

    const OracleCounts& get(int n, Variant variant) {
        const auto key = std::make_pair(static_cast<int>(variant), n);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        if (cache_) {
            if (auto entry = cache_->load(variant, n)) {
                OracleCounts counts;
                counts.table = std::move(entry->table);
                counts.distribution = std::move(entry->distribution);
                return memo_.emplace(key, std::move(counts)).first->second;
            }
        }
        OracleCounts counts = enumerate_and_count(n, variant, opts_);
        if (cache_) cache_->store(CacheEntry::from_counts(counts));
        return memo_.emplace(key, std::move(counts)).first->second;
    }

    const OracleOptions& options() const { return opts_; }

private:
    OracleOptions opts_;
    std::optional<TableCache> cache_;
    std::map<std::pair<int, int>, OracleCounts> memo_;
};

enum class Format { Text, Csv, Json, Bfile };

Format parse_format(const std::string& name) {
    if (name == "text" || name == "text-table") return Format::Text;
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    if (name == "bfile") return Format::Bfile;
    throw CLI::ValidationError("format", "unknown format '" + name + "'");
}

void render_matrix_text(std::ostream& os, const std::string& title, int n,
                        const std::vector<std::vector<std::string>>& cells) {
    os << title << "\n";
    std::size_t width = 3;
    for (const auto& row : cells)
        for (const auto& cell : row) width = std::max(width, cell.size());
    for (int j = 1; j <= n; ++j) {
        os << (j == 1 ? "      " : "  ");
        std::string head = "j=" + std::to_string(j);
        os << std::string(width > head.size() ? width - head.size() : 0, ' ') << head;
    }
    os << "\n";
    for (int i = 1; i <= n; ++i) {
        std::string label = "i=" + std::to_string(i);
        os << label << std::string(6 > label.size() ? 6 - label.size() : 0, ' ');
        for (int j = 1; j <= n; ++j) {
            const std::string& cell = cells[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
            if (j > 1) os << "  ";
            os << std::string(width > cell.size() ? width - cell.size() : 0, ' ') << cell;
        }
        os << "\n";
    }
}

void write_output(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open output file: " + output_path);
    out << text;
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

int cmd_simulate(const std::vector<int>& prefs, Format format) {
    const PreferenceVector p(prefs);
    const ParkingOutcome out = park(p);

    if (format == Format::Json) {
        json doc;
        doc["preferences"] = p.values();
        doc["success"] = out.success;
        doc["spot_of_car"] = out.spot_of_car;
        doc["car_at_spot"] = out.car_at_spot;
        doc["lucky_cars"] = out.lucky_cars;
        doc["lucky_spots"] = out.lucky_spots;
        std::cout << doc.dump(2) << "\n";
        return out.success ? 0 : 1;
    }

    std::cout << "preferences: " << p.to_string() << "\n";
    for (int car = 1; car <= p.size(); ++car) {
        const int spot = out.spot_of_car[static_cast<std::size_t>(car - 1)];
        std::cout << "car " << car << ": prefers " << p.pref(car) << " -> ";
        if (spot == 0)
            std::cout << "exits";
        else
            std::cout << "parks " << spot << (spot == p.pref(car) ? "  [lucky]" : "");
        std::cout << "\n";
    }
    auto list = [](const std::vector<int>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
        return s.empty() ? "(none)" : s;
    };
    std::cout << "lucky cars:  " << list(out.lucky_cars) << "\n";
    std::cout << "lucky spots: " << list(out.lucky_spots) << "\n";
    std::cout << "parking function: " << (out.success ? "yes" : "no") << "\n";
    return out.success ? 0 : 1;
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

enum class Source { Both, Oracle, Closed };

Source parse_source(const std::string& name) {
    if (name == "both") return Source::Both;
    if (name == "oracle") return Source::Oracle;
    if (name == "closed") return Source::Closed;
    throw CLI::ValidationError("source", "unknown source '" + name + "'");
}

struct ColumnsRow {
    std::vector<std::optional<BigInt>> values;  // by spot
    std::vector<std::string> provenance;        // per spot, "+"-joined
};

// Column sums with the requested sourcing; cross-checks everything that has
// more than one route and throws std::runtime_error on any mismatch.
ColumnsRow column_sums_row(int n, Source source, OracleService& oracle) {
    ColumnsRow row;
    row.values.assign(static_cast<std::size_t>(n), std::nullopt);
    row.provenance.assign(static_cast<std::size_t>(n), "");
    const bool oracle_feasible =
        n <= (oracle.options().allow_long ? 12 : oracle.options().full_limit);

    std::vector<std::optional<BigInt>> from_oracle(static_cast<std::size_t>(n));
    if (source != Source::Closed) {
        if (!oracle_feasible && source == Source::Oracle)
            throw LimitError("table columns: n = " + std::to_string(n) +
                             " needs --allow-long for oracle sourcing");
        if (oracle_feasible) {
            const auto sums = oracle.get(n, Variant::All).table.column_sums();
            for (int j = 1; j <= n; ++j) from_oracle[static_cast<std::size_t>(j - 1)] = sums[static_cast<std::size_t>(j - 1)];
        }
    }

    for (int j = 1; j <= n; ++j) {
        const std::size_t idx = static_cast<std::size_t>(j - 1);
        std::vector<std::pair<std::string, BigInt>> candidates;
        if (from_oracle[idx]) candidates.emplace_back("oracle", *from_oracle[idx]);
        if (source != Source::Oracle && (j <= 5 || j == n))
            candidates.emplace_back("closed-form", spot_lucky_count(n, j));
        if (source == Source::Both) {
            if (auto ref = reference_column_sum(n, j)) candidates.emplace_back("reference", *ref);
        }
        if (candidates.empty()) continue;
        for (std::size_t c = 1; c < candidates.size(); ++c) {
            if (candidates[c].second != candidates[0].second)
                throw std::runtime_error("column sum cross-check failed at n = " + std::to_string(n) +
                                         ", j = " + std::to_string(j) + ": " + candidates[0].first +
                                         " says " + candidates[0].second.to_string() + ", " +
                                         candidates[c].first + " says " +
                                         candidates[c].second.to_string());
        }
        row.values[idx] = candidates[0].second;
        std::string prov;
        for (const auto& [name, value] : candidates) prov += (prov.empty() ? "" : "+") + name;
        row.provenance[idx] = prov;
    }
    return row;
}

int cmd_table(const std::string& kind, int n, Format format, Source source,
              const CommonOptions& common) {
    OracleService oracle(common);

    if (kind == "columns") {
        const ColumnsRow row = column_sums_row(n, source, oracle);
        std::ostringstream os;
        if (format == Format::Text) {
            os << "parking functions of length " << n << " where spot j is lucky\n";
            std::size_t width = 3;
            for (const auto& v : row.values)
                if (v) width = std::max(width, v->to_string().size());
            for (int j = 1; j <= n; ++j) {
                std::string head = "j=" + std::to_string(j);
                os << (j > 1 ? "  " : "") << std::string(width > head.size() ? width - head.size() : 0, ' ')
                   << head;
            }
            os << "\n";
            for (int j = 1; j <= n; ++j) {
                const auto& v = row.values[static_cast<std::size_t>(j - 1)];
                const std::string cell = v ? v->to_string() : "-";
                os << (j > 1 ? "  " : "") << std::string(width > cell.size() ? width - cell.size() : 0, ' ')
                   << cell;
            }
            os << "\n";
            if (common.provenance) {
                os << "provenance:";
                for (int j = 1; j <= n; ++j) {
                    const auto& p = row.provenance[static_cast<std::size_t>(j - 1)];
                    os << " j=" << j << ":" << (p.empty() ? "unavailable" : p);
                }
                os << "\n";
            }
        } else if (format == Format::Csv) {
            os << "j,count" << (common.provenance ? ",provenance" : "") << "\n";
            for (int j = 1; j <= n; ++j) {
                const auto& v = row.values[static_cast<std::size_t>(j - 1)];
                os << j << "," << (v ? v->to_string() : "");
                if (common.provenance) os << "," << row.provenance[static_cast<std::size_t>(j - 1)];
                os << "\n";
            }
        } else if (format == Format::Bfile) {
            for (int j = 1; j <= n; ++j) {
                const auto& v = row.values[static_cast<std::size_t>(j - 1)];
                if (v) os << j << " " << v->to_string() << "\n";
            }
        } else {
            json doc;
            doc["kind"] = "columns";
            doc["n"] = n;
            doc["generator"] = oracle_generator_version();
            json values = json::array();
            for (int j = 1; j <= n; ++j) {
                const auto& v = row.values[static_cast<std::size_t>(j - 1)];
                values.push_back(v ? json(v->to_string()) : json(nullptr));
            }
            doc["column_sums"] = values;
            if (common.provenance) doc["provenance"] = row.provenance;
            os << doc.dump(2) << "\n";
        }
        write_output(os.str(), "");
        return 0;
    }

    if (kind == "distribution") {
        const LuckyDistribution dist =
            source == Source::Closed
                ? [&] {
                      LuckyDistribution d;
                      d.variant = Variant::All;
                      d.n = n;
                      const Polynomial f = lucky_polynomial(n);
                      for (int k = 0; k <= n; ++k) d.counts.push_back(f.coefficient(k).to_integer());
                      return d;
                  }()
                : oracle.get(n, Variant::All).distribution;
        if (source == Source::Both) {
            const Polynomial f = lucky_polynomial(n);
            for (int k = 0; k <= n; ++k)
                if (Rational(dist.count(k)) != f.coefficient(k))
                    throw std::runtime_error("distribution cross-check failed at n = " +
                                             std::to_string(n) + ", k = " + std::to_string(k));
        }
        const std::string prov = source == Source::Closed   ? "closed-form"
                                 : source == Source::Oracle ? "oracle"
                                                            : "oracle+closed-form";
        std::ostringstream os;
        if (format == Format::Text) {
            os << "parking functions of length " << n << " with exactly k lucky cars\n";
            for (int k = 1; k <= n; ++k) os << "k=" << k << ": " << dist.count(k) << "\n";
            if (common.provenance) os << "provenance: " << prov << "\n";
        } else if (format == Format::Csv) {
            os << "k,count\n";
            for (int k = 1; k <= n; ++k) os << k << "," << dist.count(k) << "\n";
        } else if (format == Format::Bfile) {
            for (int k = 1; k <= n; ++k) os << k << " " << dist.count(k) << "\n";
        } else {
            json doc;
            doc["kind"] = "distribution";
            doc["n"] = n;
            json counts = json::array();
            for (int k = 1; k <= n; ++k) counts.push_back(dist.count(k).to_string());
            doc["counts"] = counts;
            if (common.provenance) doc["provenance"] = prov;
            os << doc.dump(2) << "\n";
        }
        write_output(os.str(), "");
        return 0;
    }

    // Matrix kinds: q, qinc, qdec.
    Variant variant;
    if (kind == "q") variant = Variant::All;
    else if (kind == "qinc") variant = Variant::WeaklyIncreasing;
    else if (kind == "qdec") variant = Variant::WeaklyDecreasing;
    else throw CLI::ValidationError("kind", "unknown table kind '" + kind + "'");

    if (format == Format::Bfile)
        throw CLI::ValidationError("format", "bfile output needs a sequence, not a matrix");

    auto closed_cell = [&](int i, int j) -> std::optional<BigInt> {
        switch (variant) {
            case Variant::All:
                if (i == 1 || i == n || j == 1 || j == n) return q_border(n, i, j);
                return std::nullopt;
            case Variant::WeaklyIncreasing:
                return i == j ? increasing_lucky_count(n, i) : BigInt(0);
            case Variant::WeaklyDecreasing:
                return decreasing_q(n, i, j);
        }
        return std::nullopt;
    };

    if (source == Source::Closed && variant == Variant::All)
        throw CLI::ValidationError(
            "source", "closed forms cover only the borders of the q table; use --source both");

    LuckyTable table;
    std::string prov;
    if (source == Source::Closed) {
        table.variant = variant;
        table.n = n;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) table.cells.push_back(*closed_cell(i, j));
        prov = "closed-form";
    } else {
        table = oracle.get(n, variant).table;
        prov = "oracle";
        if (source == Source::Both) {
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    if (auto expect = closed_cell(i, j); expect && *expect != table.at(i, j))
                        throw std::runtime_error(
                            "table cross-check failed at (" + std::to_string(i) + ", " +
                            std::to_string(j) + "): oracle says " + table.at(i, j).to_string() +
                            ", closed form says " + expect->to_string());
            prov = variant == Variant::All ? "oracle (borders cross-checked against closed forms)"
                                           : "oracle (cross-checked against closed forms)";
        }
    }

    std::ostringstream os;
    std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(n),
                                                std::vector<std::string>(static_cast<std::size_t>(n)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            cells[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                table.at(i, j).to_string();

    if (format == Format::Text) {
        std::string title = "q(i, j) for n = " + std::to_string(n) + " (" + to_string(variant) +
                            " parking functions; car i prefers spot j and is lucky)";
        render_matrix_text(os, title, n, cells);
        if (common.provenance) os << "provenance: " << prov << "\n";
    } else if (format == Format::Csv) {
        os << "i\\j";
        for (int j = 1; j <= n; ++j) os << "," << j;
        os << "\n";
        for (int i = 1; i <= n; ++i) {
            os << i;
            for (int j = 1; j <= n; ++j) os << "," << cells[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
            os << "\n";
        }
    } else {
        json doc;
        doc["kind"] = kind;
        doc["n"] = n;
        doc["variant"] = to_string(variant);
        doc["generator"] = oracle_generator_version();
        doc["cells"] = cells;
        if (common.provenance) doc["provenance"] = prov;
        os << doc.dump(2) << "\n";
    }
    write_output(os.str(), "");
    return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct Report {
    int failures = 0;
    void check(bool ok, const std::string& what) {
        std::cout << (ok ? "ok   " : "FAIL ") << what << "\n";
        failures += ok ? 0 : 1;
    }
};

void verify_pollak(int nmax, Report& report) {
    std::mt19937 rng(7);
    for (int n = 2; n <= nmax; ++n) {
        std::vector<unsigned> masks;
        for_each_parking_function(n, Variant::All, [&](const PreferenceVector& p) {
            unsigned m = 0;
            for (int car : park(p).lucky_cars) m |= 1u << (car - 1);
            masks.push_back(m);
        });
        bool all_ok = true;
        for (int trial = 0; trial < 60; ++trial) {
            std::vector<int> lucky, unlucky;
            for (int i = 1; i <= n; ++i) {
                switch (rng() % 3) {
                    case 0: lucky.push_back(i); break;
                    case 1: unlucky.push_back(i); break;
                    default: break;
                }
            }
            unsigned lmask = 0, umask = 0;
            for (int i : lucky) lmask |= 1u << (i - 1);
            for (int i : unlucky) umask |= 1u << (i - 1);
            long brute = 0;
            for (unsigned m : masks) brute += ((m & lmask) == lmask) && ((m & umask) == 0);
            all_ok = all_ok &&
                     pollak_restricted_count(RestrictionSets(n, lucky, unlucky)) == BigInt(brute);
        }
        report.check(all_ok, "restricted lucky/unlucky counts match enumeration (n = " +
                                 std::to_string(n) + ", 60 random cases)");
    }
}

void verify_borders(int nmax, OracleService& oracle, Report& report) {
    for (int n = 1; n <= nmax; ++n) {
        const LuckyTable& t = oracle.get(n, Variant::All).table;
        bool ok = true;
        for (int i = 1; i <= n; ++i) {
            ok = ok && q_border(n, i, 1) == t.at(i, 1) && q_border(n, i, n) == t.at(i, n) &&
                 q_border(n, 1, i) == t.at(1, i) && q_border(n, n, i) == t.at(n, i);
        }
        report.check(ok, "border formulas match the oracle on all border cells (n = " +
                             std::to_string(n) + ")");
    }
}

void verify_rowsums(int nmax, OracleService& oracle, Report& report) {
    for (int n = 1; n <= nmax; ++n) {
        const auto rows = oracle.get(n, Variant::All).table.row_sums();
        bool ok = true;
        for (int i = 1; i <= n; ++i)
            ok = ok && car_lucky_count(n, i) == rows[static_cast<std::size_t>(i - 1)];
        report.check(ok, "row sums equal (n+2-i)(n+1)^(n-2) (n = " + std::to_string(n) + ")");
    }
}

void verify_spots(int nmax, OracleService& oracle, Report& report) {
    for (int n = 1; n <= nmax; ++n) {
        const auto cols = oracle.get(n, Variant::All).table.column_sums();
        bool ok = true;
        for (int j = 1; j <= n; ++j) {
            if (j <= 5 || j == n)
                ok = ok && spot_lucky_count(n, j) == cols[static_cast<std::size_t>(j - 1)];
            if (auto ref = reference_column_sum(n, j))
                ok = ok && *ref == cols[static_cast<std::size_t>(j - 1)];
        }
        report.check(ok, "column sums match closed forms (j <= 5, j = n) and reference data (n = " +
                             std::to_string(n) + ")");
    }
}

void verify_distribution(int nmax, OracleService& oracle, Report& report) {
    for (int n = 1; n <= nmax; ++n) {
        const LuckyDistribution& d = oracle.get(n, Variant::All).distribution;
        const Polynomial f = lucky_polynomial(n);
        bool ok = true;
        for (int k = 0; k <= n; ++k) ok = ok && f.coefficient(k) == Rational(d.count(k));
        report.check(ok, "lucky polynomial coefficients equal the c_k distribution (n = " +
                             std::to_string(n) + ")");
        bool identities = d.count(1) == factorial(static_cast<unsigned long>(n - 1)) &&
                          d.count(n) == factorial(static_cast<unsigned long>(n));
        if (n >= 2) {
            identities = identities &&
                         Rational(d.count(2)) ==
                             Rational(n + 1) * Rational(factorial(static_cast<unsigned long>(n - 1))) *
                                     harmonic(n - 1) -
                                 Rational(n - 1) * Rational(factorial(static_cast<unsigned long>(n - 1)));
            identities = identities &&
                         Rational(d.count(n - 1)) ==
                             Rational(factorial(static_cast<unsigned long>(n + 1))) * harmonic(n) -
                                 Rational(2L * n) * Rational(factorial(static_cast<unsigned long>(n)));
        }
        report.check(identities,
                     "c_1, c_2, c_(n-1), c_n closed forms hold (n = " + std::to_string(n) + ")");
    }
}

void verify_moments(int nmax, OracleService& oracle, Report& report) {
    for (int n = 1; n <= nmax; ++n) {
        const LuckyDistribution& d = oracle.get(n, Variant::All).distribution;
        bool ok = true;
        for (int ell = 1; ell <= 3; ++ell) {
            Rational empirical(0);
            for (int k = 1; k <= n; ++k) {
                Rational falling(1);
                for (int t = 0; t < ell; ++t) falling *= Rational(k - t);
                empirical += falling * Rational(d.count(k));
            }
            empirical /= pow_signed(n + 1, n - 1);
            ok = ok && factorial_moment(n, ell) == empirical;
        }
        const Rational m1 = factorial_moment(n, 1);
        const Rational m2 = n >= 2 ? factorial_moment(n, 2) : Rational(0);
        ok = ok && mean_lucky(n) == m1 && variance_lucky(n) == m2 + m1 - m1 * m1;
        report.check(ok, "factorial moments, mean and variance agree with the enumeration (n = " +
                             std::to_string(n) + ")");
    }
}

void verify_eq7_eq8(int nmax, Report& report) {
    bool ok = true;
    for (int n = 1; n <= nmax; ++n)
        for (int j = 1; j <= n; ++j) {
            try {
                decreasing_spot_count(n, j);  // asserts both routes agree
            } catch (const std::logic_error&) {
                ok = false;
            }
        }
    report.check(ok, "column sums of the decreasing cell formula equal the Catalan convolution (n <= " +
                         std::to_string(nmax) + ")");
}

void verify_symmetry(int nmax, Report& report) {
    bool ok = true;
    for (int n = 1; n <= nmax; ++n)
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j) ok = ok && decreasing_q(n, i, j) == decreasing_q(n, j, i);
    report.check(ok, "decreasing cell counts are symmetric in car and spot (n <= " +
                         std::to_string(nmax) + ")");
}

void verify_narayana(int nmax, Report& report) {
    for (int n = 1; n <= nmax; ++n) {
        std::map<int, long> histogram;
        for_each_dyck_path(n, [&](const DyckPath& p) { ++histogram[static_cast<int>(peaks(p).size())]; });
        bool ok = true;
        for (int k = 1; k <= n; ++k) ok = ok && BigInt(histogram[k]) == narayana(n, k);
        report.check(ok, "peak counts over all paths are Narayana-distributed (n = " +
                             std::to_string(n) + ")");
    }
}

void verify_bijections(int nmax, Report& report) {
    for (int n = 1; n <= nmax; ++n) {
        bool round_trips = true, peak_luck = true, splits = true;
        for_each_dyck_path(n, [&](const DyckPath& p) {
            const PreferenceVector inc = dyck_to_increasing(p);
            const PreferenceVector dec = dyck_to_decreasing(p);
            round_trips = round_trips && increasing_to_dyck(inc) == p && decreasing_to_dyck(dec) == p;
            const ParkingOutcome o = park(dec);
            peak_luck = peak_luck && peaks(p).size() == o.lucky_spots.size();
            for (int j = 1; j <= n; ++j) {
                if (!has_peak_in_column(p, j)) continue;
                const SplitResult r = split_at_column(p, j);
                splits = splits && r.k >= 0 && r.k <= n - j && merge_at_column(r.big, r.small, j) == p;
            }
        });
        report.check(round_trips, "increasing/decreasing bijections round-trip (n = " + std::to_string(n) + ")");
        report.check(peak_luck, "peak count equals lucky count of the decreasing image (n = " + std::to_string(n) + ")");
        report.check(splits, "column split/merge round-trips (n = " + std::to_string(n) + ")");
    }
}

void verify_increasing(int nmax, OracleService& oracle, Report& report) {
    for (int n = 1; n <= nmax; ++n) {
        const LuckyTable& t = oracle.get(n, Variant::WeaklyIncreasing).table;
        bool ok = true;
        BigInt total(0);
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j)
                if (i != j) ok = ok && t.at(i, j) == BigInt(0);
            ok = ok && t.at(i, i) == increasing_lucky_count(n, i);
            total += t.at(i, i);
        }
        ok = ok && Rational(total) ==
                       increasing_expected(n) * Rational(catalan(static_cast<unsigned long>(n)));
        report.check(ok, "increasing counts are C_(i-1) C_(n-i+1) with mean 3n/(n+2) (n = " +
                             std::to_string(n) + ")");
    }
}

void verify_decreasing(int nmax, OracleService& oracle, Report& report) {
    for (int n = 1; n <= nmax; ++n) {
        const LuckyTable& t = oracle.get(n, Variant::WeaklyDecreasing).table;
        bool cells_ok = true;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) cells_ok = cells_ok && decreasing_q(n, i, j) == t.at(i, j);
        report.check(cells_ok, "decreasing cell formula matches the oracle (n = " + std::to_string(n) + ")");
        const auto cols = t.column_sums();
        bool sums_ok = true;
        for (int j = 1; j <= n; ++j)
            sums_ok = sums_ok && decreasing_spot_count(n, j) == cols[static_cast<std::size_t>(j - 1)];
        sums_ok = sums_ok && t.total() == decreasing_total(n) &&
                  decreasing_expected(n) * Rational(catalan(static_cast<unsigned long>(n))) ==
                      Rational(t.total());
        report.check(sums_ok, "decreasing spot counts, total C(2n,n)/2 and mean (n+1)/2 (n = " +
                                  std::to_string(n) + ")");
    }
}

void verify_minmax(int nmax, Report& report) {
    for (int n = 2; n <= nmax; ++n) {
        struct Extremes { std::size_t lo = 1000, hi = 0; };
        std::map<std::vector<int>, Extremes> groups;
        for_each_parking_function(n, Variant::All, [&](const PreferenceVector& p) {
            std::vector<int> key = p.values();
            std::sort(key.begin(), key.end());
            auto& e = groups[key];
            const std::size_t lucky = park(p).lucky_cars.size();
            e.lo = std::min(e.lo, lucky);
            e.hi = std::max(e.hi, lucky);
        });
        bool ok = true;
        for (const auto& [key, e] : groups) {
            std::vector<int> dec = key;
            std::reverse(dec.begin(), dec.end());
            ok = ok && park(PreferenceVector(key)).lucky_cars.size() == e.lo &&
                 park(PreferenceVector(dec)).lucky_cars.size() == e.hi;
        }
        report.check(ok, "monotone rearrangements attain the lucky-count extremes (n = " +
                             std::to_string(n) + ")");
    }
}

int cmd_verify(const std::string& suite, int nmax, const CommonOptions& common) {
    OracleService oracle(common);
    Report report;
    const int oracle_cap = common.allow_long ? 12 : 9;
    const auto capped = [&](int fallback) {
        return std::min(nmax > 0 ? nmax : fallback, oracle_cap);
    };
    const int plain = nmax > 0 ? nmax : 12;

    bool known = false;
    const bool all = suite == "all";
    if (all || suite == "pollak") { verify_pollak(capped(7), report); known = true; }
    if (all || suite == "borders") { verify_borders(capped(7), oracle, report); known = true; }
    if (all || suite == "rowsums") { verify_rowsums(capped(7), oracle, report); known = true; }
    if (all || suite == "spots") { verify_spots(capped(7), oracle, report); known = true; }
    if (all || suite == "distribution") { verify_distribution(capped(7), oracle, report); known = true; }
    if (all || suite == "moments") { verify_moments(capped(6), oracle, report); known = true; }
    if (all || suite == "eq7-eq8") { verify_eq7_eq8(plain, report); known = true; }
    if (all || suite == "symmetry") { verify_symmetry(plain, report); known = true; }
    if (all || suite == "narayana") { verify_narayana(std::min(nmax > 0 ? nmax : 8, 10), report); known = true; }
    if (all || suite == "bijections") { verify_bijections(std::min(nmax > 0 ? nmax : 7, 9), report); known = true; }
    if (all || suite == "increasing") { verify_increasing(std::min(nmax > 0 ? nmax : 10, 14), oracle, report); known = true; }
    if (all || suite == "decreasing") { verify_decreasing(std::min(nmax > 0 ? nmax : 10, 14), oracle, report); known = true; }
    if (all || suite == "minmax") { verify_minmax(capped(7), report); known = true; }
    if (!known)
        throw CLI::ValidationError("suite", "unknown suite '" + suite + "'");

    std::cout << (report.failures == 0 ? "result: pass" : "result: FAIL") << " ("
              << report.failures << " failures)\n";
    return report.failures == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// bijection
// ---------------------------------------------------------------------------

int cmd_bijection_paths(const std::string& op, const std::string& path_text) {
    const DyckPath path = DyckPath::parse(path_text);
    if (op == "path2inc" || op == "path2dec") {
        const PreferenceVector p =
            op == "path2inc" ? dyck_to_increasing(path) : dyck_to_decreasing(path);
        std::cout << p.to_string() << "\n";
        const DyckPath back = op == "path2inc" ? increasing_to_dyck(p) : decreasing_to_dyck(p);
        std::cout << "round-trip: " << (back == path ? "ok" : "MISMATCH") << "\n";
        return back == path ? 0 : 1;
    }
    if (op == "reflect") {
        const DyckPath image = reflect_antidiagonal(path);
        std::cout << image.to_string() << "\n";
        std::cout << "round-trip: " << (reflect_antidiagonal(image) == path ? "ok" : "MISMATCH") << "\n";
        return 0;
    }
    if (op == "peaks") {
        for (const Peak& p : peaks(path))
            std::cout << "car " << p.car << ", spot " << p.spot << "\n";
        return 0;
    }
    throw CLI::ValidationError("op", "unknown bijection '" + op + "'");
}

int cmd_bijection_prefs(const std::string& op, const std::vector<int>& prefs) {
    const PreferenceVector p(prefs);
    const DyckPath path = op == "inc2path" ? increasing_to_dyck(p) : decreasing_to_dyck(p);
    std::cout << path.to_string() << "\n";
    const PreferenceVector back =
        op == "inc2path" ? dyck_to_increasing(path) : dyck_to_decreasing(path);
    std::cout << "round-trip: " << (back == p ? "ok" : "MISMATCH") << "\n";
    return back == p ? 0 : 1;
}

int cmd_bijection_split(const std::string& path_text, int column) {
    const DyckPath path = DyckPath::parse(path_text);
    const SplitResult r = split_at_column(path, column);
    std::cout << "big:   " << (r.big.size() ? r.big.to_string() : "(empty)") << "\n";
    std::cout << "small: " << (r.small.size() ? r.small.to_string() : "(empty)") << "\n";
    std::cout << "k:     " << r.k << "\n";
    const bool ok = merge_at_column(r.big, r.small, column) == path;
    std::cout << "round-trip: " << (ok ? "ok" : "MISMATCH") << "\n";
    return ok ? 0 : 1;
}

int cmd_bijection_merge(const std::string& big_text, const std::string& small_text, int column) {
    const DyckPath big = DyckPath::parse(big_text);
    const DyckPath small = DyckPath::parse(small_text);
    const DyckPath merged = merge_at_column(big, small, column);
    std::cout << merged.to_string() << "\n";
    const SplitResult r = split_at_column(merged, column);
    const bool ok = r.big == big && r.small == small;
    std::cout << "round-trip: " << (ok ? "ok" : "MISMATCH") << "\n";
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// fit
// ---------------------------------------------------------------------------

int cmd_fit(int j, int sample_count, int oracle_limit, Format format, const CommonOptions& common) {
    const int count = sample_count > 0 ? sample_count : std::max(j - 1, 1) + 3;
    const auto samples = default_samples(j, count, oracle_limit, common.threads);
    const ConjectureFit fit = fit_conjecture(j, samples);

    const std::string status = !fit.holdout_mismatched.empty() ? "refuted"
                               : fit.exploratory               ? "exploratory"
                               : fit.degree_claim_holds        ? "verified"
                                                               : "unverified";
    if (format == Format::Json) {
        json doc;
        doc["j"] = j;
        json samples_json = json::array();
        for (const auto& s : fit.samples)
            samples_json.push_back({{"n", s.n}, {"value", s.value.to_string()}, {"source", s.provenance}});
        doc["samples"] = samples_json;
        json coeffs = json::array();
        for (int k = 0; k <= fit.f.degree(); ++k) coeffs.push_back(fit.f.coefficient(k).to_string());
        doc["f_coefficients"] = coeffs;
        doc["f"] = fit.f.to_string("n");
        doc["degree"] = fit.f.degree();
        doc["r"] = fit.leading.to_string();
        doc["predicted_rho"] = fit.predicted_rho.numeric;
        doc["degree_claim_holds"] = fit.degree_claim_holds;
        doc["holdout_matched"] = fit.holdout_matched;
        doc["holdout_mismatched"] = fit.holdout_mismatched;
        doc["status"] = status;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "column " << j << " correction-polynomial fit\n";
        std::cout << "samples:\n";
        for (const auto& s : fit.samples)
            std::cout << "  n=" << s.n << "  sum=" << s.value << "  source=" << s.provenance << "\n";
        std::cout << "f_" << j << "(n) = " << fit.f.to_string("n") << "\n";
        std::cout << "degree: " << fit.f.degree() << " (claimed: " << j - 2 << ")\n";
        std::cout << "r_" << j << " = " << fit.leading << "\n";
        std::cout << "predicted limit: " << fit.predicted_rho.rational_part << " - " << fit.leading
                  << "*e^-" << j << " = " << fit.predicted_rho.numeric << "\n";
        if (fit.exploratory)
            std::cout << "held-out checks: none available (minimum sample count)\n";
        else
            std::cout << "held-out checks: " << fit.holdout_matched << " matched, "
                      << fit.holdout_mismatched.size() << " mismatched\n";
        std::cout << "status: " << status << "\n";
    }
    return fit.holdout_mismatched.empty() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// export
// ---------------------------------------------------------------------------

struct SequencePoint {
    int index;
    BigInt value;
    std::string provenance;
};

std::vector<SequencePoint> export_sequence(const std::string& name, int nmax,
                                           OracleService& oracle, bool allow_long) {
    std::vector<SequencePoint> points;
    const int oracle_cap = allow_long ? 12 : 9;

    auto column_value = [&](int n, int j) -> SequencePoint {
        if (n <= oracle_cap && n <= 9) {
            // Cross-check the enumerated value against whatever else exists.
            const BigInt val =
                oracle.get(n, Variant::All).table.column_sums()[static_cast<std::size_t>(j - 1)];
            if (j <= 5 || j == n)
                if (spot_lucky_count(n, j) != val)
                    throw std::runtime_error("export: oracle and closed form disagree at n = " +
                                             std::to_string(n));
            return {n, val, "oracle"};
        }
        if (j <= 5 || j == n) return {n, spot_lucky_count(n, j), "closed-form"};
        if (auto ref = reference_column_sum(n, j)) return {n, *ref, "reference"};
        if (auto sub = reference_subdiagonal(n); sub && j == n - 1) return {n, *sub, "reference"};
        throw LimitError("export: no source for column " + std::to_string(j) + " at n = " +
                         std::to_string(n) + " (oracle needs --allow-long up to 12)");
    };

    if (name == "subdiagonal") {
        for (int n = std::max(2, 2); n <= nmax; ++n) points.push_back(column_value(n, n - 1));
        return points;
    }
    if (name == "total-lucky") {
        for (int n = 1; n <= nmax; ++n) {
            // mu * (n+1)^(n-1) = n(n+3)/2 * (n+1)^(n-2), cross-checked
            // against the enumerated row sums at small n.
            const BigInt total =
                (Rational(static_cast<long>(n) * (n + 3), 2) * pow_signed(n + 1, n - 2)).to_integer();
            if (n <= 7) {
                BigInt enumerated(0);
                for (const BigInt& cell : oracle.get(n, Variant::All).table.cells) enumerated += cell;
                if (enumerated != total)
                    throw std::runtime_error("export: total-lucky cross-check failed at n = " +
                                             std::to_string(n));
                points.push_back({n, total, "oracle+closed-form"});
            } else {
                points.push_back({n, total, "closed-form"});
            }
        }
        return points;
    }
    if (name.rfind("column-", 0) == 0) {
        const int j = std::stoi(name.substr(7));
        if (j < 1) throw CLI::ValidationError("sequence", "column index must be positive");
        for (int n = std::max(j, 1); n <= nmax; ++n) points.push_back(column_value(n, j));
        return points;
    }
    throw CLI::ValidationError("sequence", "unknown sequence '" + name +
                                               "' (try subdiagonal, total-lucky, column-J)");
}

int cmd_export(const std::string& name, int nmax, Format format, const std::string& output,
               const CommonOptions& common) {
    OracleService oracle(common);
    const auto points = export_sequence(name, nmax, oracle, common.allow_long);
    std::ostringstream os;
    if (format == Format::Csv) {
        os << "n,value" << (common.provenance ? ",provenance" : "") << "\n";
        for (const auto& p : points) {
            os << p.index << "," << p.value;
            if (common.provenance) os << "," << p.provenance;
            os << "\n";
        }
    } else if (format == Format::Json) {
        json doc;
        doc["sequence"] = name;
        json values = json::array();
        for (const auto& p : points) {
            json item = {{"n", p.index}, {"value", p.value.to_string()}};
            if (common.provenance) item["provenance"] = p.provenance;
            values.push_back(item);
        }
        doc["values"] = values;
        os << doc.dump(2) << "\n";
    } else {  // bfile
        for (const auto& p : points) os << p.index << " " << p.value << "\n";
    }
    write_output(os.str(), output);
    return 0;
}

}  // namespace

// ---------------------------------------------------------------------------

int main(int argc, char** argv) {
    CLI::App app{"exact lucky-car and lucky-spot statistics of parking functions"};
    app.require_subcommand(1);
    int rc = 0;

    // simulate
    auto* sim = app.add_subcommand("simulate", "run the parking process on a preference list");
    std::vector<int> sim_prefs;
    std::string sim_format = "text";
    sim->add_option("preferences", sim_prefs, "1-based spot preferences, one per car")
        ->required()
        ->expected(-1);
    sim->add_option("--format", sim_format, "text or json");
    sim->callback([&] { rc = cmd_simulate(sim_prefs, parse_format(sim_format)); });

    // table
    auto* tab = app.add_subcommand("table", "emit a lucky table (q, qinc, qdec, columns, distribution)");
    std::string tab_kind, tab_format = "text", tab_source = "both";
    int tab_n = 0;
    CommonOptions tab_common;
    tab->add_option("kind", tab_kind, "q | qinc | qdec | columns | distribution")->required();
    tab->add_option("n", tab_n, "number of cars")->required()->check(CLI::PositiveNumber);
    tab->add_option("--format", tab_format, "text, csv, json or bfile");
    tab->add_option("--source", tab_source, "both (cross-check, default), oracle or closed");
    tab->add_option("--threads", tab_common.threads, "oracle worker threads (0 = all cores)");
    tab->add_flag("--allow-long", tab_common.allow_long, "permit full enumeration beyond n = 9 (up to 12)");
    tab->add_flag("--provenance", tab_common.provenance, "mark where every value came from");
    tab->add_option("--cache-dir", tab_common.cache_dir, "cache oracle tables here (or LUCKYPARK_CACHE_DIR)");
    tab->callback([&] {
        rc = cmd_table(tab_kind, tab_n, parse_format(tab_format), parse_source(tab_source), tab_common);
    });

    // verify
    auto* ver = app.add_subcommand("verify", "check a formula family against the enumeration oracle");
    std::string ver_suite;
    int ver_nmax = 0;
    CommonOptions ver_common;
    ver->add_option("suite", ver_suite,
                    "pollak | borders | rowsums | spots | distribution | moments | eq7-eq8 | "
                    "symmetry | narayana | bijections | increasing | decreasing | minmax | all")
        ->required();
    ver->add_option("nmax", ver_nmax, "largest n to check (suite-specific default)");
    ver->add_option("--threads", ver_common.threads, "oracle worker threads");
    ver->add_flag("--allow-long", ver_common.allow_long, "permit full enumeration beyond n = 9");
    ver->add_option("--cache-dir", ver_common.cache_dir, "cache oracle tables here");
    ver->callback([&] { rc = cmd_verify(ver_suite, ver_nmax, ver_common); });

    // bijection
    auto* bij = app.add_subcommand("bijection", "apply a Dyck-path bijection");
    bij->require_subcommand(1);
    std::vector<int> bij_prefs;
    std::string bij_path, bij_big, bij_small;
    int bij_column = 0;
    for (const char* op : {"inc2path", "dec2path"}) {
        auto* sub = bij->add_subcommand(op, "monotone parking function -> path");
        sub->add_option("preferences", bij_prefs, "preference list")->required()->expected(-1);
        sub->callback([&rc, &bij_prefs, op] { rc = cmd_bijection_prefs(op, bij_prefs); });
    }
    for (const char* op : {"path2inc", "path2dec", "reflect", "peaks"}) {
        auto* sub = bij->add_subcommand(op, "path -> parking function / path / peak list");
        sub->add_option("path", bij_path, "path over N and E, e.g. NNENEE")->required();
        sub->callback([&rc, &bij_path, op] { rc = cmd_bijection_paths(op, bij_path); });
    }
    {
        auto* sub = bij->add_subcommand("split", "split a path with a column-j peak into a pair");
        sub->add_option("path", bij_path, "path over N and E")->required();
        sub->add_option("--column", bij_column, "peak column j")->required()->check(CLI::PositiveNumber);
        sub->callback([&] { rc = cmd_bijection_split(bij_path, bij_column); });
    }
    {
        auto* sub = bij->add_subcommand("merge", "inverse of split");
        sub->add_option("big", bij_big, "first (larger) path")->required();
        sub->add_option("small", bij_small, "second (smaller) path; may be empty ('')");
        sub->add_option("--column", bij_column, "peak column j")->required()->check(CLI::PositiveNumber);
        sub->callback([&] { rc = cmd_bijection_merge(bij_big, bij_small, bij_column); });
    }

    // fit
    auto* fit = app.add_subcommand("fit", "fit the column-sum correction polynomial f_j");
    int fit_j = 0, fit_samples = 0, fit_oracle_limit = 7;
    std::string fit_format = "text";
    CommonOptions fit_common;
    fit->add_option("j", fit_j, "column index")->required()->check(CLI::PositiveNumber);
    fit->add_option("--samples", fit_samples, "number of samples (default: j+2)");
    fit->add_option("--oracle-limit", fit_oracle_limit, "largest n sampled by enumeration (default 7)");
    fit->add_option("--format", fit_format, "text or json");
    fit->add_option("--threads", fit_common.threads, "oracle worker threads");
    fit->callback([&] {
        rc = cmd_fit(fit_j, fit_samples, fit_oracle_limit, parse_format(fit_format), fit_common);
    });

    // export
    auto* exp = app.add_subcommand("export", "emit an integer sequence (b-file by default)");
    std::string exp_name, exp_format = "bfile", exp_output;
    int exp_nmax = 0;
    CommonOptions exp_common;
    exp->add_option("sequence", exp_name, "subdiagonal | total-lucky | column-J")->required();
    exp->add_option("nmax", exp_nmax, "largest n")->required()->check(CLI::PositiveNumber);
    exp->add_option("--format", exp_format, "bfile, csv or json");
    exp->add_option("--output", exp_output, "write to a file instead of stdout");
    exp->add_option("--threads", exp_common.threads, "oracle worker threads");
    exp->add_flag("--allow-long", exp_common.allow_long, "permit full enumeration beyond n = 9");
    exp->add_flag("--provenance", exp_common.provenance, "mark where every value came from");
    exp->add_option("--cache-dir", exp_common.cache_dir, "cache oracle tables here");
    exp->callback([&] {
        rc = cmd_export(exp_name, exp_nmax, parse_format(exp_format), exp_output, exp_common);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const LimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CacheError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const NoClosedFormError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
