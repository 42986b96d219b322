// Python bindings for the luckypark core. Exact integers cross the boundary
// as python ints and exact rationals as fractions.Fraction, so nothing is
// ever rounded.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "luckypark/closed_forms.hpp"
#include "luckypark/combinatorics.hpp"
#include "luckypark/conjecture.hpp"
#include "luckypark/dyck.hpp"
#include "luckypark/interpolation.hpp"
#include "luckypark/oracle.hpp"
#include "luckypark/parking.hpp"

namespace py = pybind11;
using namespace luckypark;

namespace pybind11::detail {

template <>
struct type_caster<BigInt> {
    PYBIND11_TYPE_CASTER(BigInt, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        object text = reinterpret_steal<object>(PyObject_Str(src.ptr()));
        if (!text) return false;
        value = BigInt(std::string(PyUnicode_AsUTF8(text.ptr())));
        return true;
    }

    static handle cast(const BigInt& v, return_value_policy, handle) {
        return PyLong_FromString(v.to_string().c_str(), nullptr, 10);
    }
};

template <>
struct type_caster<Rational> {
    PYBIND11_TYPE_CASTER(Rational, const_name("Fraction"));

    bool load(handle src, bool) {
        if (PyLong_Check(src.ptr())) {
            object text = reinterpret_steal<object>(PyObject_Str(src.ptr()));
            value = Rational(BigInt(std::string(PyUnicode_AsUTF8(text.ptr()))));
            return true;
        }
        if (hasattr(src, "numerator") && hasattr(src, "denominator")) {
            object num = reinterpret_steal<object>(PyObject_Str(src.attr("numerator").ptr()));
            object den = reinterpret_steal<object>(PyObject_Str(src.attr("denominator").ptr()));
            value = Rational(BigInt(std::string(PyUnicode_AsUTF8(num.ptr()))),
                             BigInt(std::string(PyUnicode_AsUTF8(den.ptr()))));
            return true;
        }
        return false;
    }

    static handle cast(const Rational& v, return_value_policy, handle) {
        object fraction = module_::import("fractions").attr("Fraction");
        object num = reinterpret_steal<object>(
            PyLong_FromString(v.numerator().to_string().c_str(), nullptr, 10));
        object den = reinterpret_steal<object>(
            PyLong_FromString(v.denominator().to_string().c_str(), nullptr, 10));
        return fraction(num, den).release();
    }
};

}  // namespace pybind11::detail

namespace {

OracleOptions options_from(int threads, bool allow_long) {
    OracleOptions opts;
    opts.threads = threads;
    opts.allow_long = allow_long;
    return opts;
}

std::vector<std::vector<BigInt>> table_rows(const LuckyTable& t) {
    std::vector<std::vector<BigInt>> rows;
    rows.reserve(static_cast<std::size_t>(t.n));
    for (int i = 1; i <= t.n; ++i) {
        std::vector<BigInt> row;
        row.reserve(static_cast<std::size_t>(t.n));
        for (int j = 1; j <= t.n; ++j) row.push_back(t.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<BigInt> distribution_counts(const LuckyDistribution& d) {
    std::vector<BigInt> counts;
    for (int k = 1; k <= d.n; ++k) counts.push_back(d.count(k));
    return counts;
}

py::dict fit_to_dict(const ConjectureFit& fit) {
    py::dict out;
    out["j"] = fit.j;
    py::list coeffs;
    for (int k = 0; k <= fit.f.degree(); ++k) coeffs.append(py::cast(fit.f.coefficient(k)));
    out["f_coefficients"] = coeffs;
    out["f"] = fit.f.to_string("n");
    out["degree"] = fit.f.degree();
    out["r"] = py::cast(fit.leading);
    out["predicted_rho"] = fit.predicted_rho.numeric;
    out["degree_claim_holds"] = fit.degree_claim_holds;
    out["exploratory"] = fit.exploratory;
    out["holdout_matched"] = fit.holdout_matched;
    out["holdout_mismatched"] = fit.holdout_mismatched;
    py::list samples;
    for (const auto& s : fit.samples) {
        py::dict item;
        item["n"] = s.n;
        item["value"] = py::cast(s.value);
        item["source"] = s.provenance;
        samples.append(item);
    }
    out["samples"] = samples;
    out["status"] = !fit.holdout_mismatched.empty() ? "refuted"
                    : fit.exploratory               ? "exploratory"
                    : fit.degree_claim_holds        ? "verified"
                                                    : "unverified";
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact lucky-car and lucky-spot statistics of parking functions";

    // --- parking process -----------------------------------------------------
    py::class_<ParkingOutcome>(m, "ParkingOutcome")
        .def_readonly("success", &ParkingOutcome::success)
        .def_readonly("spot_of_car", &ParkingOutcome::spot_of_car)
        .def_readonly("car_at_spot", &ParkingOutcome::car_at_spot)
        .def_readonly("lucky_cars", &ParkingOutcome::lucky_cars)
        .def_readonly("lucky_spots", &ParkingOutcome::lucky_spots)
        .def("__repr__", [](const ParkingOutcome& o) {
            return std::string("ParkingOutcome(success=") + (o.success ? "True" : "False") +
                   ", lucky_cars=" + std::to_string(o.lucky_cars.size()) + ")";
        });

    m.def("park", [](const std::vector<int>& prefs) { return park(PreferenceVector(prefs)); },
          py::arg("preferences"),
          "Run the parking process; cars park in the first free spot at or after their preference.");
    m.def("is_parking_function",
          [](const std::vector<int>& prefs) { return is_parking_function(PreferenceVector(prefs)); },
          py::arg("preferences"));
    m.def("classify_order",
          [](const std::vector<int>& prefs) { return to_string(classify_order(PreferenceVector(prefs))); },
          py::arg("preferences"));

    // --- combinatorial primitives ---------------------------------------------
    m.def("binomial", &luckypark::binomial, py::arg("m"), py::arg("k"));
    m.def("factorial", &luckypark::factorial, py::arg("n"));
    m.def("catalan", &luckypark::catalan, py::arg("n"));
    m.def("narayana", &luckypark::narayana, py::arg("n"), py::arg("k"));
    m.def("harmonic", &luckypark::harmonic, py::arg("n"));
    m.def("lagrange_interpolate",
          [](const std::vector<std::pair<Rational, Rational>>& pts) {
              return lagrange_interpolate(pts).coefficients();
          },
          py::arg("points"), "Exact interpolation; returns coefficients by ascending degree.");

    // --- enumeration oracle -----------------------------------------------------
    m.def("lucky_table",
          [](int n, const std::string& variant, int threads, bool allow_long) {
              return table_rows(
                  compute_lucky_table(n, variant_from_string(variant), options_from(threads, allow_long)));
          },
          py::arg("n"), py::arg("variant") = "all", py::arg("threads") = 0,
          py::arg("allow_long") = false,
          "Exact n x n matrix counting 'car i prefers spot j and is lucky'.");
    m.def("lucky_distribution",
          [](int n, const std::string& variant, int threads, bool allow_long) {
              return distribution_counts(
                  enumerate_and_count(n, variant_from_string(variant), options_from(threads, allow_long))
                      .distribution);
          },
          py::arg("n"), py::arg("variant") = "all", py::arg("threads") = 0,
          py::arg("allow_long") = false, "Counts c_1..c_n of parking functions by lucky count.");
    m.def("column_sums",
          [](int n, const std::string& variant, int threads, bool allow_long) {
              return compute_lucky_table(n, variant_from_string(variant), options_from(threads, allow_long))
                  .column_sums();
          },
          py::arg("n"), py::arg("variant") = "all", py::arg("threads") = 0,
          py::arg("allow_long") = false);
    m.def("row_sums",
          [](int n, const std::string& variant, int threads, bool allow_long) {
              return compute_lucky_table(n, variant_from_string(variant), options_from(threads, allow_long))
                  .row_sums();
          },
          py::arg("n"), py::arg("variant") = "all", py::arg("threads") = 0,
          py::arg("allow_long") = false);
    m.def("parking_functions",
          [](int n, const std::string& variant) {
              std::vector<std::vector<int>> out;
              for_each_parking_function(n, variant_from_string(variant),
                                        [&](const PreferenceVector& p) { out.push_back(p.values()); });
              return out;
          },
          py::arg("n"), py::arg("variant") = "all",
          "Every parking function of the variant, in lexicographic order (small n).");

    // --- closed forms -----------------------------------------------------------
    m.def("pollak_count",
          [](int n, const std::vector<int>& lucky, const std::vector<int>& unlucky) {
              return pollak_restricted_count(RestrictionSets(n, lucky, unlucky));
          },
          py::arg("n"), py::arg("lucky") = std::vector<int>{}, py::arg("unlucky") = std::vector<int>{},
          "Parking functions whose cars in `lucky` park at their preference and cars in "
          "`unlucky` do not.");
    m.def("lucky_polynomial",
          [](int n) { return lucky_polynomial(n).coefficients(); }, py::arg("n"),
          "Coefficients (by degree) of the polynomial whose x^k coefficient is c_k.");
    m.def("factorial_moment", &factorial_moment, py::arg("n"), py::arg("ell"));
    m.def("mean_lucky", &mean_lucky, py::arg("n"));
    m.def("variance_lucky", &variance_lucky, py::arg("n"));
    m.def("partial_parking_count", &partial_parking_count, py::arg("cars"), py::arg("spots"));
    m.def("q_border", &q_border, py::arg("n"), py::arg("i"), py::arg("j"));
    m.def("car_lucky_count", &car_lucky_count, py::arg("n"), py::arg("i"));
    m.def("spot_lucky_count", &spot_lucky_count, py::arg("n"), py::arg("j"));
    m.def("rho_asymptotic",
          [](int j) {
              const AsymptoticConstant c = rho_asymptotic(j);
              py::dict out;
              out["j"] = c.j;
              out["rational_part"] = py::cast(c.rational_part);
              out["exp_coefficient"] = py::cast(c.exp_coefficient);
              out["numeric"] = c.numeric;
              return out;
          },
          py::arg("j"), "Limit probability that spot j is lucky, exact parts plus a float rendering.");
    m.def("increasing_lucky_count", &increasing_lucky_count, py::arg("n"), py::arg("i"));
    m.def("increasing_expected", &increasing_expected, py::arg("n"));
    m.def("decreasing_q", &decreasing_q, py::arg("n"), py::arg("i"), py::arg("j"));
    m.def("ballot_paths", &ballot_paths, py::arg("k"), py::arg("ell"));
    m.def("decreasing_spot_count", &decreasing_spot_count, py::arg("n"), py::arg("j"));
    m.def("decreasing_total", &decreasing_total, py::arg("n"));
    m.def("decreasing_expected", &decreasing_expected, py::arg("n"));

    // --- Dyck paths ----------------------------------------------------------------
    m.def("dyck_to_increasing",
          [](const std::string& path) { return dyck_to_increasing(DyckPath::parse(path)).values(); },
          py::arg("path"));
    m.def("increasing_to_dyck",
          [](const std::vector<int>& prefs) {
              return increasing_to_dyck(PreferenceVector(prefs)).to_string();
          },
          py::arg("preferences"));
    m.def("dyck_to_decreasing",
          [](const std::string& path) { return dyck_to_decreasing(DyckPath::parse(path)).values(); },
          py::arg("path"));
    m.def("decreasing_to_dyck",
          [](const std::vector<int>& prefs) {
              return decreasing_to_dyck(PreferenceVector(prefs)).to_string();
          },
          py::arg("preferences"));
    m.def("peaks",
          [](const std::string& path) {
              std::vector<std::pair<int, int>> out;
              for (const Peak& p : peaks(DyckPath::parse(path))) out.emplace_back(p.car, p.spot);
              return out;
          },
          py::arg("path"), "Peaks as (car, spot) pairs.");
    m.def("has_peak_in_column",
          [](const std::string& path, int j) { return has_peak_in_column(DyckPath::parse(path), j); },
          py::arg("path"), py::arg("j"));
    m.def("reflect_antidiagonal",
          [](const std::string& path) { return reflect_antidiagonal(DyckPath::parse(path)).to_string(); },
          py::arg("path"));
    m.def("split_at_column",
          [](const std::string& path, int j) {
              const SplitResult r = split_at_column(DyckPath::parse(path), j);
              return py::make_tuple(r.big.to_string(), r.small.to_string(), r.k);
          },
          py::arg("path"), py::arg("j"), "Returns (big, small, k).");
    m.def("merge_at_column",
          [](const std::string& big, const std::string& small, int j) {
              return merge_at_column(DyckPath::parse(big), DyckPath::parse(small), j).to_string();
          },
          py::arg("big"), py::arg("small"), py::arg("j"));
    m.def("dyck_paths",
          [](int n) {
              std::vector<std::string> out;
              for_each_dyck_path(n, [&](const DyckPath& p) { out.push_back(p.to_string()); });
              return out;
          },
          py::arg("n"), "Every path of the given size (small n).");

    // --- conjecture lab ---------------------------------------------------------------
    m.def("fit_conjecture",
          [](int j, const std::optional<std::vector<std::pair<int, BigInt>>>& samples, int count,
             int oracle_limit, int threads) {
              std::vector<ColumnSample> input;
              if (samples) {
                  for (const auto& [n, value] : *samples) input.push_back({n, value, "user"});
              } else {
                  input = default_samples(j, count > 0 ? count : std::max(j - 1, 1) + 3, oracle_limit,
                                          threads);
              }
              return fit_to_dict(fit_conjecture(j, input));
          },
          py::arg("j"), py::arg("samples") = py::none(), py::arg("count") = 0,
          py::arg("oracle_limit") = 7, py::arg("threads") = 0,
          "Fit the column-sum correction polynomial f_j by exact interpolation.");
    m.def("extract_f_values",
          [](int j, const std::vector<std::pair<int, BigInt>>& samples) {
              std::vector<ColumnSample> input;
              for (const auto& [n, value] : samples) input.push_back({n, value, "user"});
              return extract_f_values(j, input);
          },
          py::arg("j"), py::arg("samples"));

    m.attr("__version__") = "0.1.0";
}
