// Python bindings for the main operations: the test statistic, the spectral
// eigenvalue machinery, critical values and p-values, the Monte Carlo
// protocol, and the full test report (as parsed JSON).
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gofgamma/alternatives.hpp"
#include "gofgamma/fixtures.hpp"
#include "gofgamma/report.hpp"

namespace py = pybind11;
using namespace gofgamma;

namespace {

Sample make_sample(const std::vector<double>& values) {
    return Sample::from(values);
}

} // namespace

PYBIND11_MODULE(_gofgamma, m) {
    m.doc() = "Goodness-of-fit test for the gamma family with known shape "
              "and unknown rate";
    m.attr("__version__") = library_version;

    m.def(
        "t_statistic",
        [](const std::vector<double>& values, double alpha) {
            return t_statistic(make_sample(values), alpha);
        },
        py::arg("values"), py::arg("alpha"),
        "Test statistic of the sample for the given shape.");

    m.def("scree_m", &scree_m, py::arg("alpha"), py::arg("eps") = 1e-10,
          "Number of eigenvalues needed for a relative tail below eps.");

    m.def(
        "eigenvalues",
        [](double alpha, int m) {
            const auto p = SpectralParams::make(alpha);
            return solve_eigenvalues(p, m).deltas;
        },
        py::arg("alpha"), py::arg("m"),
        "Leading eigenvalues of the estimated-process operator, descending.");

    m.def(
        "trace_s",
        [](double alpha) { return trace_s(SpectralParams::make(alpha)); },
        py::arg("alpha"), "Closed-form trace of the estimated-process operator.");

    m.def(
        "critical_value",
        [](double alpha, double level, std::optional<int> m) {
            const auto p = SpectralParams::make(alpha);
            const int terms = m.value_or(scree_m(alpha, 1e-10));
            const auto sol = solve_eigenvalues(p, terms);
            return critical_value_spectral(sol, terms, level);
        },
        py::arg("alpha"), py::arg("level") = 0.05,
        py::arg("m") = std::nullopt,
        "Spectral critical value at the given level.");

    m.def(
        "p_value",
        [](double alpha, double observed, std::optional<int> m) {
            const auto p = SpectralParams::make(alpha);
            const int terms = m.value_or(scree_m(alpha, 1e-10));
            const auto sol = solve_eigenvalues(p, terms);
            return p_value_spectral(sol, terms, observed);
        },
        py::arg("alpha"), py::arg("observed"), py::arg("m") = std::nullopt,
        "Spectral p-value of an observed statistic.");

    m.def(
        "simulate_null_critical",
        [](double alpha, int n, double level, int batches, int reps,
           std::uint64_t seed) {
            McProtocol proto;
            proto.batches = batches;
            proto.reps_per_batch = reps;
            proto.seed = seed;
            return simulate_null(alpha, n, level, proto).critical_value;
        },
        py::arg("alpha"), py::arg("n"), py::arg("level") = 0.05,
        py::arg("batches") = 10, py::arg("reps") = 10000,
        py::arg("seed") = static_cast<std::uint64_t>(20250821),
        "Monte Carlo critical value under the null.");

    m.def(
        "run_test",
        [](const std::vector<double>& values, double alpha, double level,
           const std::string& method, std::optional<int> m,
           std::optional<std::uint64_t> seed) {
            RunOptions opt;
            opt.alpha = alpha;
            opt.level = level;
            opt.method = method;
            opt.m = m;
            opt.seed = seed;
            const TestReport rep = run_test(make_sample(values), opt);
            py::module_ json = py::module_::import("json");
            return json.attr("loads")(rep.to_json());
        },
        py::arg("values"), py::arg("alpha"), py::arg("level") = 0.05,
        py::arg("method") = "spectral", py::arg("m") = std::nullopt,
        py::arg("seed") = std::nullopt,
        "Full test run; returns the report as a dict.");

    m.def(
        "fixture",
        [](const std::string& name) {
            if (name == "geiger") return fixtures::geiger_counter_times();
            if (name == "tractor") return fixtures::tractor_brake_times();
            throw py::value_error("unknown fixture '" + name + "'");
        },
        py::arg("name"), "Embedded example dataset by name.");
}
