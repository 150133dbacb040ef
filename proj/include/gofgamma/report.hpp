// Dataset parsing, test execution, and the serializable report consumed by
// the command-line front end and the language bindings.
#ifndef GOFGAMMA_REPORT_HPP
#define GOFGAMMA_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "gofgamma/gof.hpp"
#include "gofgamma/nulldist.hpp"

namespace gofgamma {

inline constexpr const char* library_version = "1.0.0";

// Parses whitespace/comma/newline separated nonnegative reals. Reports
// negative values, non-finite values, unparsable tokens, and empty input as
// parse_error with 1-based line and column.
Sample parse_dataset(std::string_view text);
Sample parse_dataset_file(const std::string& path);

struct RunOptions {
    double alpha = 0.0;
    double level = 0.05;
    std::string method = "spectral";      // "spectral" | "mc"
    std::optional<int> m;                 // spectral terms; default scree_m
    std::optional<std::uint64_t> seed;    // MC seed; default McProtocol's
    std::optional<int> nodes;             // quadrature nodes (informational)
    McProtocol proto;                     // MC protocol template
    SeriesControl ctl;
};

struct TestReport {
    double alpha = 0.0;
    int n = 0;
    double statistic = 0.0;
    std::string method;
    int m = 0;                            // spectral terms used (0 for mc)
    double critical_value = 0.0;
    double p_value = 0.0;
    std::string decision;                 // "reject" | "fail_to_reject"
    std::optional<std::uint64_t> seed;    // present for mc runs
    std::optional<McProtocol> protocol;   // present for mc runs

    // JSON round trip; includes library_version on output.
    std::string to_json() const;
    static TestReport from_json(const std::string& text);
};

// Runs the full test. Throws std::invalid_argument for alpha < 1/2 with a
// message explaining the order restriction of the transform.
TestReport run_test(const Sample& sample, const RunOptions& opt);

} // namespace gofgamma

#endif
