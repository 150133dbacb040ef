// Command-line front end: runs the goodness-of-fit test on plain-text data,
// prints spectral tables and traces, simulates null distributions, estimates
// power against the built-in alternatives, reports approximate Bahadur
// slopes, and dumps the embedded example datasets.
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gofgamma/alternatives.hpp"
#include "gofgamma/errors.hpp"
#include "gofgamma/fixtures.hpp"
#include "gofgamma/report.hpp"

namespace {

using nlohmann::json;

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

std::string plain(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

// Configuration precedence is flags > environment > defaults; these helpers
// supply the environment layer.
std::optional<std::uint64_t> env_seed() {
    const char* s = std::getenv("GOFGAMMA_SEED");
    if (!s || !*s) return std::nullopt;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (*end != '\0')
        throw std::invalid_argument(
            "GOFGAMMA_SEED is not an unsigned integer");
    return static_cast<std::uint64_t>(v);
}

std::optional<int> env_nodes() {
    const char* s = std::getenv("GOFGAMMA_NODES");
    if (!s || !*s) return std::nullopt;
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (*end != '\0' || v < 8)
        throw std::invalid_argument(
            "GOFGAMMA_NODES must be an integer >= 8");
    return static_cast<int>(v);
}

gofgamma::AltKind parse_model(const std::string& name) {
    if (name == "rate") return gofgamma::AltKind::rate_shift;
    if (name == "shape") return gofgamma::AltKind::shape_shift;
    if (name == "contamination") return gofgamma::AltKind::contamination;
    throw std::invalid_argument("unknown model '" + name + "'");
}

struct CommonSim {
    int batches = 0;   // 0 means protocol default
    int reps = 0;
    std::uint64_t seed = 0;
    bool seed_set = false;
};

gofgamma::McProtocol resolve_protocol(const CommonSim& c) {
    gofgamma::McProtocol proto;
    if (c.batches > 0) proto.batches = c.batches;
    if (c.reps > 0) proto.reps_per_batch = c.reps;
    if (c.seed_set)
        proto.seed = c.seed;
    else if (auto e = env_seed())
        proto.seed = *e;
    proto.validate();
    return proto;
}

int run_cli(int argc, char** argv) {
    CLI::App app{"Goodness-of-fit test for the gamma family with known shape "
                 "and unknown rate"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit a single JSON document");

    // ---- test ----
    auto* cmd_test = app.add_subcommand(
        "test", "run the test on a whitespace/comma separated data file");
    std::string data_path;
    gofgamma::RunOptions opt;
    CommonSim test_sim;
    cmd_test->fallthrough(); // global --json may follow the subcommand name
    cmd_test->add_option("file", data_path, "input data file")->required();
    cmd_test->add_option("--alpha", opt.alpha, "known shape parameter")
        ->required();
    cmd_test->add_option("--level", opt.level, "test level")
        ->capture_default_str();
    cmd_test->add_option("--method", opt.method, "spectral | mc")
        ->capture_default_str()
        ->check(CLI::IsMember({"spectral", "mc"}));
    int opt_m = 0;
    cmd_test->add_option("--m", opt_m, "spectral terms (default: scree rule)");
    cmd_test->add_option("--seed", test_sim.seed, "MC seed");
    cmd_test->add_option("--batches", test_sim.batches, "MC batches");
    cmd_test->add_option("--reps", test_sim.reps, "MC reps per batch");

    // ---- tables ----
    auto* cmd_tables = app.add_subcommand("tables", "spectral tables");
    cmd_tables->fallthrough();
    cmd_tables->require_subcommand(1);
    auto* cmd_scree = cmd_tables->add_subcommand(
        "scree", "eigenvalue count needed for a relative tail eps");
    cmd_scree->fallthrough();
    double scree_eps = 1e-10;
    double scree_alpha = 0.0;
    cmd_scree->add_option("--eps", scree_eps, "relative tail bound")
        ->capture_default_str();
    cmd_scree->add_option("--alpha", scree_alpha,
                          "single shape (default: the standard set)");
    auto* cmd_eigen = cmd_tables->add_subcommand(
        "eigen", "leading eigenvalues of the estimated-process operator");
    cmd_eigen->fallthrough();
    double eigen_alpha = 0.0;
    int eigen_m = 0;
    cmd_eigen->add_option("--alpha", eigen_alpha, "shape parameter")
        ->required();
    cmd_eigen->add_option("--m", eigen_m, "how many (default: scree rule)");
    auto* cmd_trace = cmd_tables->add_subcommand(
        "trace", "closed-form operator traces");
    cmd_trace->fallthrough();
    double trace_alpha = 0.0;
    cmd_trace->add_option("--alpha", trace_alpha, "shape parameter")
        ->required();

    // ---- simulate-null ----
    auto* cmd_sim = app.add_subcommand(
        "simulate-null", "Monte Carlo critical value under the null");
    cmd_sim->fallthrough();
    double sim_alpha = 0.0, sim_level = 0.05;
    int sim_n = 0;
    CommonSim sim_sim;
    cmd_sim->add_option("--alpha", sim_alpha, "shape parameter")->required();
    cmd_sim->add_option("--n", sim_n, "sample size")->required();
    cmd_sim->add_option("--level", sim_level, "test level")
        ->capture_default_str();
    cmd_sim->add_option("--seed", sim_sim.seed, "MC seed");
    cmd_sim->add_option("--batches", sim_sim.batches, "MC batches");
    cmd_sim->add_option("--reps", sim_sim.reps, "MC reps per batch");

    // ---- power ----
    auto* cmd_power = app.add_subcommand(
        "power", "rejection rate against a built-in local alternative");
    cmd_power->fallthrough();
    std::string power_model, power_method = "spectral";
    double power_alpha = 0.0, power_level = 0.05;
    int power_n = 0;
    CommonSim power_sim;
    cmd_power->add_option("--model", power_model,
                          "rate | shape | contamination")
        ->required()
        ->check(CLI::IsMember({"rate", "shape", "contamination"}));
    cmd_power->add_option("--alpha", power_alpha, "shape parameter")
        ->required();
    cmd_power->add_option("--n", power_n, "sample size")->required();
    cmd_power->add_option("--level", power_level, "test level")
        ->capture_default_str();
    cmd_power
        ->add_option("--method", power_method,
                     "critical value source: spectral | mc")
        ->capture_default_str()
        ->check(CLI::IsMember({"spectral", "mc"}));
    cmd_power->add_option("--seed", power_sim.seed, "MC seed");
    cmd_power->add_option("--batches", power_sim.batches, "MC batches");
    cmd_power->add_option("--reps", power_sim.reps, "MC reps per batch");

    // ---- slope ----
    auto* cmd_slope = app.add_subcommand(
        "slope", "approximate Bahadur slope along a built-in direction");
    cmd_slope->fallthrough();
    std::string slope_model;
    double slope_alpha = 0.0, slope_theta = 0.1;
    cmd_slope->add_option("--model", slope_model,
                          "rate | shape | contamination")
        ->required()
        ->check(CLI::IsMember({"rate", "shape", "contamination"}));
    cmd_slope->add_option("--alpha", slope_alpha, "shape parameter")
        ->required();
    cmd_slope->add_option("--theta", slope_theta, "direction scale")
        ->capture_default_str();

    // ---- fixtures ----
    auto* cmd_fixtures = app.add_subcommand(
        "fixtures", "print an embedded dataset (no name lists them)");
    cmd_fixtures->fallthrough();
    std::string fixture_name;
    cmd_fixtures->add_option("name", fixture_name, "geiger | tractor");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e); // prints help or the parse error
        return code == 0 ? 0 : 2;
    }
    test_sim.seed_set = cmd_test->count("--seed") > 0;
    sim_sim.seed_set = cmd_sim->count("--seed") > 0;
    power_sim.seed_set = cmd_power->count("--seed") > 0;

    if (*cmd_test) {
        const gofgamma::Sample sample =
            gofgamma::parse_dataset_file(data_path);
        if (opt_m > 0) opt.m = opt_m;
        if (test_sim.seed_set) opt.seed = test_sim.seed;
        opt.proto = resolve_protocol(test_sim);
        const gofgamma::TestReport rep = gofgamma::run_test(sample, opt);
        if (as_json) {
            std::cout << rep.to_json() << "\n";
        } else {
            std::cout << "n               " << rep.n << "\n"
                      << "alpha           " << plain(rep.alpha) << "\n"
                      << "statistic       " << sci(rep.statistic) << "\n"
                      << "method          " << rep.method << "\n";
            if (rep.method == "spectral")
                std::cout << "m               " << rep.m << "\n";
            if (rep.seed)
                std::cout << "seed            " << *rep.seed << "\n";
            std::cout << "critical_value  " << sci(rep.critical_value) << "\n"
                      << "p_value         " << sci(rep.p_value) << "\n"
                      << "decision        " << rep.decision << "\n";
        }
        return rep.decision == "reject" ? 1 : 0;
    }

    if (*cmd_scree) {
        std::vector<double> alphas;
        if (cmd_scree->count("--alpha"))
            alphas.push_back(scree_alpha);
        else
            alphas = {0.5, 0.75, 1.0, 3.0, 5.0, 10.0, 20.0, 50.0};
        json rows = json::array();
        for (double a : alphas) {
            const int m = gofgamma::scree_m(a, scree_eps);
            rows.push_back({{"alpha", a}, {"m", m}});
            if (!as_json)
                std::cout << "alpha " << plain(a) << "  m " << m << "\n";
        }
        if (as_json)
            std::cout << json{{"eps", scree_eps}, {"rows", rows}}.dump(2)
                      << "\n";
        return 0;
    }

    if (*cmd_eigen) {
        const auto p = gofgamma::SpectralParams::make(eigen_alpha);
        const int m =
            eigen_m > 0 ? eigen_m : gofgamma::scree_m(eigen_alpha, 1e-10);
        const gofgamma::EigenSolution sol =
            gofgamma::solve_eigenvalues(p, m);
        if (as_json) {
            json j{{"alpha", eigen_alpha},
                   {"m", sol.m},
                   {"deltas", sol.deltas},
                   {"residuals", sol.residuals},
                   {"interlacing_ok", sol.interlacing_ok},
                   {"warnings", sol.warnings}};
            json brackets = json::array();
            for (const auto& b : sol.brackets)
                brackets.push_back({b.first, b.second});
            j["brackets"] = brackets;
            std::cout << j.dump(2) << "\n";
        } else {
            for (int k = 0; k < sol.m; ++k)
                std::cout << "delta_" << (k + 1) << "  "
                          << sci(sol.deltas[k]) << "  bracket ["
                          << sci(sol.brackets[k].first) << ", "
                          << sci(sol.brackets[k].second) << "]  residual "
                          << sci(sol.residuals[k]) << "\n";
            for (const auto& w : sol.warnings)
                std::cout << "warning: " << w << "\n";
        }
        return 0;
    }

    if (*cmd_trace) {
        const auto p = gofgamma::SpectralParams::make(trace_alpha);
        const double t0 = gofgamma::trace_s0(p);
        const double t1 = gofgamma::trace_s(p);
        if (as_json)
            std::cout << json{{"alpha", trace_alpha},
                              {"trace_s0", t0},
                              {"trace_s", t1}}
                             .dump(2)
                      << "\n";
        else
            std::cout << "trace_s0  " << sci(t0) << "\n"
                      << "trace_s   " << sci(t1) << "\n";
        return 0;
    }

    if (*cmd_sim) {
        const gofgamma::McProtocol proto = resolve_protocol(sim_sim);
        const gofgamma::McResult res =
            gofgamma::simulate_null(sim_alpha, sim_n, sim_level, proto);
        if (as_json) {
            std::cout << json{{"alpha", res.alpha},
                              {"n", res.n},
                              {"level", res.level},
                              {"critical_value", res.critical_value},
                              {"batch_quantiles", res.batch_quantiles},
                              {"protocol",
                               {{"batches", proto.batches},
                                {"reps_per_batch", proto.reps_per_batch},
                                {"trim", proto.trim},
                                {"seed", proto.seed}}}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << "alpha           " << plain(res.alpha) << "\n"
                      << "n               " << res.n << "\n"
                      << "level           " << plain(res.level) << "\n"
                      << "batches         " << proto.batches << "\n"
                      << "reps_per_batch  " << proto.reps_per_batch << "\n"
                      << "seed            " << proto.seed << "\n"
                      << "critical_value  " << sci(res.critical_value)
                      << "\n";
        }
        return 0;
    }

    if (*cmd_power) {
        const gofgamma::AltKind kind = parse_model(power_model);
        const gofgamma::AltModel model = gofgamma::make_alt(kind, power_alpha);
        const gofgamma::McProtocol proto = resolve_protocol(power_sim);
        double critical = 0.0;
        if (power_method == "spectral") {
            const auto p = gofgamma::SpectralParams::make(power_alpha);
            const int m = gofgamma::scree_m(power_alpha, 1e-10);
            const auto sol = gofgamma::solve_eigenvalues(p, m);
            critical = gofgamma::critical_value_spectral(sol, m, power_level);
        } else {
            critical = gofgamma::simulate_null(power_alpha, power_n,
                                               power_level, proto)
                           .critical_value;
        }
        const gofgamma::PowerResult res =
            gofgamma::power_simulation(model, power_n, critical, proto);
        if (as_json) {
            std::cout << json{{"model", power_model},
                              {"alpha", power_alpha},
                              {"n", power_n},
                              {"level", power_level},
                              {"method", power_method},
                              {"critical_value", critical},
                              {"rejection_rate", res.rejection_rate},
                              {"rejections", res.rejections},
                              {"reps", res.reps},
                              {"seed", res.seed}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << "model           " << power_model << "\n"
                      << "alpha           " << plain(power_alpha) << "\n"
                      << "n               " << power_n << "\n"
                      << "critical_value  " << sci(critical) << "\n"
                      << "rejection_rate  " << sci(res.rejection_rate) << "\n"
                      << "reps            " << res.reps << "\n"
                      << "seed            " << res.seed << "\n";
        }
        return 0;
    }

    if (*cmd_slope) {
        const gofgamma::AltKind kind = parse_model(slope_model);
        const gofgamma::AltModel model = gofgamma::make_alt(kind, slope_alpha);
        const int nodes =
            env_nodes().value_or(gofgamma::default_nodes(slope_alpha));
        const gofgamma::QuadratureRule rule =
            gofgamma::quadrature_for(slope_alpha, nodes);
        const auto p = gofgamma::SpectralParams::make(slope_alpha);
        const auto sol = gofgamma::solve_eigenvalues(p, 1);
        const gofgamma::BahadurResult res = gofgamma::bahadur_slope(
            slope_theta, model.h_limit, slope_alpha, sol, rule);
        if (as_json) {
            std::cout << json{{"model", slope_model},
                              {"alpha", slope_alpha},
                              {"theta", slope_theta},
                              {"b2", res.b2},
                              {"slope", res.slope},
                              {"delta_1", sol.deltas[0]},
                              {"assumption_gap", res.assumption_gap},
                              {"assumption_ok", res.assumption_ok}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << "model           " << slope_model << "\n"
                      << "alpha           " << plain(slope_alpha) << "\n"
                      << "theta           " << plain(slope_theta) << "\n"
                      << "b2              " << sci(res.b2) << "\n"
                      << "slope           " << sci(res.slope) << "\n"
                      << "assumption_gap  " << sci(res.assumption_gap)
                      << "\n";
        }
        return 0;
    }

    if (*cmd_fixtures) {
        if (fixture_name.empty()) {
            if (as_json)
                std::cout << json{{"fixtures", {"geiger", "tractor"}}}.dump(2)
                          << "\n";
            else
                std::cout << "geiger\ntractor\n";
            return 0;
        }
        const std::vector<double>* data = nullptr;
        if (fixture_name == "geiger")
            data = &gofgamma::fixtures::geiger_counter_times();
        else if (fixture_name == "tractor")
            data = &gofgamma::fixtures::tractor_brake_times();
        else
            throw std::invalid_argument("unknown fixture '" + fixture_name +
                                        "' (expected geiger or tractor)");
        if (as_json) {
            std::cout << json{{"name", fixture_name}, {"values", *data}}.dump(2)
                      << "\n";
        } else {
            for (double v : *data) std::cout << plain(v) << "\n";
        }
        return 0;
    }

    return 2; // unreachable with require_subcommand(1)
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const gofgamma::parse_error& e) {
        std::cerr << "error: " << e.what() << " (line " << e.line()
                  << ", column " << e.column() << ")\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
