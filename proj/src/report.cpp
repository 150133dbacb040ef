#include "gofgamma/report.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gofgamma/errors.hpp"

namespace gofgamma {

namespace {

bool is_separator(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == ',';
}

} // namespace

Sample parse_dataset(std::string_view text) {
    std::vector<double> values;
    int line = 1, col = 1;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        const char c = text[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (is_separator(c)) {
            ++col;
            ++i;
            continue;
        }
        const int tok_line = line, tok_col = col;
        const std::size_t start = i;
        while (i < n && !is_separator(text[i]) && text[i] != '\n') {
            ++i;
            ++col;
        }
        const std::string token(text.substr(start, i - start));

        errno = 0;
        char* end = nullptr;
        const double v = std::strtod(token.c_str(), &end);
        if (end != token.c_str() + token.size())
            throw parse_error("unparsable value '" + token + "'", tok_line,
                              tok_col);
        if (errno == ERANGE || !std::isfinite(v))
            throw parse_error("non-finite value '" + token + "'", tok_line,
                              tok_col);
        if (v < 0.0)
            throw parse_error("negative value '" + token + "'", tok_line,
                              tok_col);
        values.push_back(v);
    }
    if (values.empty()) throw parse_error("empty dataset", 1, 1);
    return Sample::from(std::move(values));
}

Sample parse_dataset_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw parse_error("cannot open file '" + path + "'", 1, 1);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_dataset(buf.str());
}

TestReport run_test(const Sample& sample, const RunOptions& opt) {
    if (!(opt.alpha >= 0.5))
        throw std::invalid_argument(
            "run_test: shape alpha must be >= 1/2 (the transform order "
            "alpha - 1 must stay >= -1/2 for the Bessel kernel to be "
            "defined)");
    if (!(opt.level > 0.0) || !(opt.level < 1.0))
        throw std::invalid_argument("run_test: level must lie in (0, 1)");

    TestReport rep;
    rep.alpha = opt.alpha;
    rep.n = sample.n();
    rep.method = opt.method;
    rep.statistic = t_statistic(sample, opt.alpha, opt.ctl);

    if (opt.method == "spectral") {
        const int m = opt.m.value_or(scree_m(opt.alpha, 1e-10));
        if (m < 1)
            throw std::invalid_argument("run_test: m must be >= 1");
        const SpectralParams p = SpectralParams::make(opt.alpha);
        const EigenSolution sol = solve_eigenvalues(p, m, opt.ctl);
        rep.m = m;
        rep.critical_value = critical_value_spectral(sol, m, opt.level);
        rep.p_value = p_value_spectral(sol, m, rep.statistic);
    } else if (opt.method == "mc") {
        McProtocol proto = opt.proto;
        if (opt.seed) proto.seed = *opt.seed;
        const McResult mc =
            simulate_null(opt.alpha, sample.n(), opt.level, proto, opt.ctl);
        rep.m = 0;
        rep.critical_value = mc.critical_value;
        rep.p_value = mc.p_value(rep.statistic);
        rep.seed = proto.seed;
        rep.protocol = proto;
    } else {
        throw std::invalid_argument("run_test: unknown method '" + opt.method +
                                    "' (expected 'spectral' or 'mc')");
    }
    rep.decision =
        rep.statistic > rep.critical_value ? "reject" : "fail_to_reject";
    return rep;
}

std::string TestReport::to_json() const {
    nlohmann::json j;
    j["library_version"] = library_version;
    j["alpha"] = alpha;
    j["n"] = n;
    j["statistic"] = statistic;
    j["method"] = method;
    j["m"] = m;
    j["critical_value"] = critical_value;
    j["p_value"] = p_value;
    j["decision"] = decision;
    if (seed) j["seed"] = *seed;
    if (protocol) {
        j["protocol"] = {{"batches", protocol->batches},
                         {"reps_per_batch", protocol->reps_per_batch},
                         {"trim", protocol->trim},
                         {"seed", protocol->seed}};
    }
    return j.dump(2);
}

TestReport TestReport::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("invalid report JSON: ") + e.what(), 1,
                          1);
    }
    TestReport rep;
    try {
        rep.alpha = j.at("alpha").get<double>();
        rep.n = j.at("n").get<int>();
        rep.statistic = j.at("statistic").get<double>();
        rep.method = j.at("method").get<std::string>();
        rep.m = j.at("m").get<int>();
        rep.critical_value = j.at("critical_value").get<double>();
        rep.p_value = j.at("p_value").get<double>();
        rep.decision = j.at("decision").get<std::string>();
        if (j.contains("seed"))
            rep.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("protocol")) {
            McProtocol proto;
            const auto& p = j.at("protocol");
            proto.batches = p.at("batches").get<int>();
            proto.reps_per_batch = p.at("reps_per_batch").get<int>();
            proto.trim = p.at("trim").get<double>();
            proto.seed = p.at("seed").get<std::uint64_t>();
            rep.protocol = proto;
        }
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("report JSON missing field: ") +
                              e.what(),
                          1, 1);
    }
    return rep;
}

} // namespace gofgamma
