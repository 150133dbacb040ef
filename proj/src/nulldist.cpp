#include "gofgamma/nulldist.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>

#include "gofgamma/gof.hpp"
#include "gofgamma/rng.hpp"

namespace gofgamma {

double chi2_tail(int df, double x) {
    if (df < 1) throw std::invalid_argument("chi2_tail: df must be >= 1");
    if (x < 0.0) throw std::invalid_argument("chi2_tail: x must be >= 0");
    boost::math::chi_squared_distribution<double> dist(df);
    return boost::math::cdf(boost::math::complement(dist, x));
}

double chi2_quantile(int df, double q) {
    if (df < 1) throw std::invalid_argument("chi2_quantile: df must be >= 1");
    if (!(q > 0.0) || !(q < 1.0))
        throw std::invalid_argument("chi2_quantile: q must lie in (0, 1)");
    boost::math::chi_squared_distribution<double> dist(df);
    return boost::math::quantile(dist, q);
}

double critical_value_spectral(const EigenSolution& e, int m, double level) {
    if (m < 1 || m > static_cast<int>(e.deltas.size()))
        throw std::invalid_argument(
            "critical_value_spectral: m must satisfy 1 <= m <= solved count");
    if (!(level > 0.0) || !(level < 1.0))
        throw std::invalid_argument(
            "critical_value_spectral: level must lie in (0, 1)");
    const double scale = 0.5 * (e.deltas[0] + e.deltas[m - 1]);
    return scale * chi2_quantile(m, 1.0 - level);
}

double p_value_spectral(const EigenSolution& e, int m, double observed) {
    if (m < 1 || m > static_cast<int>(e.deltas.size()))
        throw std::invalid_argument(
            "p_value_spectral: m must satisfy 1 <= m <= solved count");
    if (observed < 0.0)
        throw std::invalid_argument("p_value_spectral: observed must be >= 0");
    const double scale = 0.5 * (e.deltas[0] + e.deltas[m - 1]);
    return chi2_tail(m, observed / scale);
}

void McProtocol::validate() const {
    if (batches < 1)
        throw std::invalid_argument("McProtocol: batches must be >= 1");
    if (reps_per_batch < 100)
        throw std::invalid_argument("McProtocol: reps_per_batch must be >= 100");
    if (!(trim >= 0.0) || !(trim < 0.5))
        throw std::invalid_argument("McProtocol: trim must lie in [0, 0.5)");
}

namespace {

// Nearest-rank quantile of an ascending sequence: element at 1-based index
// ceil(q * size), clamped to the valid range.
double nearest_rank(const std::vector<double>& sorted_ascending, double q) {
    const auto n = static_cast<double>(sorted_ascending.size());
    auto idx = static_cast<long>(std::ceil(q * n));
    idx = std::max(1L, std::min(static_cast<long>(n), idx));
    return sorted_ascending[static_cast<std::size_t>(idx - 1)];
}

} // namespace

double McResult::quantile(double q) const {
    if (!(q > 0.0) || !(q < 1.0))
        throw std::invalid_argument("McResult::quantile: q must lie in (0, 1)");
    if (sorted_stats.empty())
        throw std::invalid_argument("McResult::quantile: empty result");
    return nearest_rank(sorted_stats, q);
}

double McResult::p_value(double observed) const {
    if (sorted_stats.empty())
        throw std::invalid_argument("McResult::p_value: empty result");
    const auto it = std::lower_bound(sorted_stats.begin(), sorted_stats.end(),
                                     observed);
    const auto count_ge = sorted_stats.end() - it;
    return static_cast<double>(count_ge) /
           static_cast<double>(sorted_stats.size());
}

McResult simulate_null(double alpha, int n, double level,
                       const McProtocol& proto, const SeriesControl& ctl) {
    if (!(alpha >= 0.5))
        throw std::invalid_argument("simulate_null: alpha must be >= 1/2");
    if (n < 1) throw std::invalid_argument("simulate_null: n must be >= 1");
    if (!(level > 0.0) || !(level < 1.0))
        throw std::invalid_argument("simulate_null: level must lie in (0, 1)");
    proto.validate();

    McResult result;
    result.protocol = proto;
    result.alpha = alpha;
    result.n = n;
    result.level = level;
    result.sorted_stats.reserve(
        static_cast<std::size_t>(proto.batches) * proto.reps_per_batch);

    RescaledSample r;
    r.y.resize(n);
    std::vector<double> batch(proto.reps_per_batch);
    for (int b = 0; b < proto.batches; ++b) {
        for (int rep = 0; rep < proto.reps_per_batch; ++rep) {
            SplitRng rng(proto.seed, static_cast<std::uint64_t>(b),
                         static_cast<std::uint64_t>(rep));
            double sum = 0.0;
            for (int i = 0; i < n; ++i) {
                r.y[i] = rng.next_gamma(alpha);
                sum += r.y[i];
            }
            const double mean = sum / n;
            if (mean > 0.0)
                for (double& y : r.y) y /= mean;
            else
                for (double& y : r.y) y = 0.0;
            batch[rep] = t_statistic(r, alpha, ctl);
        }
        std::vector<double> sorted_batch = batch;
        std::sort(sorted_batch.begin(), sorted_batch.end());
        result.batch_quantiles.push_back(
            nearest_rank(sorted_batch, 1.0 - level));
        result.sorted_stats.insert(result.sorted_stats.end(), batch.begin(),
                                   batch.end());
    }
    std::sort(result.sorted_stats.begin(), result.sorted_stats.end());

    // Trimmed mean of the per-batch quantiles.
    std::vector<double> trimmed = result.batch_quantiles;
    std::sort(trimmed.begin(), trimmed.end());
    const int drop = static_cast<int>(std::floor(proto.trim * proto.batches));
    double sum = 0.0;
    int kept = 0;
    for (int i = drop; i < static_cast<int>(trimmed.size()) - drop; ++i) {
        sum += trimmed[i];
        ++kept;
    }
    result.critical_value = sum / kept;
    return result;
}

} // namespace gofgamma
