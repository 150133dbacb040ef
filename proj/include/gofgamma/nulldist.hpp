// Null-distribution machinery: chi-square tails and quantiles, the spectral
// one-term critical value and p-value built from the leading eigenvalues, and
// the batched Monte Carlo protocol with trimmed-mean critical values.
#ifndef GOFGAMMA_NULLDIST_HPP
#define GOFGAMMA_NULLDIST_HPP

#include <cstdint>
#include <vector>

#include "gofgamma/spectrum.hpp"

namespace gofgamma {

// Upper tail P(Chi2_df >= x) and lower quantile (P(Chi2_df <= result) = q).
double chi2_tail(int df, double x);
double chi2_quantile(int df, double q);

// One-term approximation to the tail of sum_k delta_k Chi2_1k: treat the sum
// as (delta_1 + delta_m)/2 times a Chi2_m. Critical value at the given level:
//   (delta_1 + delta_m)/2 * chi2_quantile(m, 1 - level).
double critical_value_spectral(const EigenSolution& e, int m, double level);

// Matching tail probability of the observed statistic.
double p_value_spectral(const EigenSolution& e, int m, double observed);

// Batched simulation protocol. The critical value is the trimmed mean over
// batches of the per-batch empirical (1 - level) quantile: each batch's
// statistics are sorted, the nearest-rank quantile taken (index
// ceil(q * reps), 1-based), the lowest and highest floor(trim * batches)
// batch quantiles dropped, and the rest averaged.
struct McProtocol {
    int batches = 10;
    int reps_per_batch = 10000;
    double trim = 0.20;
    std::uint64_t seed = 20250821;

    // Throws std::invalid_argument unless batches >= 1, reps_per_batch >= 100,
    // trim in [0, 0.5).
    void validate() const;
};

struct McResult {
    double critical_value = 0.0;
    std::vector<double> batch_quantiles;  // per batch, in batch order
    std::vector<double> sorted_stats;     // all batches pooled, ascending
    McProtocol protocol;
    double alpha = 0.0;
    int n = 0;
    double level = 0.0;

    // Pooled empirical quantile (nearest rank) and upper-tail p-value.
    double quantile(double q) const;
    double p_value(double observed) const;
};

// Simulates the null distribution of the statistic for shape alpha at sample
// size n. Each rep draws n Gamma(alpha, 1) variates from the stream keyed by
// (seed, batch, rep) and evaluates the statistic on the rescaled sample.
McResult simulate_null(double alpha, int n, double level,
                       const McProtocol& proto,
                       const SeriesControl& ctl = {});

} // namespace gofgamma

#endif
