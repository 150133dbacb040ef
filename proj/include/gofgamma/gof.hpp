// The test statistic for gamma goodness of fit with known shape alpha and
// unknown rate: n times the squared L2 distance, against the Gamma(alpha, 1)
// probability weight, between the empirical Hankel transform of the rescaled
// sample and the transform e^{-t/alpha} expected under the null. Evaluated in
// closed form as a V-statistic, with a quadrature route kept as a cross-check.
// Also the two limit covariance kernels of the underlying empirical process.
#ifndef GOFGAMMA_GOF_HPP
#define GOFGAMMA_GOF_HPP

#include <span>
#include <vector>

#include "gofgamma/hankel.hpp"
#include "gofgamma/specfun.hpp"

namespace gofgamma {

// An observed sample of nonnegative values with its precomputed mean.
struct Sample {
    std::vector<double> values;
    double mean = 0.0;

    int n() const { return static_cast<int>(values.size()); }

    // Validates non-emptiness and that every value is finite and >= 0.
    static Sample from(std::vector<double> values);
};

// Sample rescaled by its mean: y_j = x_j / mean, or all zeros if the mean
// is 0 (possible only when every observation is 0).
struct RescaledSample {
    std::vector<double> y;

    int n() const { return static_cast<int>(y.size()); }
};

RescaledSample rescale(const Sample& s);

// The V-statistic kernel h(x, y): with q(u) = e^{-alpha u/(alpha+1)},
//   h = e^{-x-y} M(x y)
//     - (alpha/(alpha+1))^alpha (q(x) + q(y))
//     + (alpha/(alpha+2))^alpha,
// where M is the positive series kernel_m. Symmetric in x and y.
double vkernel_h(double x, double y, double alpha,
                 const SeriesControl& ctl = {});

// The statistic (1/n) sum_{i,j} h(y_i, y_j) over the rescaled sample.
// Deterministic result independent of thread count: the pair sum is split
// into fixed index blocks, each accumulated with compensated summation, and
// the block sums are combined in index order.
double t_statistic(const RescaledSample& r, double alpha,
                   const SeriesControl& ctl = {});
double t_statistic(const Sample& s, double alpha,
                   const SeriesControl& ctl = {});

// Direct quadrature route: n * integral of (empirical transform - e^{-t/alpha})^2
// against dP0(t). Slower; used to cross-check the V-statistic form.
double t_statistic_quadrature(const Sample& s, double alpha,
                              const QuadratureRule& rule,
                              const SeriesControl& ctl = {});

// Limit covariance kernel of the raw empirical Hankel process at (s, t):
//   K0(s, t) = e^{-(s+t)/alpha} M(s t / alpha^2).
double cov_k0(double s, double t, double alpha, const SeriesControl& ctl = {});

// Limit covariance kernel after rate estimation:
//   K(s, t) = K0(s, t) - e^{-(s+t)/alpha} (s t / alpha^3 + 1).
double cov_k(double s, double t, double alpha, const SeriesControl& ctl = {});

} // namespace gofgamma

#endif
