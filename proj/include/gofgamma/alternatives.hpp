// Contiguous alternatives to the gamma null: the built-in local model
// families, the shift function that determines the noncentral mean of the
// limit process, finite-sample power simulation, and approximate Bahadur
// slopes.
#ifndef GOFGAMMA_ALTERNATIVES_HPP
#define GOFGAMMA_ALTERNATIVES_HPP

#include <cstdint>
#include <functional>
#include <string>

#include "gofgamma/hankel.hpp"
#include "gofgamma/nulldist.hpp"
#include "gofgamma/rng.hpp"
#include "gofgamma/spectrum.hpp"

namespace gofgamma {

enum class AltKind { rate_shift, shape_shift, contamination, custom };

// A contiguous family of alternatives drifting toward the null at rate
// 1/sqrt n: density_ratio_n(x, n) is the alternative density over the null
// density, h_n(x, n) = sqrt(n) (density_ratio_n - 1) exactly, and h_limit is
// the pointwise limit of h_n. sample1 draws one observation from the
// finite-n alternative law.
struct AltModel {
    AltKind kind = AltKind::custom;
    double alpha = 0.0;
    std::function<double(double, double)> density_ratio_n;  // (x, n)
    std::function<double(double, double)> h_n;              // (x, n)
    std::function<double(double)> h_limit;
    std::function<double(SplitRng&, double)> sample1;       // (rng, n)
    std::string description;
};

// The built-in families for shape alpha >= 1/2:
//   rate_shift:    Gamma(alpha, 1 + 1/sqrt n),   h_limit(x) = alpha - x
//   shape_shift:   Gamma(alpha + 1/sqrt n, 1),   h_limit(x) = log x - digamma(alpha)
//   contamination: (1 - 1/sqrt n) Gamma(alpha, 1) + (1/sqrt n) Gamma(2 alpha, 1),
//                  h_limit(x) = Gamma(alpha) x^alpha / Gamma(2 alpha) - 1.
AltModel make_alt(AltKind kind, double alpha);

// Shift function of the limit process under the local alternative with
// direction h: quadrature over x of
//   [ kernel_j(alpha-1, t x / alpha)
//     + ((x - alpha) / alpha^2) t e^{-t/alpha}
//     - e^{-t/alpha} ] h(x)  dP0(x).
double shift_c(double t, double alpha, const std::function<double(double)>& h,
               const QuadratureRule& rule, const SeriesControl& ctl = {});

// Closed form of shift_c for the contamination family:
//   1F1(2 alpha; alpha; -t/alpha) - e^{-t/alpha} + t e^{-t/alpha} / alpha.
// Identically zero at alpha = 1.
double shift_c_contamination(double t, double alpha,
                             const SeriesControl& ctl = {});

// Finite-sample rejection rate of the test with the given critical value.
// Total reps = proto.batches * proto.reps_per_batch, each keyed by
// (proto.seed, batch, rep) exactly as in simulate_null; deterministic.
struct PowerResult {
    double rejection_rate = 0.0;
    int rejections = 0;
    int reps = 0;
    std::uint64_t seed = 0;
};
PowerResult power_simulation(const std::function<double(SplitRng&)>& sample1,
                             int n, double alpha, double critical_value,
                             const McProtocol& proto,
                             const SeriesControl& ctl = {});
PowerResult power_simulation(const AltModel& model, int n,
                             double critical_value, const McProtocol& proto,
                             const SeriesControl& ctl = {});

// Approximate Bahadur slope of the test along the family theta * h:
//   b2    = theta^2 * integral over t of c_raw(t)^2 dP0(t), where
//   c_raw(t) = integral over x of kernel_j(alpha-1, t x / alpha) h(x) dP0(x),
//   slope = b2 / delta_1.
// The theory behind this formula assumes both integral h dP0 = 0 and
// integral x h dP0 = 0 (they reduce the full shift function to c_raw). The
// routine evaluates the second integral and reports it so callers can judge
// applicability; none of the built-in families satisfy it exactly.
struct BahadurResult {
    double b2 = 0.0;
    double slope = 0.0;
    double assumption_gap = 0.0;  // integral of x h(x) dP0(x)
    bool assumption_ok = false;   // |assumption_gap| <= 1e-8
};
BahadurResult bahadur_slope(double theta,
                            const std::function<double(double)>& h,
                            double alpha, const EigenSolution& e,
                            const QuadratureRule& rule,
                            const SeriesControl& ctl = {});

// Limit fourth-moment diagnostics of the shape-shift direction: the first
// four coefficients a_1..a_4 of the expansion of the log density-ratio in
// powers of 1/sqrt n, composed into lim E |h_n(X)|^4, plus the exact
// E |h_n(X)|^4 at a finite n for comparison.
struct ShapeShiftMoments {
    double a1 = 0.0, a2 = 0.0, a3 = 0.0, a4 = 0.0;
    double limit_fourth_moment = 0.0;
};
ShapeShiftMoments shape_shift_moments(double alpha);
double shape_shift_fourth_moment_at(double alpha, double n,
                                    const QuadratureRule& rule);

} // namespace gofgamma

#endif
