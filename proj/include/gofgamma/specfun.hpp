// Special functions used throughout the library: Bessel functions of the first
// kind with real order, the two hypergeometric-type power series that appear in
// the test statistic and its limit covariance, confluent hypergeometric
// functions, generalized Laguerre polynomials and their Laplace transforms,
// digamma, and the Hurwitz zeta function.
//
// All series evaluators share one stopping rule (SeriesControl): stop once the
// relative contribution of a term has stayed below rel_tol for three
// consecutive terms, and fail with series_error if max_terms is exhausted.
#ifndef GOFGAMMA_SPECFUN_HPP
#define GOFGAMMA_SPECFUN_HPP

#include <cmath>
#include <limits>

#include "gofgamma/errors.hpp"

namespace gofgamma {

// Tolerance and budget for series evaluation.
struct SeriesControl {
    double rel_tol = 1e-14;
    int max_terms = 600;

    // Throws std::invalid_argument unless rel_tol is in (0, 1e-6] and
    // max_terms >= 50.
    void validate() const;
};

// A signed magnitude kept in the log domain so that very large or very small
// quantities survive intermediate arithmetic.
struct LogValue {
    int sign = 0;          // -1, 0, or +1
    double log_abs = -std::numeric_limits<double>::infinity();

    // sign * exp(log_abs); may overflow to +/-inf or underflow to 0.
    double value() const {
        return sign == 0 ? 0.0 : sign * std::exp(log_abs);
    }
    static LogValue from(double v);
};

// log Gamma(x) for x > 0.
double log_gamma(double x);

// log of the rising factorial (a)_k = a (a+1) ... (a+k-1), a > 0, k >= 0.
// (a)_0 = 1.
double log_pochhammer(double a, int k);

// Bessel function of the first kind J_nu(x), nu >= -1/2, x >= 0.
// Ascending series for x <= 30, backward recurrence with a series
// normalization for larger x.
double bessel_j(double nu, double x, const SeriesControl& ctl = {});

// The normalized Bessel-type series
//   sum_{j>=0} (-z)^j / (j! (nu+1)_j)  =  Gamma(nu+1) z^{-nu/2} J_nu(2 sqrt z)
// for z >= 0. Equals 1 at z = 0 and lies in [-1, 1] for nu >= -1/2.
double kernel_j(double nu, double z, const SeriesControl& ctl = {});

// The companion series with all-positive terms,
//   M(z) = sum_{j>=0} z^j / (j! (alpha)_j),   alpha >= 1/2,
// returned in the log domain because it grows like exp(2 sqrt z).
LogValue kernel_m(double alpha, double z, const SeriesControl& ctl = {});

// Confluent hypergeometric function 1F1(a; b; x), b > 0. For x < 0 the
// defining series alternates with heavy cancellation, so the evaluation goes
// through the reflection
//   1F1(a; b; x) = e^x 1F1(b-a; b; -x),
// whose series has at most finitely many sign changes for b - a real.
double kummer_1f1(double a, double b, double x, const SeriesControl& ctl = {});

// Generalized Laguerre polynomial L_n^{(alpha-1)}(x), alpha >= 1/2, scaled to
// unit norm against the Gamma(alpha, 1) probability weight
// x^{alpha-1} e^{-x} / Gamma(alpha):
//   laguerre_norm = sqrt(n! Gamma(alpha) / Gamma(alpha+n)) * L_n^{(alpha-1)}(x).
double laguerre_norm(int n, double alpha, double x);

// Which power of x multiplies the Laguerre polynomial inside the transform.
enum class LaguerrePower {
    shape_minus_one,   // integrand  x^{alpha-1} e^{-v x} L_n^{(alpha-1)}(x)
    shape              // integrand  x^{alpha}   e^{-v x} L_n^{(alpha-1)}(x)
};

// Closed-form Laplace transforms over (0, inf), v > 0:
//   shape_minus_one:  Gamma(alpha+n)/n! (v-1)^n v^{-(alpha+n)}
//   shape:            Gamma(alpha+n)/n! (v-1)^{n-1} v^{-(alpha+n+1)} (alpha(v-1) - n)
double laguerre_laplace(int n, double alpha, double v, LaguerrePower power);

// Digamma function, x > 0. Asymptotic expansion after shifting x above 8.
double digamma(double x);

// Hurwitz zeta function zeta(s, z) = sum_{k>=0} (k+z)^{-s}, s > 1, z > 0.
// Euler-Maclaurin with eight Bernoulli correction terms.
double hurwitz_zeta(double s, double z);

namespace detail {
// Shared series core for kernel_j / bessel_j; exposed for tests.
double kernel_j_series(double nu, double z, const SeriesControl& ctl);
// Backward-recurrence Bessel evaluation; requires x > 0. Exposed for tests.
double bessel_j_recurrence(double nu, double x);
} // namespace detail

} // namespace gofgamma

#endif
