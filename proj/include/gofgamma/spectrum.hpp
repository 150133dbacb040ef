// Spectral analysis of the limit covariance operators: the explicit geometric
// eigenvalues of the raw-process operator, the secular-function eigenvalue
// solve for the rate-estimated operator, closed-form traces, the scree cutoff
// for how many eigenvalues matter, and the ordering gap behind the conjecture
// that the largest eigenvalue of the estimated-process operator is delta_1.
#ifndef GOFGAMMA_SPECTRUM_HPP
#define GOFGAMMA_SPECTRUM_HPP

#include <string>
#include <utility>
#include <vector>

#include "gofgamma/specfun.hpp"

namespace gofgamma {

// Derived constants shared by the whole spectral theory:
//   beta    = sqrt((alpha + 4) / alpha)
//   b_alpha = squared from  b^2 = 1 + alpha (1 - beta) / 2   (b > 0)
//   r       = b^4, the geometric ratio of the raw-operator eigenvalues.
struct SpectralParams {
    double alpha = 0.0;
    double beta = 0.0;
    double b_alpha = 0.0;
    double r = 0.0;

    double b2() const { return b_alpha * b_alpha; }

    // Requires alpha >= 1/2; checks beta > 1, 0 < b^2 < 1.
    static SpectralParams make(double alpha);
};

// Raw-operator eigenvalue rho_k = alpha^alpha * b^(4k + 2 alpha), k >= 0,
// in the log domain (alpha = 100 underflows plain doubles past small k).
LogValue rho_log(int k, const SpectralParams& p);
double rho(int k, const SpectralParams& p);

// Orthonormal eigenfunctions of the raw operator under the Gamma(alpha, 1)
// probability weight:
//   L_k(s) = beta^{alpha/2} e^{(1 - beta) s / 2} laguerre_norm(k, alpha, beta s).
double eigenfunction_s0(int k, const SpectralParams& p, double s);

// Components of the secular function whose zeros are the estimated-operator
// eigenvalues. With c_k = (alpha)_k / k! and g_k = b^2 - k beta:
//   A(d) = 1 -       beta^alpha sum_k c_k rho_k^2 / (rho_k - d)
//   B(d) = 1 - alpha beta^alpha sum_k c_k rho_k^2 g_k^2 / (rho_k - d)
//   D(d) = alpha^2 beta^alpha sum_k c_k rho_k^2 g_k / (rho_k - d)
//   G(d) = alpha^3 A B - D^2.
// The three sums satisfy exact d = 0 identities (binomial series in r):
//   beta^alpha sum c_k rho_k = 1,  alpha beta^alpha sum c_k rho_k g_k^2 = 1,
//   sum c_k rho_k g_k = 0.
// Splitting rho_k^2 / (rho_k - d) = rho_k + d rho_k / (rho_k - d) therefore
// collapses the constant parts, and with mu_k = beta^alpha c_k rho_k /
// (rho_k - d) the components reduce to
//   A = -d sum mu_k,  B = -alpha d sum mu_k g_k^2,  D = alpha^2 d sum mu_k g_k,
//   G = d^2 alpha^4 beta^2 sum_{j<k} mu_j mu_k (j - k)^2.
// Direct evaluation of alpha^3 A B - D^2 loses all accuracy both near the
// poles and for small d (the collapsed constants would have to cancel to
// working precision); the factored form has neither problem, so g is the
// pairwise sum above and g_scaled is g / d^2, the function actually used for
// root isolation (same positive zeros, well conditioned at every depth).
struct GComponents {
    double a = 0.0;
    double b = 0.0;
    double d = 0.0;
    double g = 0.0;
    double g_scaled = 0.0;
};
GComponents g_components(double delta, const SpectralParams& p,
                         const SeriesControl& ctl = {});

// Eigenvalues of the estimated-process operator: the m largest zeros of G,
// bracketed by scanning between consecutive rho_k and refined by bisection.
struct EigenSolution {
    std::vector<double> deltas;                      // descending
    std::vector<std::pair<double, double>> brackets; // initial sign brackets
    std::vector<double> residuals;                   // |G / delta^2| at root
    int m = 0;
    bool interlacing_ok = true;  // rho_{k-1} >= delta_k >= rho_{k+1}
    std::vector<std::string> warnings;
};
EigenSolution solve_eigenvalues(const SpectralParams& p, int m,
                                const SeriesControl& ctl = {});

// Expansion coefficients gamma_k, k < n_terms, of the unit-norm
// estimated-operator eigenfunction for eigenvalue delta in the basis of the
// raw-operator eigenfunctions. Works for simple roots of G.
std::vector<double> eigenfunction_s_coeffs(double delta,
                                           const SpectralParams& p,
                                           int n_terms,
                                           const SeriesControl& ctl = {});

// Closed-form traces of the two operators:
//   trace_s0 = alpha^alpha b^(2 alpha) / (1 - b^4)
//   trace_s  = trace_s0 - (alpha/(alpha+2))^alpha (1 + (alpha+1)/(alpha+2)^2).
double trace_s0(const SpectralParams& p);
double trace_s(const SpectralParams& p);

// Smallest m such that the eigenvalues ignored beyond it are below eps
// relative to the top one: m = max(1, ceil(ln(eps) / (4 ln b) - 2)).
int scree_m(double alpha, double eps);

// Signed gap, at row index l >= 0, of the ordering inequality supporting the
// conjecture that delta_1 exceeds all other estimated-operator eigenvalues:
//   gap(l) = alpha beta^(alpha+2)
//            sum_{k != l} c_k rho_k^2 (l - k)^2 / (rho_k - rho_l)
//          - (1 + alpha (b^2 - l beta)^2).
// Negative at l = 0, positive for l >= 1 in all cases examined.
double conjecture_gap(const SpectralParams& p, int l,
                      const SeriesControl& ctl = {});

} // namespace gofgamma

#endif
