// Hankel transforms of rescaled samples, of gamma laws, and of weighted
// densities, plus the Gauss-Laguerre quadrature rule used for every integral
// against the Gamma(alpha, 1) probability weight.
#ifndef GOFGAMMA_HANKEL_HPP
#define GOFGAMMA_HANKEL_HPP

#include <functional>
#include <span>
#include <vector>

#include "gofgamma/specfun.hpp"

namespace gofgamma {

// Nodes and weights of a generalized Gauss-Laguerre rule for the probability
// weight x^{alpha-1} e^{-x} / Gamma(alpha) on (0, inf). Weights sum to 1.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    double alpha = 0.0;

    std::size_t size() const { return nodes.size(); }

    // Integral of f against the weight.
    double integrate(const std::function<double(double)>& f) const;

    // Throws std::invalid_argument if the invariants fail: matching lengths,
    // node count >= 64, weights summing to 1 within 1e-10.
    void validate() const;
};

// Builds the rule by solving the symmetric tridiagonal (Golub-Welsch)
// eigenproblem for the weight's recurrence coefficients, then polishing each
// node with Newton steps on the scaled polynomial recurrence.
// Requires alpha >= 1/2 and nodes >= 8.
QuadratureRule quadrature_for(double alpha, int nodes);

// Node count used by the higher-level routines when none is given.
int default_nodes(double alpha);

// Empirical Hankel transform of nonnegative data y at argument t >= 0:
// mean over j of kernel_j(nu, t * y_j). Lies in [-1, 1].
double empirical_hankel(std::span<const double> y, double nu, double t,
                        const SeriesControl& ctl = {});

// Hankel transform of the Gamma(alpha, lambda) law at t >= 0, order
// nu >= -1/2, via the confluent hypergeometric closed form
//   1F1(alpha; nu+1; -t/lambda) with nu = alpha - 1 reducing to e^{-t/lambda}.
double gamma_hankel(double alpha, double lambda, double nu, double t,
                    const SeriesControl& ctl = {});

// Hankel-type transform of a weighted density: quadrature of
// kernel_j(alpha - 1, t * x / alpha) * h_weight(x) against dP0(x) where P0 is
// Gamma(alpha, 1). The rule must have been built for the same alpha.
double density_hankel(const std::function<double(double)>& h_weight,
                      double alpha, double t, const QuadratureRule& rule,
                      const SeriesControl& ctl = {});

} // namespace gofgamma

#endif
