#include "gofgamma/hankel.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>

#include <Eigen/Dense>

#include "gofgamma/errors.hpp"

namespace gofgamma {

namespace {

// Orthonormal-polynomial recurrence data for the probability weight
// x^{alpha-1} e^{-x} / Gamma(alpha): diagonal a_k = 2k + alpha, off-diagonal
// b_k = sqrt(k (k + alpha - 1)). Both stay positive for alpha >= 1/2.
struct Recurrence {
    std::vector<double> diag; // a_k for k = 0..n-1
    std::vector<double> off;  // b_k for k = 0..n, coupling degrees k-1 and k

    Recurrence(double alpha, int n) : diag(n), off(n + 1) {
        for (int k = 0; k < n; ++k) diag[k] = 2.0 * k + alpha;
        for (int k = 0; k <= n; ++k)
            off[k] = k == 0 ? 0.0 : std::sqrt(k * (k + alpha - 1.0));
    }
};

// Evaluates the orthonormal polynomial of degree n and its derivative at x,
// rescaling all running values together whenever they grow large. The shared
// scale cancels in the Newton ratio p/p', and the sum of squares needed for
// the Christoffel weight is carried in the same scale (log-offset), so the
// routine never overflows even at the extreme tail nodes where the
// unnormalized values exceed the double range.
struct PolyEval {
    double newton_ratio;  // p_n / p_n'
    double log_sum_sq;    // log of sum_{k<n} p_k(x)^2
};

PolyEval eval_poly(const Recurrence& rec, int n, double x) {
    double pm = 0.0, p = 1.0; // degrees k-1, k
    double dm = 0.0, d = 0.0; // their derivatives
    double sum_sq = 1.0;      // sum_{j<=k, j<n} p_j^2, in the current scale
    double log_scale = 0.0;   // log of the factor divided out so far
    for (int k = 1; k <= n; ++k) {
        // b_k p_k = (x - a_{k-1}) p_{k-1} - b_{k-1} p_{k-2}
        const double t = x - rec.diag[k - 1];
        const double pn = (t * p - rec.off[k - 1] * pm) / rec.off[k];
        const double dn = (t * d + p - rec.off[k - 1] * dm) / rec.off[k];
        pm = p;
        p = pn;
        dm = d;
        d = dn;
        if (k < n) sum_sq += p * p;
        if (std::fabs(p) + std::fabs(pm) > 1e150) {
            pm *= 1e-150;
            p *= 1e-150;
            dm *= 1e-150;
            d *= 1e-150;
            sum_sq *= 1e-300;
            log_scale += 150.0 * std::log(10.0);
        }
    }
    PolyEval out;
    out.newton_ratio = p / d;
    out.log_sum_sq = std::log(sum_sq) + 2.0 * log_scale;
    return out;
}

} // namespace

double QuadratureRule::integrate(const std::function<double(double)>& f) const {
    double sum = 0.0, comp = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double term = weights[i] * f(nodes[i]);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

void QuadratureRule::validate() const {
    if (nodes.size() != weights.size())
        throw std::invalid_argument("quadrature rule: node/weight length mismatch");
    if (nodes.size() < 64)
        throw std::invalid_argument("quadrature rule: fewer than 64 nodes");
    double sum = 0.0, comp = 0.0;
    for (double w : weights) {
        const double y = w - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    if (std::fabs(sum - 1.0) > 1e-10)
        throw std::invalid_argument("quadrature rule: weights do not sum to 1");
}

QuadratureRule quadrature_for(double alpha, int nodes) {
    if (!(alpha >= 0.5))
        throw std::invalid_argument("quadrature_for: alpha must be >= 1/2");
    if (nodes < 8)
        throw std::invalid_argument("quadrature_for: need at least 8 nodes");

    const int n = nodes;
    Recurrence rec(alpha, n);

    Eigen::VectorXd diag(n), sub(n - 1);
    for (int k = 0; k < n; ++k) diag[k] = rec.diag[k];
    for (int k = 1; k < n; ++k) sub[k - 1] = rec.off[k];

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw error("quadrature_for: tridiagonal eigensolve failed");

    QuadratureRule rule;
    rule.alpha = alpha;
    rule.nodes.resize(n);
    rule.weights.resize(n);

    for (int i = 0; i < n; ++i) {
        double x = solver.eigenvalues()[i];
        // Newton polish; the eigen-solve already puts x within ~1e-12 of the
        // root, so two or three corrections reach full double precision.
        for (int it = 0; it < 4; ++it) {
            const PolyEval e = eval_poly(rec, n, x);
            const double step = e.newton_ratio;
            x -= step;
            if (std::fabs(step) <= 1e-15 * std::max(x, 1.0)) break;
        }
        const PolyEval e = eval_poly(rec, n, x);
        rule.nodes[i] = x;
        // Christoffel weight 1/sum p_k(x)^2; far-tail weights underflow to
        // zero, which only discards mass below ~1e-300.
        rule.weights[i] =
            e.log_sum_sq > 690.0 ? 0.0 : std::exp(-e.log_sum_sq);
    }
    rule.validate();
    return rule;
}

int default_nodes(double alpha) { return alpha <= 10.0 ? 200 : 400; }

double empirical_hankel(std::span<const double> y, double nu, double t,
                        const SeriesControl& ctl) {
    if (y.empty())
        throw std::invalid_argument("empirical_hankel: empty sample");
    if (t < 0.0) throw std::invalid_argument("empirical_hankel: t must be >= 0");
    double sum = 0.0, comp = 0.0;
    for (double yj : y) {
        const double term = kernel_j(nu, t * yj, ctl);
        const double a = term - comp;
        const double b = sum + a;
        comp = (b - sum) - a;
        sum = b;
    }
    return sum / static_cast<double>(y.size());
}

double gamma_hankel(double alpha, double lambda, double nu, double t,
                    const SeriesControl& ctl) {
    if (!(alpha > 0.0) || !(lambda > 0.0))
        throw std::invalid_argument("gamma_hankel: alpha and lambda must be > 0");
    if (!(nu >= -0.5))
        throw std::invalid_argument("gamma_hankel: order nu must be >= -1/2");
    if (t < 0.0) throw std::invalid_argument("gamma_hankel: t must be >= 0");
    return kummer_1f1(alpha, nu + 1.0, -t / lambda, ctl);
}

double density_hankel(const std::function<double(double)>& h_weight,
                      double alpha, double t, const QuadratureRule& rule,
                      const SeriesControl& ctl) {
    if (rule.alpha != alpha)
        throw std::invalid_argument(
            "density_hankel: rule was built for a different alpha");
    if (t < 0.0) throw std::invalid_argument("density_hankel: t must be >= 0");
    double sum = 0.0, comp = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const double x = rule.nodes[i];
        const double hx = h_weight(x);
        if (!std::isfinite(hx))
            throw error("density_hankel: weight function returned a non-finite "
                        "value at a quadrature node");
        const double term =
            rule.weights[i] * kernel_j(alpha - 1.0, t * x / alpha, ctl) * hx;
        const double a = term - comp;
        const double b = sum + a;
        comp = (b - sum) - a;
        sum = b;
    }
    return sum;
}

} // namespace gofgamma
