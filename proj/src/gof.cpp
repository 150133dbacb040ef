#include "gofgamma/gof.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <thread>
#include <vector>

namespace gofgamma {

namespace {

// Compensated accumulator for long sums of same-sign terms.
struct Kahan {
    double sum = 0.0;
    double comp = 0.0;

    void add(double term) {
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

// M(z) = sum_j z^j / (j! (alpha)_j) evaluated in the linear domain. All terms
// are positive so plain recurrence summation is stable; callers must keep
// 2 sqrt(z) below ~600 so the sum stays inside the double range. Larger
// arguments go through the log-domain kernel_m instead.
double m_series_linear(double alpha, double z, const SeriesControl& ctl) {
    double term = 1.0, sum = 1.0;
    int small_run = 0;
    for (int j = 0; j < ctl.max_terms; ++j) {
        term *= z / ((j + 1.0) * (alpha + j));
        sum += term;
        if (term <= ctl.rel_tol * sum) {
            if (++small_run >= 3) return sum;
        } else {
            small_run = 0;
        }
    }
    throw series_error("kernel_m series did not converge", sum,
                       ctl.max_terms);
}

// e^{-x-y} M(x y), the pair-dependent part of the V-statistic kernel. The
// product is bounded by 1 because log M(z) <= 2 sqrt(z) <= x + y, but the
// intermediate M(x y) can overflow the linear range for extreme rescaled
// values, hence the log-domain branch.
double weighted_m(double x, double y, double ex, double ey, double alpha,
                  const SeriesControl& ctl) {
    const double z = x * y;
    if (z <= 9.0e4) return ex * ey * m_series_linear(alpha, z, ctl);
    const LogValue lm = kernel_m(alpha, z, ctl);
    return std::exp(lm.log_abs - x - y);
}

} // namespace

Sample Sample::from(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("Sample: empty data");
    Kahan acc;
    for (double v : values) {
        if (!std::isfinite(v) || v < 0.0)
            throw std::invalid_argument(
                "Sample: values must be finite and >= 0");
        acc.add(v);
    }
    Sample s;
    s.values = std::move(values);
    s.mean = acc.sum / static_cast<double>(s.values.size());
    return s;
}

RescaledSample rescale(const Sample& s) {
    RescaledSample r;
    r.y.resize(s.values.size());
    if (s.mean == 0.0) {
        // all observations are zero; the rescaled sample is defined as zero
        return r;
    }
    for (std::size_t i = 0; i < s.values.size(); ++i)
        r.y[i] = s.values[i] / s.mean;
    return r;
}

double vkernel_h(double x, double y, double alpha, const SeriesControl& ctl) {
    if (x < 0.0 || y < 0.0)
        throw std::invalid_argument("vkernel_h: arguments must be >= 0");
    const double c1 = std::exp(-alpha * std::log1p(1.0 / alpha));
    const double c3 = std::exp(-alpha * std::log1p(2.0 / alpha));
    const double c2 = alpha / (alpha + 1.0);
    return weighted_m(x, y, std::exp(-x), std::exp(-y), alpha, ctl) -
           c1 * (std::exp(-c2 * x) + std::exp(-c2 * y)) + c3;
}

double t_statistic(const RescaledSample& r, double alpha,
                   const SeriesControl& ctl) {
    if (!(alpha >= 0.5))
        throw std::invalid_argument("t_statistic: alpha must be >= 1/2");
    ctl.validate();
    const int n = r.n();
    if (n == 0) throw std::invalid_argument("t_statistic: empty sample");

    const double c1 = std::exp(-alpha * std::log1p(1.0 / alpha));
    const double c3 = std::exp(-alpha * std::log1p(2.0 / alpha));
    const double c2 = alpha / (alpha + 1.0);

    std::vector<double> ex(n), q(n);
    Kahan qsum;
    for (int i = 0; i < n; ++i) {
        ex[i] = std::exp(-r.y[i]);
        q[i] = std::exp(-c2 * r.y[i]);
        qsum.add(q[i]);
    }

    // Pair sum of e^{-y_i - y_j} M(y_i y_j) over i <= j, doubled off the
    // diagonal. Work is split into fixed row blocks; each block is summed
    // with compensated accumulation and the block totals are combined in
    // block order, so the result does not depend on how many threads ran.
    constexpr int kBlock = 64;
    const int blocks = (n + kBlock - 1) / kBlock;
    std::vector<double> partial(blocks, 0.0);

    auto run_block = [&](int b) {
        const int lo = b * kBlock;
        const int hi = std::min(n, lo + kBlock);
        Kahan acc;
        for (int i = lo; i < hi; ++i) {
            const double yi = r.y[i];
            const double exi = ex[i];
            acc.add(exi * exi * m_series_linear(alpha, yi * yi, ctl));
            for (int j = i + 1; j < n; ++j)
                acc.add(2.0 * weighted_m(yi, r.y[j], exi, ex[j], alpha, ctl));
        }
        partial[b] = acc.sum;
    };

    const unsigned hw = std::thread::hardware_concurrency();
    if (hw > 1 && blocks > 1) {
        const unsigned nthreads = std::min<unsigned>(hw, blocks);
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (unsigned t = 0; t < nthreads; ++t)
            pool.emplace_back([&, t] {
                for (int b = static_cast<int>(t); b < blocks;
                     b += static_cast<int>(nthreads))
                    run_block(b);
            });
        for (auto& th : pool) th.join();
    } else {
        for (int b = 0; b < blocks; ++b) run_block(b);
    }

    Kahan pair_sum;
    for (int b = 0; b < blocks; ++b) pair_sum.add(partial[b]);

    const double nn = static_cast<double>(n);
    const double total =
        pair_sum.sum - 2.0 * c1 * nn * qsum.sum + c3 * nn * nn;
    return total / nn;
}

double t_statistic(const Sample& s, double alpha, const SeriesControl& ctl) {
    return t_statistic(rescale(s), alpha, ctl);
}

double t_statistic_quadrature(const Sample& s, double alpha,
                              const QuadratureRule& rule,
                              const SeriesControl& ctl) {
    if (!(alpha >= 0.5))
        throw std::invalid_argument(
            "t_statistic_quadrature: alpha must be >= 1/2");
    if (rule.alpha != alpha)
        throw std::invalid_argument(
            "t_statistic_quadrature: rule was built for a different alpha");
    const RescaledSample r = rescale(s);
    const double nu = alpha - 1.0;
    Kahan acc;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const double t = rule.nodes[i];
        const double diff =
            empirical_hankel(r.y, nu, t, ctl) - std::exp(-t / alpha);
        acc.add(rule.weights[i] * diff * diff);
    }
    return static_cast<double>(r.n()) * acc.sum;
}

double cov_k0(double s, double t, double alpha, const SeriesControl& ctl) {
    if (s < 0.0 || t < 0.0)
        throw std::invalid_argument("cov_k0: arguments must be >= 0");
    if (!(alpha >= 0.5))
        throw std::invalid_argument("cov_k0: alpha must be >= 1/2");
    const LogValue lm = kernel_m(alpha, s * t / (alpha * alpha), ctl);
    return std::exp(lm.log_abs - (s + t) / alpha);
}

double cov_k(double s, double t, double alpha, const SeriesControl& ctl) {
    const double k0 = cov_k0(s, t, alpha, ctl);
    return k0 - std::exp(-(s + t) / alpha) *
                    (s * t / (alpha * alpha * alpha) + 1.0);
}

} // namespace gofgamma
