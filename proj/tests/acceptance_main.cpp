// Acceptance gate: ten end-to-end criteria covering the two bundled data
// applications, the Monte Carlo protocol, the scree table, operator
// integrity, the raw eigen-equation, special-function bounds, consistency
// under a Weibull alternative, contiguous-alternative structure, and the
// Bahadur slope. Prints one PASS/FAIL line per criterion with the measured
// values and pinned tolerances indented beneath, and exits with the number
// of failed criteria.
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gofgamma/alternatives.hpp"
#include "gofgamma/fixtures.hpp"
#include "gofgamma/gof.hpp"
#include "gofgamma/hankel.hpp"
#include "gofgamma/nulldist.hpp"
#include "gofgamma/rng.hpp"
#include "gofgamma/specfun.hpp"
#include "gofgamma/spectrum.hpp"

using namespace gofgamma;

namespace {

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list args;
    va_start(args, f);
    std::vsnprintf(buf, sizeof buf, f, args);
    va_end(args);
    return buf;
}

// One acceptance criterion: accumulates sub-checks, then prints a PASS/FAIL
// header line followed by the indented evidence.
class Criterion {
  public:
    Criterion(int number, std::string title)
        : number_(number), title_(std::move(title)),
          start_(std::chrono::steady_clock::now()) {}

    void require(bool ok, const std::string& what) {
        lines_.push_back(std::string(ok ? "    ok  " : "    BAD ") + what);
        ok_ = ok_ && ok;
    }
    void require_rel(const std::string& name, double got, double want,
                     double tol) {
        const double err = std::fabs(got - want) / std::fabs(want);
        require(err <= tol, fmt("%s: got %.10g reference %.10g rel %.2e "
                                "(tol %.1e)",
                                name.c_str(), got, want, err, tol));
    }
    void require_abs(const std::string& name, double got, double want,
                     double tol) {
        const double err = std::fabs(got - want);
        require(err <= tol, fmt("%s: got %.10g reference %.10g abs %.2e "
                                "(tol %.1e)",
                                name.c_str(), got, want, err, tol));
    }
    void note(const std::string& what) {
        lines_.push_back("    note " + what);
    }
    void require_time(double limit_seconds) {
        const double s = seconds();
        require(s <= limit_seconds,
                fmt("runtime %.2f s (limit %.0f s)", s, limit_seconds));
    }
    double seconds() const {
        return std::chrono::duration<double>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

    bool report() const {
        std::printf("%s  %2d  %s\n", ok_ ? "PASS" : "FAIL", number_,
                    title_.c_str());
        for (const auto& l : lines_) std::printf("%s\n", l.c_str());
        std::fflush(stdout);
        return ok_;
    }

  private:
    int number_;
    std::string title_;
    bool ok_ = true;
    std::vector<std::string> lines_;
    std::chrono::steady_clock::time_point start_;
};

// Trace of a diagonal kernel under the quadrature rule. Nodes whose weight
// underflowed contribute nothing representable and are skipped; the deep
// nodes need a larger series budget than the default.
double diagonal_trace(const QuadratureRule& rule,
                      const std::function<double(double, const SeriesControl&)>&
                          diag) {
    SeriesControl deep;
    deep.max_terms = 20000;
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        if (rule.weights[i] < 1e-280) continue;
        sum += rule.weights[i] * diag(rule.nodes[i], deep);
    }
    return sum;
}

// Direct alternating-series confluent hypergeometric sum in extended
// precision, safe for moderate negative arguments; used to break the
// circularity of checking the reflection identity against a routine that
// itself reflects.
double onef1_direct(double a, double b, double x) {
    long double term = 1.0L, sum = 1.0L;
    for (int j = 0; j < 400; ++j) {
        term *= (a + j) * static_cast<long double>(x) / ((b + j) * (j + 1.0L));
        sum += term;
        if (std::fabs(static_cast<double>(term)) < 1e-25 && j > 8) break;
    }
    return static_cast<double>(sum);
}

// ---------------------------------------------------------------------------
// 1: counter data at shape 100
// ---------------------------------------------------------------------------
Criterion criterion1() {
    Criterion c(1, "counter data at shape 100: statistic, closed trace, "
                   "spectral critical value");
    const Sample s = Sample::from(fixtures::geiger_counter_times());
    const double t2 = t_statistic(s, 100.0);
    c.require_rel("statistic", t2, 6.301e-10, 5e-3);
    const SpectralParams p = SpectralParams::make(100.0);
    c.require_rel("closed-form operator trace", trace_s(p), 6.721718e-6, 1e-6);
    const EigenSolution sol = solve_eigenvalues(p, 1);
    const double cv = critical_value_spectral(sol, 1, 0.05);
    c.require_rel("spectral critical value", cv, 2.582e-5, 1e-3);
    c.require(t2 < cv, fmt("statistic below critical value (%.4g < %.4g)",
                           t2, cv));
    c.require_time(1.0);
    return c;
}

// ---------------------------------------------------------------------------
// 2: brake data across shapes
// ---------------------------------------------------------------------------
Criterion criterion2() {
    Criterion c(2, "brake data row across shapes: statistic against "
                   "reference values");
    const Sample s = Sample::from(fixtures::tractor_brake_times());
    const double t23 = t_statistic(s, 2.3);
    c.require_abs("statistic at shape 2.3", t23, 0.0053, 1e-4);
    const double alphas[6] = {1.0, 1.8, 2.3, 3.0, 5.0, 8.0};
    const double reference[6] = {0.6965, 0.0162, 0.0053,
                                 0.0534, 0.1977, 0.3180};
    for (int i = 0; i < 6; ++i) {
        c.require_rel(fmt("row statistic at shape %.1f", alphas[i]),
                      t_statistic(s, alphas[i]), reference[i], 5e-3);
    }
    c.note(fmt("the shape-2.3 reference 0.0053 is reproduced at shape 2.315 "
               "(our statistic there: %.6g); every other row entry matches "
               "within 0.3%%, so the shape-2.3 reference value is "
               "inconsistent with its own row under this statistic",
               t_statistic(s, 2.315)));
    c.require_time(1.0);
    return c;
}

// ---------------------------------------------------------------------------
// 3: Monte Carlo protocol
// ---------------------------------------------------------------------------
Criterion criterion3() {
    Criterion c(3, "Monte Carlo protocol: reference critical values and "
                   "p-values");
    const McProtocol proto; // 10 batches x 10000 reps, trim 0.20, fixed seed
    const Sample geiger = Sample::from(fixtures::geiger_counter_times());
    const McResult g = simulate_null(100.0, 25, 0.05, proto);
    c.require_rel("critical value, counter data (shape 100, n 25)",
                  g.critical_value, 2.368e-5, 0.10);
    c.require_abs("p-value, counter data",
                  g.p_value(t_statistic(geiger, 100.0)), 0.99, 0.02);

    const Sample tractor = Sample::from(fixtures::tractor_brake_times());
    const McResult r = simulate_null(2.3, 107, 0.05, proto);
    c.require_rel("critical value, brake data (shape 2.3, n 107)",
                  r.critical_value, 0.0356, 0.10);
    const double t23 = t_statistic(tractor, 2.3);
    c.require_abs("p-value, brake data", r.p_value(t23), 0.47, 0.03);
    c.note(fmt("p-value evaluated at the reference statistic 0.0053 is "
               "%.4f, inside 0.47 +/- 0.03: the simulated null law matches; "
               "the miss above is the statistic discrepancy of criterion 2",
               r.p_value(0.0053)));
    c.require_time(300.0);
    return c;
}

// ---------------------------------------------------------------------------
// 4: scree table
// ---------------------------------------------------------------------------
Criterion criterion4() {
    Criterion c(4, "scree rule term counts for the standard shapes");
    const double alphas[8] = {0.5, 0.75, 1.0, 3.0, 5.0, 10.0, 20.0, 50.0};
    const int expected[8] = {15, 12, 10, 6, 4, 3, 2, 1};
    for (int i = 0; i < 8; ++i) {
        const int m = scree_m(alphas[i], 1e-10);
        c.require(m == expected[i], fmt("shape %.2f: m = %d (expected %d)",
                                        alphas[i], m, expected[i]));
    }
    return c;
}

// ---------------------------------------------------------------------------
// 5: spectral integrity
// ---------------------------------------------------------------------------
Criterion criterion5() {
    Criterion c(5, "spectral integrity: eigenvalue sums, diagonal-kernel "
                   "traces, interlacing");
    for (double alpha : {1.0, 2.3, 5.0}) {
        const SpectralParams p = SpectralParams::make(alpha);
        const double t0 = trace_s0(p);
        const double t1 = trace_s(p);

        double rho_sum = 0.0; // smallest terms first
        for (int k = 199; k >= 0; --k) rho_sum += rho(k, p);
        c.require_rel(fmt("shape %.1f: sum of raw eigenvalues vs trace",
                          alpha),
                      rho_sum, t0, 1e-12);

        const QuadratureRule rule = quadrature_for(alpha, 400);
        const double q0 = diagonal_trace(
            rule, [&](double s, const SeriesControl& ctl) {
                return cov_k0(s, s, alpha, ctl);
            });
        c.require_rel(fmt("shape %.1f: quadrature of raw diagonal kernel",
                          alpha),
                      q0, t0, 1e-8);
        const double q1 = diagonal_trace(
            rule, [&](double s, const SeriesControl& ctl) {
                return cov_k(s, s, alpha, ctl);
            });
        c.require_rel(fmt("shape %.1f: quadrature of estimated diagonal "
                          "kernel",
                          alpha),
                      q1, t1, 1e-8);

        const EigenSolution sol = solve_eigenvalues(p, 25);
        bool interlaced = true;
        for (int k = 1; k <= 12; ++k) {
            if (!(rho(k - 1, p) >= sol.deltas[k - 1] &&
                  sol.deltas[k - 1] >= rho(k + 1, p)))
                interlaced = false;
        }
        c.require(interlaced,
                  fmt("shape %.1f: interlacing for the first 12 eigenvalues",
                      alpha));

        double delta_sum = 0.0;
        for (int k = 24; k >= 0; --k) delta_sum += sol.deltas[k];
        c.require_rel(fmt("shape %.1f: sum of estimated eigenvalues vs trace",
                          alpha),
                      delta_sum, t1, 1e-6);
    }
    c.require_time(30.0);
    return c;
}

// ---------------------------------------------------------------------------
// 6: raw-operator eigen-equation
// ---------------------------------------------------------------------------
Criterion criterion6() {
    Criterion c(6, "raw-operator eigen-equation under quadrature");
    for (double alpha : {1.0, 2.3}) {
        const SpectralParams p = SpectralParams::make(alpha);
        const QuadratureRule rule = quadrature_for(alpha, 400);
        for (int k = 0; k <= 4; ++k) {
            const double rk = rho(k, p);
            double worst = 0.0;
            for (double s : {0.4, 1.1, 2.8, 6.0, 11.0}) {
                const double lhs = rule.integrate([&](double t) {
                    return cov_k0(s, t, alpha) * eigenfunction_s0(k, p, t);
                });
                const double rhs = rk * eigenfunction_s0(k, p, s);
                worst = std::max(worst, std::fabs(lhs - rhs));
            }
            c.require(worst <= 1e-7,
                      fmt("shape %.1f, index %d: worst residual %.2e over "
                          "5 arguments (tol 1e-7)",
                          alpha, k, worst));
        }
    }
    return c;
}

// ---------------------------------------------------------------------------
// 7: special-function bounds and identities
// ---------------------------------------------------------------------------
Criterion criterion7() {
    Criterion c(7, "special-function bounds and identities on fixed grids");
    const double slack = 1.0 + 1e-12;
    const double nus[6] = {-0.5, 0.0, 0.5, 1.0, 2.3, 5.0};
    const double ts[9] = {0.3, 1.0, 2.7, 5.0, 9.0, 14.2, 22.0, 37.0, 60.0};

    // Uniform bound on t^{-nu} J_{nu+1}(t).
    {
        bool ok = true;
        double worst = 0.0;
        for (double nu : nus) {
            const double bound = std::exp(-nu * std::log(2.0) -
                                          0.5 * std::log(M_PI) -
                                          log_gamma(nu + 1.5));
            for (double t : ts) {
                const double v =
                    std::pow(t, -nu) * bessel_j(nu + 1.0, t);
                worst = std::max(worst, std::fabs(v) / bound);
                if (!(std::fabs(v) <= bound * slack)) ok = false;
            }
        }
        c.require(ok, fmt("derivative-kernel bound on 54 grid points, worst "
                          "ratio to the bound %.4f",
                          worst));
    }

    // Lipschitz bound on the same function.
    {
        bool ok = true;
        double worst = 0.0;
        const double us[7] = {0.2, 0.9, 1.7, 3.1, 6.0, 10.4, 22.0};
        for (double nu : nus) {
            const double lip =
                std::exp(-(nu + 1.0) * std::log(2.0) - log_gamma(nu + 2.0));
            for (double u : us)
                for (double v : us) {
                    if (u >= v) continue;
                    const double fu =
                        std::pow(u, -nu) * bessel_j(nu + 1.0, u);
                    const double fv =
                        std::pow(v, -nu) * bessel_j(nu + 1.0, v);
                    const double ratio =
                        std::fabs(fu - fv) / (lip * (v - u));
                    worst = std::max(worst, ratio);
                    if (!(ratio <= slack)) ok = false;
                }
        }
        c.require(ok, fmt("Lipschitz bound on 126 grid pairs, worst ratio "
                          "to the bound %.4f",
                          worst));
    }

    // The scaled transform kernel stays within [-1, 1].
    {
        bool ok = true;
        double worst = 0.0;
        const double zs[10] = {0.0, 0.1,  0.7,   2.0,   5.5,
                               13.0, 40.0, 120.0, 400.0, 1500.0};
        const double knus[7] = {-0.5, 0.0, 0.5, 1.0, 2.3, 5.0, 10.0};
        for (double nu : knus)
            for (double z : zs) {
                const double v = kernel_j(nu, z);
                worst = std::max(worst, std::fabs(v));
                if (!(std::fabs(v) <= slack)) ok = false;
            }
        c.require(ok, fmt("transform kernel bound |kernel| <= 1 on 70 grid "
                          "points, worst |kernel| %.6f",
                          worst));
    }

    // Confluent hypergeometric: reflection against a direct extended-
    // precision series, and two closed forms.
    {
        double worst = 0.0;
        for (double a : {0.3, 1.2, 2.5})
            for (double b : {0.8, 2.3, 4.1})
                for (double x : {-4.0, -2.0, -0.8}) {
                    const double lib = kummer_1f1(a, b, x);
                    const double direct = onef1_direct(a, b, x);
                    worst = std::max(worst,
                                     std::fabs(lib - direct) /
                                         std::fabs(direct));
                }
        c.require(worst <= 1e-11,
                  fmt("reflected series vs direct extended-precision series "
                      "at negative arguments, worst rel %.2e (tol 1e-11)",
                      worst));
        double worst2 = 0.0;
        for (double x : {-7.0, -2.0, 0.9, 3.0}) {
            worst2 = std::max(
                worst2, std::fabs(kummer_1f1(2.3, 2.3, x) - std::exp(x)) /
                            std::exp(x));
            const double closed = std::expm1(x) / x;
            worst2 = std::max(worst2,
                              std::fabs(kummer_1f1(1.0, 2.0, x) - closed) /
                                  std::fabs(closed));
        }
        c.require(worst2 <= 1e-12,
                  fmt("closed forms (equal parameters, and (e^x-1)/x), "
                      "worst rel %.2e (tol 1e-12)",
                      worst2));
    }

    // Exponential-Bessel integral: closed transform of a gamma law vs
    // direct quadrature.
    {
        const double alpha = 2.3;
        const QuadratureRule rule = quadrature_for(alpha, 400);
        double worst = 0.0;
        for (double nu : {alpha - 1.0, 0.5, 2.0})
            for (double lambda : {0.7, 1.0, 1.9})
                for (double t : {0.3, 1.7, 6.0}) {
                    const double closed = gamma_hankel(alpha, lambda, nu, t);
                    const double quad = rule.integrate([&](double y) {
                        return kernel_j(nu, t * y / lambda);
                    });
                    worst = std::max(worst, std::fabs(closed - quad));
                }
        c.require(worst <= 1e-10,
                  fmt("transform of the gamma law, closed vs quadrature on "
                      "27 grid points, worst abs %.2e (tol 1e-10)",
                      worst));
    }

    // Laguerre orthonormality under the probability weight.
    {
        double worst = 0.0;
        for (double alpha : {1.0, 2.3}) {
            const QuadratureRule rule = quadrature_for(alpha, 400);
            for (int i = 0; i <= 6; ++i)
                for (int j = i; j <= 6; ++j) {
                    const double inner = rule.integrate([&](double x) {
                        return laguerre_norm(i, alpha, x) *
                               laguerre_norm(j, alpha, x);
                    });
                    worst = std::max(worst,
                                     std::fabs(inner - (i == j ? 1.0 : 0.0)));
                }
        }
        c.require(worst <= 1e-9,
                  fmt("orthonormality through degree 6 at two shapes, worst "
                      "abs deviation %.2e (tol 1e-9)",
                      worst));
    }
    c.require_time(10.0);
    return c;
}

// ---------------------------------------------------------------------------
// 8: consistency substitute
// ---------------------------------------------------------------------------
Criterion criterion8() {
    Criterion c(8, "power rises to one under a Weibull alternative; size "
                   "near level");
    const double alpha = 1.0;
    McProtocol cv_proto;
    cv_proto.batches = 4;
    cv_proto.reps_per_batch = 1000;
    cv_proto.seed = 90801;
    McProtocol sim_proto;
    sim_proto.batches = 2;
    sim_proto.reps_per_batch = 1000; // 2000 total
    sim_proto.seed = 90802;

    const auto weibull2 = [](SplitRng& rng) { return rng.next_weibull(2.0); };
    const int ns[4] = {25, 50, 100, 200};
    double rate[4] = {0, 0, 0, 0};
    double cv200 = 0.0;
    for (int i = 0; i < 4; ++i) {
        const double cv =
            simulate_null(alpha, ns[i], 0.05, cv_proto).critical_value;
        if (ns[i] == 200) cv200 = cv;
        rate[i] =
            power_simulation(weibull2, ns[i], alpha, cv, sim_proto)
                .rejection_rate;
    }
    // The rate saturates at exactly 1.000 from n = 50 on (all 2000
    // replications reject), so the rise is checked as nondecreasing with a
    // strict overall increase.
    c.require(rate[0] <= rate[1] && rate[1] <= rate[2] &&
                  rate[2] <= rate[3] && rate[0] < rate[3],
              fmt("rejection rate rises with n: %.3f, %.3f, %.3f, %.3f at "
                  "n = 25, 50, 100, 200",
                  rate[0], rate[1], rate[2], rate[3]));
    c.require(rate[3] > 0.9,
              fmt("rejection rate at n = 200 is %.3f (> 0.9)", rate[3]));

    McProtocol size_proto = sim_proto;
    size_proto.seed = 90803;
    const auto null_sampler = [](SplitRng& rng) {
        return rng.next_gamma(1.0);
    };
    const double size =
        power_simulation(null_sampler, 200, alpha, cv200, size_proto)
            .rejection_rate;
    const double three_se = 3.0 * std::sqrt(0.05 * 0.95 / 2000.0);
    c.require_abs("size under the null at n = 200", size, 0.05, three_se);
    return c;
}

// ---------------------------------------------------------------------------
// 9: contiguous alternatives
// ---------------------------------------------------------------------------
Criterion criterion9() {
    Criterion c(9, "contiguous alternatives: shift function and zero-mean "
                   "directions");
    const double alpha = 2.3;
    const AltModel contam = make_alt(AltKind::contamination, alpha);
    const QuadratureRule rule = quadrature_for(alpha, 400);
    double worst = 0.0;
    for (int j = 1; j <= 20; ++j) {
        const double t = 0.3 * j;
        const double closed = shift_c_contamination(t, alpha);
        const double quad = shift_c(t, alpha, contam.h_limit, rule);
        worst = std::max(worst, std::fabs(closed - quad));
    }
    c.require(worst <= 1e-8,
              fmt("contamination shift function, closed vs quadrature on a "
                  "20-point grid, worst abs %.2e (tol 1e-8)",
                  worst));

    // The perturbation directions integrate to zero. The shape-shift
    // direction carries a logarithmic-type factor that converges only
    // algebraically under the gamma rule, hence the large node count.
    const QuadratureRule deep_rule = quadrature_for(alpha, 3200);
    for (auto kind :
         {AltKind::rate_shift, AltKind::shape_shift, AltKind::contamination}) {
        const AltModel m = make_alt(kind, alpha);
        for (double n : {25.0, 1e4}) {
            const double integral = deep_rule.integrate(
                [&](double x) { return m.h_n(x, n); });
            c.require(std::fabs(integral) <= 1e-8,
                      fmt("%s direction, n = %.0f: |mean under the null| = "
                          "%.2e (tol 1e-8)",
                          m.description.c_str(), n, std::fabs(integral)));
        }
    }
    return c;
}

// ---------------------------------------------------------------------------
// 10: Bahadur slope
// ---------------------------------------------------------------------------
Criterion criterion10() {
    Criterion c(10, "Bahadur slope: quadratic scaling and dual-path "
                    "agreement");
    const double alpha = 2.3;
    const AltModel contam = make_alt(AltKind::contamination, alpha);
    const SpectralParams p = SpectralParams::make(alpha);
    const EigenSolution sol = solve_eigenvalues(p, 1);
    const QuadratureRule rule = quadrature_for(alpha, 400);

    const double thetas[3] = {0.01, 0.1, 0.2};
    double scaled[3];
    for (int i = 0; i < 3; ++i) {
        const BahadurResult r =
            bahadur_slope(thetas[i], contam.h_limit, alpha, sol, rule);
        scaled[i] = r.slope / (thetas[i] * thetas[i]);
    }
    const double spread =
        std::max({scaled[0], scaled[1], scaled[2]}) -
        std::min({scaled[0], scaled[1], scaled[2]});
    c.require(spread / scaled[1] <= 1e-10,
              fmt("slope/theta^2 across theta in {0.01, 0.1, 0.2}: values "
                  "%.12g, %.12g, %.12g, rel spread %.2e (tol 1e-10)",
                  scaled[0], scaled[1], scaled[2],
                  spread / scaled[1]));

    // Dual path for b^2: the inner transform of the contamination direction
    // has the closed form 1F1(2 alpha; alpha; -t/alpha) - e^{-t/alpha}.
    const double theta = 0.1;
    const BahadurResult quad_route =
        bahadur_slope(theta, contam.h_limit, alpha, sol, rule);
    // Nodes with weight below 1e-100 contribute less than 1e-97 to the sum
    // (the squared inner transform is bounded there) and lie beyond the
    // argument range of the confluent series, so they are skipped.
    double b2_closed = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        if (rule.weights[i] < 1e-100) continue;
        const double t = rule.nodes[i];
        const double inner = kummer_1f1(2.0 * alpha, alpha, -t / alpha) -
                             std::exp(-t / alpha);
        b2_closed += rule.weights[i] * inner * inner;
    }
    b2_closed *= theta * theta;
    c.require_rel("b^2 with closed inner transform vs quadrature inner "
                  "transform",
                  quad_route.b2, b2_closed, 1e-8);
    c.require(quad_route.slope == quad_route.b2 / sol.deltas[0],
              "slope equals b^2 over the leading eigenvalue");
    return c;
}

} // namespace

int main() {
    std::printf("acceptance gate: 10 criteria\n");
    int failures = 0;
    if (!criterion1().report()) ++failures;
    if (!criterion2().report()) ++failures;
    if (!criterion3().report()) ++failures;
    if (!criterion4().report()) ++failures;
    if (!criterion5().report()) ++failures;
    if (!criterion6().report()) ++failures;
    if (!criterion7().report()) ++failures;
    if (!criterion8().report()) ++failures;
    if (!criterion9().report()) ++failures;
    if (!criterion10().report()) ++failures;
    std::printf("%d of 10 criteria passed\n", 10 - failures);
    return failures;
}
