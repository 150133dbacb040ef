#include "gofgamma/alternatives.hpp"

#include <cmath>
#include <stdexcept>

#include "gofgamma/errors.hpp"
#include "gofgamma/gof.hpp"

namespace gofgamma {

AltModel make_alt(AltKind kind, double alpha) {
    if (!(alpha >= 0.5))
        throw std::invalid_argument("make_alt: alpha must be >= 1/2");
    AltModel m;
    m.kind = kind;
    m.alpha = alpha;
    switch (kind) {
    case AltKind::rate_shift: {
        // Gamma(alpha, lambda_n) with lambda_n = 1 + 1/sqrt n.
        m.description = "rate shift: Gamma(alpha, 1 + n^{-1/2})";
        m.density_ratio_n = [alpha](double x, double n) {
            const double rn = 1.0 / std::sqrt(n);
            return std::exp(alpha * std::log1p(rn) - rn * x);
        };
        m.h_n = [ratio = m.density_ratio_n](double x, double n) {
            return std::sqrt(n) * (ratio(x, n) - 1.0);
        };
        m.h_limit = [alpha](double x) { return alpha - x; };
        m.sample1 = [alpha](SplitRng& rng, double n) {
            return rng.next_gamma(alpha) / (1.0 + 1.0 / std::sqrt(n));
        };
        break;
    }
    case AltKind::shape_shift: {
        // Gamma(alpha + 1/sqrt n, 1).
        m.description = "shape shift: Gamma(alpha + n^{-1/2}, 1)";
        m.density_ratio_n = [alpha](double x, double n) {
            if (x <= 0.0) return 0.0;
            const double rn = 1.0 / std::sqrt(n);
            return std::exp(std::lgamma(alpha) - std::lgamma(alpha + rn) +
                            rn * std::log(x));
        };
        m.h_n = [ratio = m.density_ratio_n](double x, double n) {
            return std::sqrt(n) * (ratio(x, n) - 1.0);
        };
        m.h_limit = [alpha](double x) {
            return std::log(x) - digamma(alpha);
        };
        m.sample1 = [alpha](SplitRng& rng, double n) {
            return rng.next_gamma(alpha + 1.0 / std::sqrt(n));
        };
        break;
    }
    case AltKind::contamination: {
        // Mixture (1 - eps_n) Gamma(alpha, 1) + eps_n Gamma(2 alpha, 1) with
        // eps_n = 1/sqrt n; the direction h is the same for every n.
        m.description =
            "contamination: (1 - n^{-1/2}) Gamma(alpha, 1) + n^{-1/2} "
            "Gamma(2 alpha, 1)";
        const double log_ratio_c = std::lgamma(alpha) - std::lgamma(2.0 * alpha);
        auto h = [alpha, log_ratio_c](double x) {
            if (x <= 0.0) return -1.0;
            return std::exp(log_ratio_c + alpha * std::log(x)) - 1.0;
        };
        m.density_ratio_n = [h](double x, double n) {
            return 1.0 + h(x) / std::sqrt(n);
        };
        m.h_n = [h](double x, double) { return h(x); };
        m.h_limit = h;
        m.sample1 = [alpha](SplitRng& rng, double n) {
            const double eps = 1.0 / std::sqrt(n);
            return rng.next_double() < eps ? rng.next_gamma(2.0 * alpha)
                                           : rng.next_gamma(alpha);
        };
        break;
    }
    case AltKind::custom:
        throw std::invalid_argument(
            "make_alt: custom models must be constructed by the caller");
    }
    return m;
}

double shift_c(double t, double alpha, const std::function<double(double)>& h,
               const QuadratureRule& rule, const SeriesControl& ctl) {
    if (t < 0.0) throw std::invalid_argument("shift_c: t must be >= 0");
    if (rule.alpha != alpha)
        throw std::invalid_argument(
            "shift_c: rule was built for a different alpha");
    const double et = std::exp(-t / alpha);
    double sum = 0.0, comp = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const double x = rule.nodes[i];
        const double hx = h(x);
        if (!std::isfinite(hx))
            throw error("shift_c: direction function returned a non-finite "
                        "value at a quadrature node");
        const double bracket = kernel_j(alpha - 1.0, t * x / alpha, ctl) +
                               (x - alpha) / (alpha * alpha) * t * et - et;
        const double term = rule.weights[i] * bracket * hx;
        const double y = term - comp;
        const double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    return sum;
}

double shift_c_contamination(double t, double alpha, const SeriesControl& ctl) {
    if (t < 0.0)
        throw std::invalid_argument("shift_c_contamination: t must be >= 0");
    if (!(alpha >= 0.5))
        throw std::invalid_argument(
            "shift_c_contamination: alpha must be >= 1/2");
    const double et = std::exp(-t / alpha);
    return kummer_1f1(2.0 * alpha, alpha, -t / alpha, ctl) - et +
           t * et / alpha;
}

PowerResult power_simulation(const std::function<double(SplitRng&)>& sample1,
                             int n, double alpha, double critical_value,
                             const McProtocol& proto,
                             const SeriesControl& ctl) {
    if (n < 1) throw std::invalid_argument("power_simulation: n must be >= 1");
    if (!(alpha >= 0.5))
        throw std::invalid_argument("power_simulation: alpha must be >= 1/2");
    if (!(critical_value >= 0.0))
        throw std::invalid_argument(
            "power_simulation: critical value must be >= 0");
    proto.validate();

    PowerResult out;
    out.seed = proto.seed;
    RescaledSample r;
    r.y.resize(n);
    for (int b = 0; b < proto.batches; ++b) {
        for (int rep = 0; rep < proto.reps_per_batch; ++rep) {
            SplitRng rng(proto.seed, static_cast<std::uint64_t>(b),
                         static_cast<std::uint64_t>(rep));
            double sum = 0.0;
            for (int i = 0; i < n; ++i) {
                const double x = sample1(rng);
                if (!(x >= 0.0) || !std::isfinite(x))
                    throw error("power_simulation: sampler returned an "
                                "invalid observation");
                r.y[i] = x;
                sum += x;
            }
            const double mean = sum / n;
            if (mean > 0.0)
                for (double& y : r.y) y /= mean;
            else
                for (double& y : r.y) y = 0.0;
            if (t_statistic(r, alpha, ctl) > critical_value) ++out.rejections;
            ++out.reps;
        }
    }
    out.rejection_rate =
        static_cast<double>(out.rejections) / static_cast<double>(out.reps);
    return out;
}

PowerResult power_simulation(const AltModel& model, int n,
                             double critical_value, const McProtocol& proto,
                             const SeriesControl& ctl) {
    if (!model.sample1)
        throw std::invalid_argument("power_simulation: model has no sampler");
    const double nn = static_cast<double>(n);
    return power_simulation(
        [&model, nn](SplitRng& rng) { return model.sample1(rng, nn); }, n,
        model.alpha, critical_value, proto, ctl);
}

BahadurResult bahadur_slope(double theta,
                            const std::function<double(double)>& h,
                            double alpha, const EigenSolution& e,
                            const QuadratureRule& rule,
                            const SeriesControl& ctl) {
    if (e.deltas.empty())
        throw std::invalid_argument("bahadur_slope: empty eigen solution");
    if (rule.alpha != alpha)
        throw std::invalid_argument(
            "bahadur_slope: rule was built for a different alpha");

    BahadurResult out;
    // b2 = theta^2 int c_raw(t)^2 dP0(t), c_raw(t) = int kernel_j h dP0.
    double sum = 0.0, comp = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const double c = density_hankel(h, alpha, rule.nodes[i], rule, ctl);
        const double term = rule.weights[i] * c * c;
        const double y = term - comp;
        const double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    out.b2 = theta * theta * sum;
    out.slope = out.b2 / e.deltas[0];
    out.assumption_gap =
        rule.integrate([&h](double x) { return x * h(x); });
    out.assumption_ok = std::fabs(out.assumption_gap) <= 1e-8;
    return out;
}

ShapeShiftMoments shape_shift_moments(double alpha) {
    if (!(alpha >= 0.5))
        throw std::invalid_argument(
            "shape_shift_moments: alpha must be >= 1/2");
    const double psi = digamma(alpha);
    const double z2 = hurwitz_zeta(2.0, alpha);
    const double z3 = hurwitz_zeta(3.0, alpha);
    const double z4 = hurwitz_zeta(4.0, alpha);
    ShapeShiftMoments m;
    // Coefficients of the expansion of Gamma(alpha)/Gamma(alpha + u) x^u in
    // powers of u: a_j = (d^j/du^j)|_0 / j! of exp(-u psi-like series).
    m.a1 = -psi;
    m.a2 = 0.5 * psi * psi - 0.5 * z2;
    m.a3 = -psi * psi * psi / 6.0 + z3 / 3.0 + 0.5 * psi * z2;
    m.a4 = -0.25 * z4 + 0.125 * z2 * z2 - psi * z3 / 3.0 -
           0.25 * psi * psi * z2 + psi * psi * psi * psi / 24.0;
    // lim E h_n^4 composed from the a_j and the central moments of log X.
    m.limit_fourth_moment = 9.0 * std::pow(m.a1, 4) + 24.0 * m.a2 * m.a2 +
                            24.0 * m.a1 * m.a3 - 36.0 * m.a1 * m.a1 * m.a2 -
                            24.0 * m.a4;
    return m;
}

double shape_shift_fourth_moment_at(double alpha, double n,
                                    const QuadratureRule& rule) {
    if (!(n >= 1.0))
        throw std::invalid_argument(
            "shape_shift_fourth_moment_at: n must be >= 1");
    const AltModel model = make_alt(AltKind::shape_shift, alpha);
    return rule.integrate([&model, n](double x) {
        const double h = model.h_n(x, n);
        return h * h * h * h;
    });
}

} // namespace gofgamma
