#include "gofgamma/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gofgamma/errors.hpp"

namespace gofgamma {

namespace {

// Relative exclusion zone around each pole rho_k of the secular function.
constexpr double kPoleGuard = 1e-8;

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

} // namespace

SpectralParams SpectralParams::make(double alpha) {
    if (!(alpha >= 0.5))
        throw std::invalid_argument("SpectralParams: alpha must be >= 1/2");
    SpectralParams p;
    p.alpha = alpha;
    p.beta = std::sqrt((alpha + 4.0) / alpha);
    // b^2 = 1 + alpha (1 - beta) / 2 rearranged to the product form
    // 4 / (alpha (beta + 1)^2), which avoids the near-total cancellation of
    // the defining expression at large alpha.
    const double bp1 = p.beta + 1.0;
    const double b2 = 4.0 / (alpha * bp1 * bp1);
    p.b_alpha = std::sqrt(b2);
    p.r = b2 * b2;
    if (!(p.beta > 1.0) || !(b2 > 0.0) || !(b2 < 1.0))
        throw std::invalid_argument("SpectralParams: derived constants out of range");
    return p;
}

LogValue rho_log(int k, const SpectralParams& p) {
    if (k < 0) throw std::invalid_argument("rho_log: k must be >= 0");
    const double log_b = std::log(p.b_alpha);
    LogValue v;
    v.sign = 1;
    v.log_abs = p.alpha * std::log(p.alpha) + (4.0 * k + 2.0 * p.alpha) * log_b;
    return v;
}

double rho(int k, const SpectralParams& p) {
    return std::exp(rho_log(k, p).log_abs);
}

double eigenfunction_s0(int k, const SpectralParams& p, double s) {
    if (k < 0) throw std::invalid_argument("eigenfunction_s0: k must be >= 0");
    if (s < 0.0) throw std::invalid_argument("eigenfunction_s0: s must be >= 0");
    const double pref =
        std::exp(0.5 * p.alpha * std::log(p.beta) + 0.5 * (1.0 - p.beta) * s);
    return pref * laguerre_norm(k, p.alpha, p.beta * s);
}

GComponents g_components(double delta, const SpectralParams& p,
                         const SeriesControl& ctl) {
    if (!(delta > 0.0))
        throw std::invalid_argument("g_components: delta must be > 0");
    ctl.validate();
    const double alpha = p.alpha;
    const double beta_alpha = std::exp(alpha * std::log(p.beta));
    const double b2 = p.b2();

    // mu_k = beta^alpha c_k rho_k / (rho_k - delta) with c_k = (alpha)_k / k!.
    // Past the poles the terms decay like r per step, so the retained list
    // stays short.
    std::vector<double> mu;
    std::vector<double> g; // g_k = b^2 - k beta
    double t1 = 0.0, t2 = 0.0, t3 = 0.0;
    double ck = 1.0;
    int small_run = 0;
    bool converged = false;
    for (int k = 0; k < ctl.max_terms; ++k) {
        const double rho_k = std::exp(rho_log(k, p).log_abs);
        const double den = rho_k - delta;
        if (rho_k > 0.0 && std::fabs(den) < kPoleGuard * rho_k)
            throw pole_error("g_components: delta " + fmt(delta) +
                             " lies within the guard zone of pole rho_" +
                             std::to_string(k) + " = " + fmt(rho_k));
        const double mk = beta_alpha * ck * rho_k / den;
        const double gk = b2 - k * p.beta;
        mu.push_back(mk);
        g.push_back(gk);
        t1 += mk;
        t2 += mk * gk * gk;
        t3 += mk * gk;
        ck *= (alpha + k) / (k + 1.0);
        // Smallness only counts once the poles at and above delta are past,
        // otherwise the pre-pole decay would truncate the series too early.
        if (rho_k < 0.5 * delta) {
            const double mag = std::fabs(mk) * std::max(1.0, gk * gk);
            const double scale =
                std::max({1.0, std::fabs(t1), std::fabs(t2), std::fabs(t3)});
            if (mag <= ctl.rel_tol * scale) {
                if (++small_run >= 3) {
                    converged = true;
                    break;
                }
            } else {
                small_run = 0;
            }
        }
    }
    if (!converged)
        throw series_error("g_components: secular series did not converge", t1,
                           ctl.max_terms);

    GComponents out;
    out.a = -delta * t1;
    out.b = -delta * alpha * t2;
    out.d = delta * alpha * alpha * t3;

    // G / delta^2 from the pairwise form; mu factors that underflowed to zero
    // contribute nothing and are skipped.
    double pair_sum = 0.0;
    for (std::size_t j = 0; j + 1 < mu.size(); ++j) {
        if (mu[j] == 0.0) continue;
        for (std::size_t k = j + 1; k < mu.size(); ++k) {
            const double dk = static_cast<double>(k) - static_cast<double>(j);
            pair_sum += mu[j] * mu[k] * dk * dk;
        }
    }
    out.g_scaled = std::pow(alpha, 4) * p.beta * p.beta * pair_sum;
    out.g = delta * delta * out.g_scaled;
    return out;
}

namespace {

struct RootRecord {
    double delta = 0.0;
    std::pair<double, double> bracket{0.0, 0.0};
    double residual = 0.0;
};

// Scans (lo, hi) on a log-spaced grid for sign changes of the scaled secular
// function, then refines each change by bisection in the log domain to 1e-12
// relative width. The d^2 prefactor of G never changes sign, so the scaled
// form isolates the same roots without its underflow range.
void scan_interval(double lo, double hi, const SpectralParams& p,
                   const SeriesControl& ctl, std::vector<RootRecord>& out) {
    if (!(lo > 0.0) || !(hi > lo)) return;
    constexpr int kGrid = 64;
    const double log_lo = std::log(lo);
    const double step = (std::log(hi) - log_lo) / (kGrid - 1);
    double prev_x = lo;
    double prev_g = g_components(lo, p, ctl).g_scaled;
    for (int i = 1; i < kGrid; ++i) {
        const double x = std::exp(log_lo + i * step);
        const double gx = g_components(x, p, ctl).g_scaled;
        if ((prev_g < 0.0 && gx > 0.0) || (prev_g > 0.0 && gx < 0.0) ||
            prev_g == 0.0) {
            double a = prev_x, b = x;
            double ga = prev_g;
            for (int it = 0; it < 80 && std::log(b / a) > 1e-12; ++it) {
                // sqrt(a) * sqrt(b), not sqrt(a * b): the product underflows
                // for the deep eigenvalues of large shapes.
                const double mid = std::sqrt(a) * std::sqrt(b);
                const double gm = g_components(mid, p, ctl).g_scaled;
                if (gm == 0.0) {
                    a = b = mid;
                    break;
                }
                if ((ga < 0.0) == (gm < 0.0)) {
                    a = mid;
                    ga = gm;
                } else {
                    b = mid;
                }
            }
            RootRecord rec;
            rec.delta = std::sqrt(a) * std::sqrt(b);
            rec.bracket = {lo, hi};
            rec.residual =
                std::fabs(g_components(rec.delta, p, ctl).g_scaled);
            out.push_back(rec);
        }
        prev_x = x;
        prev_g = gx;
    }
}

} // namespace

EigenSolution solve_eigenvalues(const SpectralParams& p, int m,
                                const SeriesControl& ctl) {
    if (m < 1)
        throw std::invalid_argument("solve_eigenvalues: m must be >= 1");
    const double margin = 10.0 * kPoleGuard; // keep clear of the guard zone

    std::vector<RootRecord> roots;
    // Above the top pole first: no root is expected there, but any found is
    // kept and sorted in with the rest.
    {
        const double rho0 = rho(0, p);
        scan_interval(rho0 * (1.0 + margin), rho0 / p.r, p, ctl, roots);
    }
    // Then the inter-pole gaps (rho_{k+1}, rho_k), extending a few intervals
    // past m in case some gap holds no root.
    const int max_extra = 4;
    int scanned = 0;
    std::vector<int> empty_gaps;
    for (int k = 0; k < m + max_extra + 1; ++k) {
        const double hi = rho(k, p) * (1.0 - margin);
        const double lo = rho(k + 1, p) * (1.0 + margin);
        if (!(lo > 0.0) || !std::isnormal(lo)) {
            // poles below the representable range; nothing more can be found
            break;
        }
        const std::size_t before = roots.size();
        scan_interval(lo, hi, p, ctl, roots);
        if (roots.size() == before && k >= 1) empty_gaps.push_back(k);
        ++scanned;
        if (static_cast<int>(roots.size()) >= m && k >= m) break;
    }

    std::sort(roots.begin(), roots.end(),
              [](const RootRecord& a, const RootRecord& b) {
                  return a.delta > b.delta;
              });
    // Coincident roots from adjacent grid cells collapse to one.
    std::vector<RootRecord> unique_roots;
    for (const auto& r : roots) {
        if (!unique_roots.empty() &&
            std::fabs(unique_roots.back().delta - r.delta) <=
                1e-12 * unique_roots.back().delta)
            continue;
        unique_roots.push_back(r);
    }

    if (static_cast<int>(unique_roots.size()) < m) {
        std::string where;
        if (!empty_gaps.empty()) {
            const int k = empty_gaps.front();
            where = " (no sign change in (" + fmt(rho(k + 1, p)) + ", " +
                    fmt(rho(k, p)) + "))";
        } else if (scanned < m + 1) {
            where = " (poles fell below the representable range)";
        }
        throw bracket_error("solve_eigenvalues: found " +
                            std::to_string(unique_roots.size()) +
                            " eigenvalues, needed " + std::to_string(m) +
                            where);
    }

    EigenSolution sol;
    sol.m = m;
    for (int i = 0; i < m; ++i) {
        sol.deltas.push_back(unique_roots[i].delta);
        sol.brackets.push_back(unique_roots[i].bracket);
        sol.residuals.push_back(unique_roots[i].residual);
    }
    // Interlacing rho_{k-1} >= delta_k >= rho_{k+1} (delta 1-based) is proven
    // only under the ordering conjecture, so violations warn rather than fail.
    for (int k = 1; k <= m; ++k) {
        const double d = sol.deltas[k - 1];
        const double upper = rho(k - 1, p);
        const double lower = rho(k + 1, p);
        if (d > upper * (1.0 + 1e-9) || d < lower * (1.0 - 1e-9)) {
            sol.interlacing_ok = false;
            sol.warnings.push_back("delta_" + std::to_string(k) + " = " +
                                   fmt(d) + " escapes [rho_" +
                                   std::to_string(k + 1) + ", rho_" +
                                   std::to_string(k - 1) + "] = [" +
                                   fmt(lower) + ", " + fmt(upper) + "]");
        }
    }
    return sol;
}

std::vector<double> eigenfunction_s_coeffs(double delta,
                                           const SpectralParams& p,
                                           int n_terms,
                                           const SeriesControl& ctl) {
    if (!(delta > 0.0))
        throw std::invalid_argument("eigenfunction_s_coeffs: delta must be > 0");
    if (n_terms < 1)
        throw std::invalid_argument("eigenfunction_s_coeffs: n_terms must be >= 1");
    ctl.validate();
    const double alpha = p.alpha;
    const double half_log_beta_alpha = 0.5 * alpha * std::log(p.beta);
    // Laplace-transform argument shared by both expansion coefficient
    // families: v = 1 + 1/alpha + (beta - 1)/2 before the beta rescaling.
    const double w = (1.0 + 1.0 / alpha + 0.5 * (p.beta - 1.0)) / p.beta;

    // e_k = <e^{-t/alpha}, L_k> and f_k = <t e^{-t/alpha}, L_k> under the
    // Gamma(alpha, 1) probability weight; closed forms via the Laguerre
    // Laplace transforms. Note 1/sqrt(c_k) equals the Laguerre normalizer.
    std::vector<double> e(n_terms), f(n_terms), rho_k(n_terms);
    double log_ck = 0.0; // log c_k = log (alpha)_k / k!
    for (int k = 0; k < n_terms; ++k) {
        rho_k[k] = rho(k, p);
        const double log_pref = half_log_beta_alpha -
                                alpha * std::log(p.beta) - 0.5 * log_ck -
                                std::lgamma(alpha);
        e[k] = std::exp(log_pref) *
               laguerre_laplace(k, alpha, w, LaguerrePower::shape_minus_one);
        f[k] = std::exp(log_pref - std::log(p.beta)) *
               laguerre_laplace(k, alpha, w, LaguerrePower::shape);
        log_ck += std::log((alpha + k) / (k + 1.0));
    }

    double see = 0.0, sef = 0.0, sff = 0.0;
    for (int k = 0; k < n_terms; ++k) {
        const double den = rho_k[k] - delta;
        if (rho_k[k] > 0.0 && std::fabs(den) < kPoleGuard * rho_k[k])
            throw pole_error(
                "eigenfunction_s_coeffs: delta within the guard zone of rho_" +
                std::to_string(k));
        see += e[k] * e[k] / den;
        sef += e[k] * f[k] / den;
        sff += f[k] * f[k] / den;
    }

    // Null vector (c1, c2) of the 2x2 self-consistency system; at a root of
    // the secular function the two rows are dependent, so take whichever row
    // gives the larger vector.
    const double a3 = std::pow(alpha, 3);
    double c1 = sef, c2 = 1.0 - see;
    const double alt1 = a3 - sff, alt2 = sef;
    if (alt1 * alt1 + alt2 * alt2 > c1 * c1 + c2 * c2) {
        c1 = alt1;
        c2 = alt2;
    }

    std::vector<double> gamma(n_terms);
    double norm_sq = 0.0;
    for (int k = 0; k < n_terms; ++k) {
        gamma[k] = (c1 * e[k] + c2 * f[k]) / (rho_k[k] - delta);
        norm_sq += gamma[k] * gamma[k];
    }
    if (!(norm_sq > 0.0))
        throw error("eigenfunction_s_coeffs: zero expansion vector");
    // Unit norm with a deterministic sign: largest coefficient positive.
    int imax = 0;
    for (int k = 1; k < n_terms; ++k)
        if (std::fabs(gamma[k]) > std::fabs(gamma[imax])) imax = k;
    const double scale =
        (gamma[imax] < 0.0 ? -1.0 : 1.0) / std::sqrt(norm_sq);
    for (double& gk : gamma) gk *= scale;
    return gamma;
}

double trace_s0(const SpectralParams& p) {
    const double log_top =
        p.alpha * std::log(p.alpha) + 2.0 * p.alpha * std::log(p.b_alpha);
    return std::exp(log_top) / (1.0 - p.r);
}

double trace_s(const SpectralParams& p) {
    const double alpha = p.alpha;
    const double correction =
        std::exp(-alpha * std::log1p(2.0 / alpha)) *
        (1.0 + (alpha + 1.0) / ((alpha + 2.0) * (alpha + 2.0)));
    return trace_s0(p) - correction;
}

int scree_m(double alpha, double eps) {
    if (!(eps > 0.0) || !(eps < 1.0))
        throw std::invalid_argument("scree_m: eps must lie in (0, 1)");
    const SpectralParams p = SpectralParams::make(alpha);
    const double bound = std::log(eps) / (4.0 * std::log(p.b_alpha)) - 2.0;
    const int m = static_cast<int>(std::ceil(bound));
    return std::max(1, m);
}

double conjecture_gap(const SpectralParams& p, int l,
                      const SeriesControl& ctl) {
    if (l < 0) throw std::invalid_argument("conjecture_gap: l must be >= 0");
    ctl.validate();
    const double alpha = p.alpha;
    const double pref = alpha * std::exp((alpha + 2.0) * std::log(p.beta));
    const double rho_l = rho(l, p);
    double sum = 0.0;
    double ck = 1.0;
    int small_run = 0;
    bool converged = false;
    for (int k = 0; k < ctl.max_terms; ++k) {
        if (k != l) {
            const double rk = rho(k, p);
            const double diff = static_cast<double>(l) - k;
            const double term = ck * std::exp(2.0 * rho_log(k, p).log_abs) *
                                diff * diff / (rk - rho_l);
            sum += term;
            if (k > l) {
                if (std::fabs(term) <=
                    ctl.rel_tol * std::max(1.0, std::fabs(sum))) {
                    if (++small_run >= 3) {
                        converged = true;
                        break;
                    }
                } else {
                    small_run = 0;
                }
            }
        }
        ck *= (alpha + k) / (k + 1.0);
    }
    if (!converged)
        throw series_error("conjecture_gap: series did not converge", sum,
                           ctl.max_terms);
    const double gl = p.b2() - l * p.beta;
    return pref * sum - (1.0 + alpha * gl * gl);
}

} // namespace gofgamma
