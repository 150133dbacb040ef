#include "gofgamma/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace gofgamma {

void SeriesControl::validate() const {
    if (!(rel_tol > 0.0) || !(rel_tol <= 1e-6)) {
        std::ostringstream os;
        os << "SeriesControl.rel_tol must lie in (0, 1e-6], got " << rel_tol;
        throw std::invalid_argument(os.str());
    }
    if (max_terms < 50) {
        std::ostringstream os;
        os << "SeriesControl.max_terms must be >= 50, got " << max_terms;
        throw std::invalid_argument(os.str());
    }
}

LogValue LogValue::from(double v) {
    LogValue out;
    if (v > 0.0) {
        out.sign = 1;
        out.log_abs = std::log(v);
    } else if (v < 0.0) {
        out.sign = -1;
        out.log_abs = std::log(-v);
    }
    return out;
}

double log_gamma(double x) {
    if (!(x > 0.0)) {
        std::ostringstream os;
        os << "log_gamma requires x > 0, got " << x;
        throw std::invalid_argument(os.str());
    }
    return std::lgamma(x);
}

double log_pochhammer(double a, int k) {
    if (!(a > 0.0)) {
        std::ostringstream os;
        os << "log_pochhammer requires a > 0, got " << a;
        throw std::invalid_argument(os.str());
    }
    if (k < 0) throw std::invalid_argument("log_pochhammer requires k >= 0");
    if (k == 0) return 0.0;
    return std::lgamma(a + k) - std::lgamma(a);
}

namespace {

// Stopping rule shared by every series here: terminate once the term's
// relative contribution stays below rel_tol for three consecutive terms.
struct SeriesStopper {
    explicit SeriesStopper(const SeriesControl& ctl) : ctl(ctl) { ctl.validate(); }

    // Returns true when the series may stop. |term| and |sum| are magnitudes.
    bool done(double abs_term, double abs_sum) {
        const double floor = std::max(abs_sum, 1e-300);
        if (abs_term <= ctl.rel_tol * floor) {
            if (++small_streak >= 3) return true;
        } else {
            small_streak = 0;
        }
        return false;
    }

    const SeriesControl& ctl;
    int small_streak = 0;
};

[[noreturn]] void throw_series(const char* name, double partial, int terms) {
    std::ostringstream os;
    os << name << " did not converge within " << terms << " terms";
    throw series_error(os.str(), partial, terms);
}

} // namespace

namespace {

// Minimal double-double arithmetic. The alternating series for J_nu loses
// about 2 sqrt(z) / ln 10 decimal digits to cancellation, which at the
// dispatch boundary 2 sqrt(z) = 30 wipes out most of a plain double. Carrying
// the term recurrence and the running sum in ~32-digit precision keeps the
// final value good to full double precision everywhere the series is used.
struct DD {
    double hi, lo;
};

inline DD two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline DD quick_two_sum(double a, double b) {
    const double s = a + b;
    return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline DD dd_add(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    return quick_two_sum(s.hi, s.lo + a.lo + b.lo);
}

inline DD dd_mul(DD a, DD b) {
    DD p = two_prod(a.hi, b.hi);
    return quick_two_sum(p.hi, p.lo + a.hi * b.lo + a.lo * b.hi);
}

inline DD dd_scale(DD a, double c) { return dd_mul(a, {c, 0.0}); }

inline DD dd_div(DD a, DD b) {
    const double q1 = a.hi / b.hi;
    DD r = dd_add(a, dd_scale(b, -q1));
    const double q2 = r.hi / b.hi;
    r = dd_add(r, dd_scale(b, -q2));
    const double q3 = r.hi / b.hi;
    DD q = quick_two_sum(q1, q2);
    return dd_add(q, {q3, 0.0});
}

} // namespace

namespace detail {

double kernel_j_series(double nu, double z, const SeriesControl& ctl) {
    SeriesStopper stop(ctl);
    const DD nu1 = two_sum(nu, 1.0);
    DD term = {1.0, 0.0};
    DD sum = {1.0, 0.0};
    for (int j = 0; j < ctl.max_terms; ++j) {
        const DD denom = dd_scale(dd_add(nu1, {double(j), 0.0}), j + 1.0);
        term = dd_div(dd_scale(term, -z), denom);
        sum = dd_add(sum, term);
        if (stop.done(std::fabs(term.hi), std::fabs(sum.hi))) {
            return sum.hi + sum.lo;
        }
    }
    throw_series("kernel_j series", sum.hi, ctl.max_terms);
}

double bessel_j_recurrence(double nu, double x) {
    // Backward (Miller) recurrence: recur J_{nu+k} downward from a start
    // order well past the turning point, then normalize with
    //   (x/2)^nu = sum_k c_k J_{nu+2k}(x),   c_0 = Gamma(nu+1),
    //   c_k = (nu+2k) Gamma(nu+k) / k!   for k >= 1.
    // All c_k are positive for nu >= -1/2, so the normalizing sum has no
    // cancellation, and for nu > 1 the largest weight sits at the start
    // order; referencing the weights to it keeps every addend representable.
    const double top = x + std::max(nu, 0.0) + 60.0 + 15.0 * std::cbrt(x);
    const int m = 2 * static_cast<int>(std::ceil(top / 2.0));

    auto log_coeff = [nu](int k) {
        const int half = k / 2;
        if (half == 0) return std::lgamma(nu + 1.0);
        return std::log(nu + k) + std::lgamma(nu + half) -
               std::lgamma(half + 1.0);
    };
    const double logc_ref = log_coeff(m);

    double fp = 0.0;       // J at order nu + k + 2, current scale
    double f = 1e-300;     // J at order nu + k + 1, current scale
    double sum = 0.0;      // normalizing sum, current scale, ref-offset weights
    for (int k = m; k >= 0; --k) {
        const double fm = 2.0 * (nu + k + 1.0) / x * f - fp;
        fp = f;
        f = fm;
        if (k % 2 == 0) sum += std::exp(log_coeff(k) - logc_ref) * f;
        if (std::fabs(f) > 1e250) {
            const double s = std::fabs(f);
            fp /= s;
            f /= s;
            sum /= s;
        }
    }
    // J_nu = (x/2)^nu * f / (e^{logc_ref} * sum), assembled in the log domain.
    const double sign = (f >= 0.0) == (sum >= 0.0) ? 1.0 : -1.0;
    return sign * std::exp(nu * std::log(x / 2.0) + std::log(std::fabs(f)) -
                           logc_ref - std::log(std::fabs(sum)));
}

} // namespace detail

double bessel_j(double nu, double x, const SeriesControl& ctl) {
    if (!(nu >= -0.5)) {
        std::ostringstream os;
        os << "bessel_j requires nu >= -1/2, got " << nu;
        throw std::invalid_argument(os.str());
    }
    if (!(x >= 0.0)) {
        std::ostringstream os;
        os << "bessel_j requires x >= 0, got " << x;
        throw std::invalid_argument(os.str());
    }
    if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    if (x <= 30.0) {
        const double series = detail::kernel_j_series(nu, x * x / 4.0, ctl);
        return series * std::exp(nu * std::log(x / 2.0) - std::lgamma(nu + 1.0));
    }
    return detail::bessel_j_recurrence(nu, x);
}

double kernel_j(double nu, double z, const SeriesControl& ctl) {
    if (!(nu >= -0.5)) {
        std::ostringstream os;
        os << "kernel_j requires nu >= -1/2, got " << nu;
        throw std::invalid_argument(os.str());
    }
    if (!(z >= 0.0)) {
        std::ostringstream os;
        os << "kernel_j requires z >= 0, got " << z;
        throw std::invalid_argument(os.str());
    }
    if (z == 0.0) return 1.0;
    // Series cancellation grows like exp(2 sqrt z); past 2 sqrt z = 30 the
    // evaluation routes through J_nu, whose backward recurrence is stable,
    // with the prefactor Gamma(nu+1) z^{-nu/2} assembled in the log domain.
    const double w = 2.0 * std::sqrt(z);
    if (w <= 30.0) {
        return detail::kernel_j_series(nu, z, ctl);
    }
    const double j = detail::bessel_j_recurrence(nu, w);
    if (j == 0.0) return 0.0;
    const double logpre = std::lgamma(nu + 1.0) - 0.5 * nu * std::log(z);
    return (j > 0.0 ? 1.0 : -1.0) * std::exp(logpre + std::log(std::fabs(j)));
}

LogValue kernel_m(double alpha, double z, const SeriesControl& ctl) {
    if (!(alpha >= 0.5)) {
        std::ostringstream os;
        os << "kernel_m requires alpha >= 1/2, got " << alpha;
        throw std::invalid_argument(os.str());
    }
    if (!(z >= 0.0)) {
        std::ostringstream os;
        os << "kernel_m requires z >= 0, got " << z;
        throw std::invalid_argument(os.str());
    }
    LogValue out;
    out.sign = 1;
    if (z == 0.0) {
        out.log_abs = 0.0;
        return out;
    }
    // All terms are positive. Rescale the running sum into the exponent
    // whenever it grows large so the result never overflows.
    SeriesStopper stop(ctl);
    double term = 1.0;
    double sum = 1.0;
    double log_offset = 0.0;
    for (int j = 0; j < ctl.max_terms; ++j) {
        term *= z / ((j + 1.0) * (alpha + j));
        sum += term;
        if (stop.done(term, sum)) {
            out.log_abs = log_offset + std::log(sum);
            return out;
        }
        if (sum > 1e250) {
            term /= sum;
            log_offset += std::log(sum);
            sum = 1.0;
        }
    }
    throw_series("kernel_m series", log_offset + std::log(sum), ctl.max_terms);
}

namespace {

// Direct series for 1F1(a; b; x); callers guarantee the terms do not suffer
// catastrophic cancellation (x >= 0, or a <= 0 producing a terminating or
// eventually fixed-sign series).
double kummer_series(double a, double b, double x, const SeriesControl& ctl) {
    SeriesStopper stop(ctl);
    double term = 1.0;
    double sum = 1.0;
    double comp = 0.0;
    for (int j = 0; j < ctl.max_terms; ++j) {
        term *= (a + j) * x / ((b + j) * (j + 1.0));
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (stop.done(std::fabs(term), std::fabs(sum))) return sum;
    }
    throw_series("kummer_1f1 series", sum, ctl.max_terms);
}

} // namespace

double kummer_1f1(double a, double b, double x, const SeriesControl& ctl) {
    if (!(b > 0.0)) {
        std::ostringstream os;
        os << "kummer_1f1 requires b > 0, got " << b;
        throw std::invalid_argument(os.str());
    }
    if (x == 0.0) {
        ctl.validate();
        return 1.0;
    }
    if (x > 0.0 && a >= 0.0) return kummer_series(a, b, x, ctl);
    if (x < 0.0) {
        // Reflection keeps the argument positive; for the parameter ranges in
        // this library (b - a <= 0 or of moderate size) the reflected series
        // has at most finitely many alternating terms before the signs fix.
        return std::exp(x) * kummer_series(b - a, b, -x, ctl);
    }
    // x > 0 with a < 0: terms alternate only until a + j crosses zero.
    return kummer_series(a, b, x, ctl);
}

double laguerre_norm(int n, double alpha, double x) {
    if (n < 0) throw std::invalid_argument("laguerre_norm requires n >= 0");
    if (!(alpha >= 0.5)) {
        std::ostringstream os;
        os << "laguerre_norm requires alpha >= 1/2, got " << alpha;
        throw std::invalid_argument(os.str());
    }
    // Three-term recurrence for L_k^{(alpha-1)}:
    // (k+1) L_{k+1} = (2k + alpha - x) L_k - (k + alpha - 1) L_{k-1}.
    double lm = 0.0;
    double l = 1.0;
    for (int k = 0; k < n; ++k) {
        const double lp =
            ((2.0 * k + alpha - x) * l - (k + alpha - 1.0) * lm) / (k + 1.0);
        lm = l;
        l = lp;
    }
    const double lognorm = 0.5 * (std::lgamma(n + 1.0) + std::lgamma(alpha) -
                                  std::lgamma(alpha + n));
    return l * std::exp(lognorm);
}

double laguerre_laplace(int n, double alpha, double v, LaguerrePower power) {
    if (n < 0) throw std::invalid_argument("laguerre_laplace requires n >= 0");
    if (!(alpha >= 0.5)) {
        std::ostringstream os;
        os << "laguerre_laplace requires alpha >= 1/2, got " << alpha;
        throw std::invalid_argument(os.str());
    }
    if (!(v > 0.0)) {
        std::ostringstream os;
        os << "laguerre_laplace requires v > 0, got " << v;
        throw std::invalid_argument(os.str());
    }
    const double logc = std::lgamma(alpha + n) - std::lgamma(n + 1.0);
    const double u = v - 1.0;

    // sign * exp(log_rest + p log|u|) with integer p >= 0, assembled in a
    // single exponential so mixed huge/tiny factors cannot overflow alone.
    auto assemble = [](double log_rest, double base, int p) {
        if (p == 0) return std::exp(log_rest);
        if (base == 0.0) return 0.0;
        const double sign = (base < 0.0 && p % 2 != 0) ? -1.0 : 1.0;
        return sign * std::exp(log_rest + p * std::log(std::fabs(base)));
    };

    if (power == LaguerrePower::shape_minus_one) {
        // integral = Gamma(alpha+n)/n! * (v-1)^n / v^{alpha+n}
        return assemble(logc - (alpha + n) * std::log(v), u, n);
    }
    // integral = Gamma(alpha+n)/n! * (v-1)^{n-1} v^{-(alpha+n+1)} (alpha(v-1) - n)
    // At n = 0 the (v-1)^{-1} cancels against the alpha(v-1) tail, leaving
    // Gamma(alpha+1) v^{-(alpha+1)}.
    if (n == 0)
        return std::exp(logc - (alpha + 1.0) * std::log(v)) * alpha;
    const double tail = alpha * u - n;
    return assemble(logc - (alpha + n + 1.0) * std::log(v), u, n - 1) * tail;
}

double digamma(double x) {
    if (!(x > 0.0)) {
        std::ostringstream os;
        os << "digamma requires x > 0, got " << x;
        throw std::invalid_argument(os.str());
    }
    // Shift x above 8, then the asymptotic expansion
    // psi(x) ~ ln x - 1/(2x) - sum B_{2n} / (2n x^{2n}).
    double shift = 0.0;
    while (x < 8.0) {
        shift -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    // Coefficients B_{2n}/(2n) for n = 1..7.
    static const double c[7] = {
        1.0 / 12.0,  -1.0 / 120.0,   1.0 / 252.0, -1.0 / 240.0,
        1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0,
    };
    double corr = 0.0;
    double p = inv2;
    for (int i = 0; i < 7; ++i) {
        corr += c[i] * p;
        p *= inv2;
    }
    return shift + std::log(x) - 0.5 * inv - corr;
}

double hurwitz_zeta(double s, double z) {
    if (!(s > 1.0)) {
        std::ostringstream os;
        os << "hurwitz_zeta requires s > 1, got " << s;
        throw std::invalid_argument(os.str());
    }
    if (!(z > 0.0)) {
        std::ostringstream os;
        os << "hurwitz_zeta requires z > 0, got " << z;
        throw std::invalid_argument(os.str());
    }
    // Euler-Maclaurin: sum the first N terms directly, then integral plus
    // one-half term plus eight Bernoulli corrections at the cutoff.
    int n = 0;
    while (z + n < 24.0) ++n;
    double sum = 0.0;
    for (int k = 0; k < n; ++k) sum += std::pow(z + k, -s);
    const double a = z + n;
    sum += std::pow(a, 1.0 - s) / (s - 1.0);
    sum += 0.5 * std::pow(a, -s);
    // Corrections B_{2j}/(2j)! * (s)_{2j-1} * a^{-s-2j+1}.
    static const double bern[8] = {
        1.0 / 6.0,   -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0,
        5.0 / 66.0,  -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0,
    };
    double rising = s;              // (s)_1
    double fact = 2.0;              // (2j)! at j = 1
    double apow = std::pow(a, -s - 1.0);
    for (int j = 1; j <= 8; ++j) {
        sum += bern[j - 1] / fact * rising * apow;
        // Advance (s)_{2j-1} -> (s)_{2j+1}, (2j)! -> (2j+2)!, a^{-s-2j+1} -> ...
        rising *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
        fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
        apow /= a * a;
    }
    return sum;
}

} // namespace gofgamma
