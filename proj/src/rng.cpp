#include "gofgamma/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace gofgamma {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

} // namespace

SplitRng::SplitRng(std::uint64_t seed, std::uint64_t stream_a,
                   std::uint64_t stream_b) {
    // Fold the stream key into the seeding chain one component at a time so
    // that distinct (seed, a, b) triples land in unrelated splitmix orbits.
    std::uint64_t state = seed;
    state = splitmix64(state) ^ (0xA0761D6478BD642FULL + stream_a);
    state = splitmix64(state) ^ (0xE7037ED1A0B428DBULL + stream_b);
    for (auto& word : s_) word = splitmix64(state);
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
}

std::uint64_t SplitRng::next_u64() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double SplitRng::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SplitRng::next_normal() {
    if (has_cached_normal_) {
        has_cached_normal_ = false;
        return cached_normal_;
    }
    double u, v, s;
    do {
        u = 2.0 * next_double() - 1.0;
        v = 2.0 * next_double() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    cached_normal_ = v * f;
    has_cached_normal_ = true;
    return u * f;
}

double SplitRng::next_gamma(double shape) {
    if (!(shape > 0.0))
        throw std::invalid_argument("next_gamma: shape must be > 0");
    if (shape < 1.0) {
        // Boost: draw at shape+1, multiply by U^{1/shape}. U is kept away
        // from 0 so the power never produces a spurious exact zero.
        const double u = 1.0 - next_double();
        return next_gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = next_normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = next_double();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
        if (u > 0.0 &&
            std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v)))
            return d * v;
    }
}

double SplitRng::next_weibull(double shape) {
    if (!(shape > 0.0))
        throw std::invalid_argument("next_weibull: shape must be > 0");
    const double u = 1.0 - next_double(); // in (0, 1]
    return std::pow(-std::log(u), 1.0 / shape);
}

} // namespace gofgamma
