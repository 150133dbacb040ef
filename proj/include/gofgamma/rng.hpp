// Deterministic, stream-keyed random number generation for the Monte Carlo
// protocols. Every (seed, batch, rep) triple yields an independent generator,
// so simulated statistics are reproducible regardless of execution order or
// thread count.
#ifndef GOFGAMMA_RNG_HPP
#define GOFGAMMA_RNG_HPP

#include <cstdint>

namespace gofgamma {

// xoshiro256** seeded through splitmix64 from a (seed, stream_a, stream_b)
// key. Distinct keys give statistically independent streams.
class SplitRng {
public:
    explicit SplitRng(std::uint64_t seed, std::uint64_t stream_a = 0,
                      std::uint64_t stream_b = 0);

    std::uint64_t next_u64();

    // Uniform on [0, 1) with 53 random bits.
    double next_double();

    // Standard normal via the polar rejection method; pairs are cached.
    double next_normal();

    // Gamma(shape, 1) via the squeeze-and-reject method on a cubed normal,
    // with the power boost for shape < 1. Requires shape > 0.
    double next_gamma(double shape);

    // Weibull with the given shape and unit scale.
    double next_weibull(double shape);

private:
    std::uint64_t s_[4];
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

} // namespace gofgamma

#endif
