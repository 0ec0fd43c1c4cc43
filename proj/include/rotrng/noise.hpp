#pragma once

#include <cstdint>

namespace rotrng {

/// xoshiro256++ engine seeded through SplitMix64. Satisfies
/// UniformRandomBitGenerator so it can drive standard and Boost
/// distributions.
class Xoshiro256pp {
public:
    using result_type = std::uint64_t;

    explicit Xoshiro256pp(std::uint64_t seed = 1) noexcept;

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~result_type{0}; }

    result_type operator()() noexcept {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t s_[4];
};

std::uint64_t splitmix64(std::uint64_t& state) noexcept;

/// Derives the seed of an independent sub-stream. Index 0 maps to the
/// parent seed itself.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

/// Deterministic noise source for the circuit simulation. This is a PRNG:
/// the simulator of a TRNG is pseudo-random so experiments can be replayed
/// from a seed.
namespace detail {
struct ZigguratTables {
    double x[129];
    double ratio[128];
};
extern const ZigguratTables kZiggurat;
}  // namespace detail

class NoiseSource {
public:
    explicit NoiseSource(std::uint64_t seed) : engine_(seed) {}

    /// Standard normal draw (128-layer ziggurat).
    double gaussian();

    bool coin() { return (engine_() >> 63) != 0; }

    /// Uniform in [0, 1) with 53 bits of resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    Xoshiro256pp& engine() noexcept { return engine_; }

private:
    double gaussian_slow(std::uint64_t bits);

    Xoshiro256pp engine_;
};

}  // namespace rotrng

namespace rotrng {

inline double NoiseSource::gaussian() {
    const std::uint64_t bits = engine_();
    const unsigned layer = bits & 127U;
    // Uniform in (-1, 1) from the top 53 bits; the low byte picks the layer.
    const double u = static_cast<double>(static_cast<std::int64_t>(bits) >> 11) * 0x1.0p-52;
    if (u < detail::kZiggurat.ratio[layer] && u > -detail::kZiggurat.ratio[layer]) {
        return u * detail::kZiggurat.x[layer];
    }
    return gaussian_slow(bits);
}

}  // namespace rotrng
