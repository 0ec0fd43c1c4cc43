#include "rotrng/noise.hpp"

#include <cmath>

namespace rotrng {
namespace detail {
namespace {

constexpr double kTailStart = 3.442619855899;
constexpr double kLayerArea = 9.91256303526217e-3;

double density(double x) { return std::exp(-0.5 * x * x); }

ZigguratTables build_tables() {
    ZigguratTables t{};
    t.x[0] = kLayerArea / density(kTailStart);
    t.x[1] = kTailStart;
    for (int i = 1; i < 127; ++i) {
        t.x[i + 1] = std::sqrt(-2.0 * std::log(kLayerArea / t.x[i] + density(t.x[i])));
    }
    t.x[127 + 1] = 0.0;
    for (int i = 0; i < 128; ++i) {
        t.ratio[i] = t.x[i + 1] / t.x[i];
    }
    return t;
}

}  // namespace

const ZigguratTables kZiggurat = build_tables();

}  // namespace detail

std::uint64_t splitmix64(std::uint64_t& state) noexcept {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Xoshiro256pp::Xoshiro256pp(std::uint64_t seed) noexcept {
    std::uint64_t x = seed;
    for (auto& word : s_) {
        word = splitmix64(x);
    }
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    if (index == 0) {
        return seed;
    }
    std::uint64_t x = seed ^ (0xD1B54A32D192ED03ULL * index);
    splitmix64(x);
    return splitmix64(x);
}

double NoiseSource::gaussian_slow(std::uint64_t bits) {
    const auto& z = detail::kZiggurat;
    for (;;) {
        const unsigned layer = bits & 127U;
        const double u = static_cast<double>(static_cast<std::int64_t>(bits) >> 11) * 0x1.0p-52;
        const double x = u * z.x[layer];
        if (std::fabs(u) < z.ratio[layer]) {
            return x;
        }
        if (layer == 0) {
            // Tail beyond kTailStart (Marsaglia's exponential rejection).
            double a = 0.0;
            double b = 0.0;
            do {
                a = -std::log(1.0 - uniform()) / detail::kTailStart;
                b = -std::log(1.0 - uniform());
            } while (2.0 * b < a * a);
            return u < 0.0 ? -(detail::kTailStart + a) : detail::kTailStart + a;
        }
        // Wedge between the layer's rectangle and the density curve.
        const double y_lo = std::exp(-0.5 * z.x[layer] * z.x[layer]);
        const double y_hi = std::exp(-0.5 * z.x[layer + 1] * z.x[layer + 1]);
        if (y_lo + uniform() * (y_hi - y_lo) < std::exp(-0.5 * x * x)) {
            return x;
        }
        bits = engine_();
    }
}

}  // namespace rotrng
