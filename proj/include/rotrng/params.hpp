#pragma once

#include <cstdint>

namespace rotrng {

/// Generic parameters of the TRNG circuit.
struct TrngParams {
    std::uint32_t n = 20;   ///< ring oscillators
    std::uint32_t l = 3;    ///< delay elements per oscillator
    std::uint32_t d = 0;    ///< sampling clock divisor is 2^d
    std::uint32_t r = 2;    ///< resilience block width is 2^r
    double f_clk_hz = 50e6; ///< input clock of the TRNG

    /// Throws std::invalid_argument unless n, l >= 1, f_clk > 0 and
    /// d, r are small enough for 2^d and 2^r to be meaningful.
    void validate() const;

    /// Sampling period in nanoseconds: 2^d / f_clk.
    double sample_period_ns() const;
};

}  // namespace rotrng
