#include "rotrng/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rotrng {

void TrngParams::validate() const {
    if (n == 0) {
        throw std::invalid_argument("TrngParams: n must be >= 1");
    }
    if (l == 0) {
        throw std::invalid_argument("TrngParams: l must be >= 1");
    }
    if (d > 40 || r > 30) {
        throw std::invalid_argument("TrngParams: d or r out of range (d=" + std::to_string(d) +
                                    ", r=" + std::to_string(r) + ")");
    }
    if (!(f_clk_hz > 0.0) || !std::isfinite(f_clk_hz)) {
        throw std::invalid_argument("TrngParams: f_clk must be positive");
    }
}

double TrngParams::sample_period_ns() const {
    return std::ldexp(1e9, static_cast<int>(d)) / f_clk_hz;
}

}  // namespace rotrng
