#include "rotrng/jitter.hpp"

#include <cmath>
#include <stdexcept>

namespace rotrng {

JitterModel JitterModel::calibrated(std::uint64_t seed) {
    JitterModel model;
    model.seed = seed;
    return model;
}

JitterModel JitterModel::noiseless(std::uint64_t seed) {
    JitterModel model;
    model.jitter_sigma_ns = 0.0;
    model.aperture_ns = 0.0;
    model.freq_mismatch_sigma = 0.0;
    model.sampler_bias = 0.0;
    model.seed = seed;
    return model;
}

void JitterModel::validate() const {
    if (!(element_delay_ns > 0.0) || !std::isfinite(element_delay_ns)) {
        throw std::invalid_argument("JitterModel: element_delay must be positive");
    }
    if (!(jitter_sigma_ns >= 0.0) || !(aperture_ns >= 0.0) || !(freq_mismatch_sigma >= 0.0)) {
        throw std::invalid_argument("JitterModel: noise magnitudes must be non-negative");
    }
    if (!(sampler_bias >= -1.0 && sampler_bias <= 1.0)) {
        throw std::invalid_argument("JitterModel: sampler_bias must lie in [-1, 1]");
    }
}

RoBank init_bank(const TrngParams& params, const JitterModel& model, NoiseSource& noise) {
    params.validate();
    model.validate();

    RoBank bank;
    bank.ros.reserve(params.n);
    const double nominal = params.l * model.element_delay_ns;
    for (std::uint32_t i = 0; i < params.n; ++i) {
        RoState ro;
        const double multiplier = 1.0 + model.freq_mismatch_sigma * noise.gaussian();
        ro.half_period_base = std::max(nominal * multiplier, model.half_period_floor_ns());
        ro.next_transition = draw_half_period(ro, model, noise);
        bank.ros.push_back(ro);
    }
    return bank;
}

double draw_half_period(const RoState& ro, const JitterModel& model, NoiseSource& noise) {
    if (model.jitter_sigma_ns == 0.0) {
        return ro.half_period_base;
    }
    const double h = ro.half_period_base + model.jitter_sigma_ns * noise.gaussian();
    return std::max(h, model.half_period_floor_ns());
}

namespace {

// Resolves a skip that overshot `t`. Transition times a = S_0 <= t < S_m = b
// are partial sums of Gaussian half-periods; conditioned on both ends, S_k
// is Gaussian with mean a + (b - a) k / m and variance sigma^2 k (m - k) / m.
// Bisection on that bridge finds the last transition at or before `t`.
void resolve_overshoot(RoState& ro, double t, double a, double b, std::uint64_t m, double sigma, NoiseSource& noise) {
    std::uint64_t lo = 0;
    std::uint64_t hi = m;
    double s_lo = a;
    double s_hi = b;
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        const double w = static_cast<double>(mid - lo) / static_cast<double>(hi - lo);
        const double var = sigma * sigma * static_cast<double>(mid - lo) * static_cast<double>(hi - mid) /
                           static_cast<double>(hi - lo);
        const double s_mid = s_lo + (s_hi - s_lo) * w + (var > 0.0 ? std::sqrt(var) * noise.gaussian() : 0.0);
        if (s_mid <= t) {
            lo = mid;
            s_lo = s_mid;
        } else {
            hi = mid;
            s_hi = s_mid;
        }
    }
    ro.transitions_seen += lo + 1;
    ro.level = ro.level != (((lo + 1) & 1U) != 0);
    ro.last_transition = s_lo;
    ro.next_transition = s_hi;
}

}  // namespace

void advance_to(RoState& ro, double t, const JitterModel& model, NoiseSource& noise) {
    if (t < ro.last_query) {
        throw std::logic_error("ro_level_at: query times must be non-decreasing");
    }
    ro.last_query = t;

    const double hp = ro.half_period_base;
    const double sigma = model.jitter_sigma_ns;
    const double floor_ns = model.half_period_floor_ns();
    // A sum of m Gaussian half-periods is Gaussian with mean m*hp and
    // variance m*sigma^2, so long stretches are skipped with one draw. This
    // matches single stepping as long as the clamp is out of reach (6 sigma).
    const bool skip_ok = hp - floor_ns >= 6.0 * sigma;
    while (ro.next_transition <= t) {
        const double gap = t - ro.next_transition;
        if (skip_ok && gap > 2.0 * hp) {
            const double margin = 3.0 * sigma * std::sqrt(gap / hp);
            const auto m = static_cast<std::uint64_t>((gap - margin) / hp);
            if (m >= 2) {
                const double md = static_cast<double>(m);
                const double a = ro.next_transition;
                const double b = a + md * hp + (sigma == 0.0 ? 0.0 : sigma * std::sqrt(md) * noise.gaussian());
                if (b > t) {
                    resolve_overshoot(ro, t, a, b, m, sigma, noise);
                    return;
                }
                ro.next_transition = b;
                ro.transitions_seen += m;
                ro.level = ro.level != ((m & 1U) != 0);
                continue;
            }
        }
        ro.last_transition = ro.next_transition;
        ro.next_transition += sigma == 0.0 ? hp : std::max(hp + sigma * noise.gaussian(), floor_ns);
        ++ro.transitions_seen;
        ro.level = !ro.level;
    }
}

bool within_aperture(const RoState& ro, double t, const JitterModel& model) noexcept {
    const double ap = model.aperture_ns;
    if (ap <= 0.0) {
        return false;
    }
    if (ro.transitions_seen > 0 && t - ro.last_transition < ap) {
        return true;
    }
    return ro.next_transition - t < ap;
}

bool ro_level_at(RoState& ro, double t, const JitterModel& model, NoiseSource& noise) {
    advance_to(ro, t, model, noise);
    if (within_aperture(ro, t, model)) {
        return noise.coin();
    }
    return ro.level;
}

bool combined_level_at(RoBank& bank, double t, const JitterModel& model, NoiseSource& noise) {
    return probe_bank(bank, t, model, noise).level;
}

BankSample probe_bank(RoBank& bank, double t, const JitterModel& model, NoiseSource& noise) {
    BankSample sample;
    for (auto& ro : bank.ros) {
        advance_to(ro, t, model, noise);
        if (within_aperture(ro, t, model)) {
            sample.in_window = true;
            sample.level = sample.level != noise.coin();
        } else {
            sample.level = sample.level != ro.level;
        }
    }
    return sample;
}

}  // namespace rotrng
