#pragma once

#include <cstdint>
#include <vector>

#include "rotrng/noise.hpp"
#include "rotrng/params.hpp"

namespace rotrng {

// All times in this module are nanoseconds.

/// Physical knobs of the oscillator simulation. The defaults are the
/// calibrated model used by the experiments.
struct JitterModel {
    double element_delay_ns = 1.0;
    /// Standard deviation of the Gaussian noise added to every half-period.
    double jitter_sigma_ns = 0.15;
    /// Half-width of the metastability window around each transition. A
    /// sample that lands inside it resolves to a fair coin.
    double aperture_ns = 0.1;
    /// Relative spread of each oscillator's fixed half-period multiplier.
    double freq_mismatch_sigma = 0.05;
    /// Bias of the sampler flip-flop's metastable resolution. When its input
    /// switches inside the aperture (a timing violation) the flip-flop
    /// resolves to 0 with probability (1 + sampler_bias) / 2.
    double sampler_bias = 0.01;
    std::uint64_t seed = 1;

    /// Calibrated model with the default element delay.
    static JitterModel calibrated(std::uint64_t seed);
    /// No noise of any kind: zero jitter, zero aperture, no mismatch and an
    /// ideal sampler.
    static JitterModel noiseless(std::uint64_t seed = 1);

    void validate() const;

    /// Lower clamp for a drawn half-period.
    double half_period_floor_ns() const { return element_delay_ns / 100.0; }
};

struct RoState {
    bool level = false;
    double next_transition = 0.0;
    double half_period_base = 0.0;
    std::uint64_t transitions_seen = 0;
    /// Time of the most recent completed transition; negative before the first.
    double last_transition = -1.0;
    /// Latest query time, used to enforce time-monotone queries.
    double last_query = 0.0;
};

struct RoBank {
    std::vector<RoState> ros;

    std::size_t size() const noexcept { return ros.size(); }
};

/// Builds n oscillators with per-instance mismatch and a jittered first
/// transition. Throws std::invalid_argument for n == 0 or l == 0.
RoBank init_bank(const TrngParams& params, const JitterModel& model, NoiseSource& noise);

/// Draws one half-period for `ro`, clamped to the positivity floor.
double draw_half_period(const RoState& ro, const JitterModel& model, NoiseSource& noise);

/// Advances `ro` so that every transition at or before `t` has completed.
/// Throws std::logic_error if `t` precedes an earlier query.
void advance_to(RoState& ro, double t, const JitterModel& model, NoiseSource& noise);

/// True when `t` is within the metastability aperture of a transition of an
/// already advanced oscillator.
bool within_aperture(const RoState& ro, double t, const JitterModel& model) noexcept;

/// Level of one oscillator at time `t`; a sample inside the aperture is a
/// fair coin.
bool ro_level_at(RoState& ro, double t, const JitterModel& model, NoiseSource& noise);

/// XOR of every member level at time `t`.
bool combined_level_at(RoBank& bank, double t, const JitterModel& model, NoiseSource& noise);

struct BankSample {
    bool level = false;
    /// Some member transition lies inside the aperture around the instant.
    bool in_window = false;
};

/// Same as combined_level_at, additionally reporting whether the XOR-ed
/// signal was switching at the sample instant.
BankSample probe_bank(RoBank& bank, double t, const JitterModel& model, NoiseSource& noise);

}  // namespace rotrng
