#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "rotrng/bitstream.hpp"
#include "rotrng/jitter.hpp"
#include "rotrng/noise.hpp"
#include "rotrng/params.hpp"
#include "rotrng/producer.hpp"

namespace rotrng {

/// Sampler flip-flop clocked by the divided clock and fed by the XOR of one
/// oscillator bank. Sample k (0-based) is taken at (k+1) * 2^d / f_clk.
///
/// When the XOR-ed input switches inside the aperture the flip-flop violates
/// its timing and resolves with the bias given by model.sampler_bias.
class Sampler {
public:
    Sampler(const TrngParams& params, const JitterModel& model, std::uint64_t noise_seed);

    bool sample();

    const RoBank& bank() const noexcept { return bank_; }
    std::uint64_t samples_taken() const noexcept { return taken_; }
    double period_ns() const noexcept { return period_; }

private:
    JitterModel model_;
    NoiseSource noise_;
    RoBank bank_;
    double period_;
    std::uint64_t taken_ = 0;
};

/// Takes `count` consecutive samples.
BitStream sample_raw(Sampler& sampler, std::size_t count);

/// Parity of consecutive 2^r-bit blocks; an incomplete tail is dropped.
BitStream resilience_xor(const BitStream& raw, unsigned r);

/// The complete TRNG: sampler followed by the 2^r XOR stage, exposed through
/// the BitReady / ReadAck handshake.
class Trng final : public BitProducer {
public:
    Trng(const TrngParams& params, const JitterModel& model);

    /// Runs the circuit until an output bit is available.
    bool bit_ready() override;
    bool random_bit() const override;
    void read_ack() override;

    /// Waits for BitReady, reads the bit and acknowledges it.
    bool next_bit();
    BitStream generate(std::size_t nbits);

    const TrngParams& params() const noexcept { return params_; }
    /// Simulated time consumed so far.
    double elapsed_ns() const noexcept;

private:
    TrngParams params_;
    Sampler sampler_;
    std::optional<bool> pending_;
};

BitStream trng_generate(const TrngParams& params, const JitterModel& model, std::size_t nbits);

/// `samplers` independent banks of `ros_per_sampler` oscillators, each sampled
/// every clock cycle; output bit k is the XOR of all sampler outputs at
/// cycle k. Sampler i draws its noise from derive_seed(model.seed, i).
BitStream multi_sampler_generate(std::uint32_t samplers, std::uint32_t ros_per_sampler, std::uint32_t l,
                                 const JitterModel& model, double f_clk_hz, std::size_t nbits);

}  // namespace rotrng
