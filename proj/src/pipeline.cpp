#include "rotrng/pipeline.hpp"

#include <stdexcept>
#include <vector>

namespace rotrng {

Sampler::Sampler(const TrngParams& params, const JitterModel& model, std::uint64_t noise_seed)
    : model_(model), noise_(noise_seed), bank_(init_bank(params, model, noise_)),
      period_(params.sample_period_ns()) {}

bool Sampler::sample() {
    ++taken_;
    const double t = static_cast<double>(taken_) * period_;
    const BankSample in = probe_bank(bank_, t, model_, noise_);
    if (in.in_window && model_.sampler_bias != 0.0) {
        return !noise_.bernoulli(0.5 * (1.0 + model_.sampler_bias));
    }
    return in.level;
}

BitStream sample_raw(Sampler& sampler, std::size_t count) {
    BitStream out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        out.push_back(sampler.sample());
    }
    return out;
}

BitStream resilience_xor(const BitStream& raw, unsigned r) {
    if (r >= 63) {
        throw std::invalid_argument("resilience_xor: r too large");
    }
    const std::size_t block = std::size_t{1} << r;
    const std::size_t out_len = raw.size() / block;
    BitStream out;
    out.reserve(out_len);
    std::size_t i = 0;
    for (std::size_t j = 0; j < out_len; ++j) {
        bool parity = false;
        for (std::size_t e = i + block; i < e; ++i) {
            parity = parity != raw[i];
        }
        out.push_back(parity);
    }
    return out;
}

Trng::Trng(const TrngParams& params, const JitterModel& model)
    : params_(params), sampler_(params, model, derive_seed(model.seed, 0)) {}

bool Trng::bit_ready() {
    if (!pending_) {
        bool parity = false;
        for (std::uint64_t i = 0, e = std::uint64_t{1} << params_.r; i < e; ++i) {
            parity = parity != sampler_.sample();
        }
        pending_ = parity;
    }
    return true;
}

bool Trng::random_bit() const {
    if (!pending_) {
        throw std::logic_error("Trng: RandomBit read while BitReady is low");
    }
    return *pending_;
}

void Trng::read_ack() { pending_.reset(); }

bool Trng::next_bit() {
    bit_ready();
    const bool bit = *pending_;
    read_ack();
    return bit;
}

BitStream Trng::generate(std::size_t nbits) {
    BitStream out;
    out.reserve(nbits);
    for (std::size_t i = 0; i < nbits; ++i) {
        out.push_back(next_bit());
    }
    return out;
}

double Trng::elapsed_ns() const noexcept {
    return static_cast<double>(sampler_.samples_taken()) * sampler_.period_ns();
}

BitStream trng_generate(const TrngParams& params, const JitterModel& model, std::size_t nbits) {
    Trng trng(params, model);
    return trng.generate(nbits);
}

BitStream multi_sampler_generate(std::uint32_t samplers, std::uint32_t ros_per_sampler, std::uint32_t l,
                                 const JitterModel& model, double f_clk_hz, std::size_t nbits) {
    if (samplers == 0) {
        throw std::invalid_argument("multi_sampler_generate: need at least one sampler");
    }
    const TrngParams params{ros_per_sampler, l, 0, 0, f_clk_hz};
    std::vector<Sampler> bank;
    bank.reserve(samplers);
    for (std::uint32_t i = 0; i < samplers; ++i) {
        bank.emplace_back(params, model, derive_seed(model.seed, i));
    }
    BitStream out;
    out.reserve(nbits);
    for (std::size_t k = 0; k < nbits; ++k) {
        bool bit = false;
        for (auto& s : bank) {
            bit = bit != s.sample();
        }
        out.push_back(bit);
    }
    return out;
}

}  // namespace rotrng
