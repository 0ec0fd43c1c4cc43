#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "rotrng/bitstream.hpp"
#include "rotrng/producer.hpp"

namespace rotrng {

// Measurement circuit: a RAM is filled with TRNG output at full speed, then
// drained byte by byte through a serializer into a UART.

enum class FsmState : std::uint8_t {
    Idle,
    PrepareFillRAM,
    FillRAM,
    ReadRAM,
    ShiftIn,
    CheckSR,
    WaitUART,
    UARTSend,
};

inline constexpr std::array<FsmState, 8> kAllFsmStates = {
    FsmState::Idle,    FsmState::PrepareFillRAM, FsmState::FillRAM,  FsmState::ReadRAM,
    FsmState::ShiftIn, FsmState::CheckSR,        FsmState::WaitUART, FsmState::UARTSend,
};

std::string_view to_string(FsmState state);

struct FsmInputs {
    bool bit_ready = false;
    bool addr_wrapped = false;  ///< address counter has wrapped back to zero
    bool sr_full = false;       ///< serializer holds a complete byte
    bool uart_busy = false;
    bool addr_zero = false;

    /// Decodes bit i of `mask` in declaration order.
    static FsmInputs from_mask(unsigned mask);
};

struct FsmOutputs {
    bool write_enable = false;
    bool addr_inc = false;
    bool addr_reset = false;
    bool shift_en = false;
    bool uart_send = false;

    friend bool operator==(const FsmOutputs&, const FsmOutputs&) = default;
};

struct FsmStep {
    FsmState next;
    FsmOutputs outputs;
};

/// Pure transition function of the control FSM. Idle is the reset state.
FsmStep fsm_step(FsmState state, const FsmInputs& in);

enum class UartModel { RawBytes, Framed8N1 };

struct HarnessConfig {
    std::size_t ram_bits = 16384;
    UartModel uart = UartModel::RawBytes;
    double baud = 115200.0;     ///< framed mode only
    double f_clk_hz = 50e6;     ///< harness clock, for UART bookkeeping

    /// ram_bits must be a positive power of two divisible by 8.
    void validate() const;
};

/// The generator stopped delivering bits while the RAM was being filled.
class CaptureUnderrun : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CaptureResult {
    std::vector<std::uint8_t> bytes;
    /// UART line levels, one entry per bit time (framed mode only).
    std::vector<std::uint8_t> trace;
    std::uint64_t cycles = 0;
    std::uint64_t ram_fills = 0;
};

/// Clocks the FSM until `nbytes` bytes have left the UART. Every RAM fill
/// stores ram_bits generator bits, acknowledging each one as it is written.
CaptureResult run_capture(BitProducer& generator, const HarnessConfig& config, std::size_t nbytes);

/// 8N1 frame: start bit 0, data LSB first, stop bit 1.
std::array<std::uint8_t, 10> uart_frame(std::uint8_t byte);

/// Inverse of concatenated uart_frame output. Throws std::invalid_argument on
/// a bad start/stop bit or a truncated frame.
std::vector<std::uint8_t> uart_deframe(std::span<const std::uint8_t> trace);

/// Producer over a finite stream; reports exhaustion once drained.
class StreamProducer final : public BitProducer {
public:
    explicit StreamProducer(BitStream bits) : bits_(std::move(bits)) {}

    bool bit_ready() override { return pos_ < bits_.size(); }
    bool random_bit() const override;
    void read_ack() override { ++pos_; }
    bool exhausted() const override { return pos_ >= bits_.size(); }

    std::size_t consumed() const noexcept { return pos_; }

private:
    BitStream bits_;
    std::size_t pos_ = 0;
};

}  // namespace rotrng
