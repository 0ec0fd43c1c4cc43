#include "rotrng/harness.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace rotrng {

std::string_view to_string(FsmState state) {
    switch (state) {
        case FsmState::Idle: return "Idle";
        case FsmState::PrepareFillRAM: return "PrepareFillRAM";
        case FsmState::FillRAM: return "FillRAM";
        case FsmState::ReadRAM: return "ReadRAM";
        case FsmState::ShiftIn: return "ShiftIn";
        case FsmState::CheckSR: return "CheckSR";
        case FsmState::WaitUART: return "WaitUART";
        case FsmState::UARTSend: return "UARTSend";
    }
    return "?";
}

FsmInputs FsmInputs::from_mask(unsigned mask) {
    return {(mask & 1U) != 0, (mask & 2U) != 0, (mask & 4U) != 0, (mask & 8U) != 0, (mask & 16U) != 0};
}

FsmStep fsm_step(FsmState state, const FsmInputs& in) {
    FsmStep step{state, {}};
    auto& out = step.outputs;
    switch (state) {
        case FsmState::Idle:
            step.next = FsmState::PrepareFillRAM;
            out.addr_reset = true;
            break;
        case FsmState::PrepareFillRAM:
            step.next = FsmState::FillRAM;
            out.addr_reset = true;
            break;
        case FsmState::FillRAM:
            if (in.addr_wrapped) {
                step.next = FsmState::ReadRAM;
            } else if (in.bit_ready) {
                out.write_enable = true;
                out.addr_inc = true;
            }
            break;
        case FsmState::ReadRAM:
            step.next = FsmState::ShiftIn;
            break;
        case FsmState::ShiftIn:
            step.next = FsmState::CheckSR;
            out.shift_en = true;
            out.addr_inc = true;
            break;
        case FsmState::CheckSR:
            step.next = in.sr_full ? FsmState::WaitUART : FsmState::ReadRAM;
            break;
        case FsmState::WaitUART:
            // The byte is handed to the UART on the edge that leaves WaitUART.
            if (!in.uart_busy) {
                step.next = FsmState::UARTSend;
                out.uart_send = true;
            }
            break;
        case FsmState::UARTSend:
            step.next = in.addr_zero ? FsmState::PrepareFillRAM : FsmState::ReadRAM;
            break;
    }
    return step;
}

void HarnessConfig::validate() const {
    if (ram_bits == 0 || ram_bits % 8 != 0 || !std::has_single_bit(ram_bits)) {
        throw std::invalid_argument("HarnessConfig: ram_bits must be a power of two divisible by 8");
    }
    if (uart == UartModel::Framed8N1 && !(baud > 0.0)) {
        throw std::invalid_argument("HarnessConfig: baud must be positive");
    }
    if (!(f_clk_hz > 0.0)) {
        throw std::invalid_argument("HarnessConfig: clock must be positive");
    }
}

CaptureResult run_capture(BitProducer& generator, const HarnessConfig& config, std::size_t nbytes) {
    config.validate();

    CaptureResult result;
    result.bytes.reserve(nbytes);
    const bool framed = config.uart == UartModel::Framed8N1;
    const std::uint64_t byte_cycles =
        framed ? static_cast<std::uint64_t>(std::ceil(10.0 * config.f_clk_hz / config.baud)) : 0;

    std::vector<std::uint8_t> ram(config.ram_bits, 0);
    FsmState state = FsmState::Idle;
    std::size_t addr = 0;
    bool wrapped = false;
    std::uint8_t data_out = 0;  // RAM read port register
    std::uint8_t shift_reg = 0;
    unsigned shift_count = 0;
    std::uint64_t uart_free_at = 0;
    std::uint64_t& cycle = result.cycles;

    while (result.bytes.size() < nbytes) {
        FsmInputs in;
        in.bit_ready = state == FsmState::FillRAM && generator.bit_ready();
        in.addr_wrapped = wrapped;
        in.sr_full = shift_count == 8;
        in.uart_busy = cycle < uart_free_at;
        in.addr_zero = addr == 0;

        if (state == FsmState::FillRAM && !in.addr_wrapped && !in.bit_ready && generator.exhausted()) {
            throw CaptureUnderrun("run_capture: generator exhausted after " +
                                  std::to_string(result.ram_fills * config.ram_bits + addr) + " bits; " +
                                  std::to_string(result.bytes.size()) + " of " + std::to_string(nbytes) +
                                  " bytes emitted");
        }
        if (state == FsmState::WaitUART && in.uart_busy) {
            // Holding in WaitUART; jump straight to the cycle the UART frees up.
            cycle = uart_free_at;
            continue;
        }

        const FsmStep step = fsm_step(state, in);
        const FsmOutputs& out = step.outputs;

        if (state == FsmState::ReadRAM) {
            data_out = ram[addr];
        }
        if (out.addr_reset) {
            addr = 0;
            wrapped = false;
        }
        if (out.write_enable) {
            ram[addr] = generator.random_bit() ? 1 : 0;
            generator.read_ack();
        }
        if (out.shift_en) {
            shift_reg = static_cast<std::uint8_t>((shift_reg >> 1) | (data_out << 7));
            ++shift_count;
        }
        if (out.addr_inc) {
            addr = (addr + 1) & (config.ram_bits - 1);
            if (addr == 0) {
                wrapped = true;
                if (state == FsmState::FillRAM) {
                    ++result.ram_fills;
                }
            }
        }
        if (out.uart_send) {
            result.bytes.push_back(shift_reg);
            if (framed) {
                const auto frame = uart_frame(shift_reg);
                result.trace.insert(result.trace.end(), frame.begin(), frame.end());
            }
            shift_count = 0;
            uart_free_at = cycle + 1 + byte_cycles;
        }

        state = step.next;
        ++cycle;
    }
    return result;
}

std::array<std::uint8_t, 10> uart_frame(std::uint8_t byte) {
    std::array<std::uint8_t, 10> frame{};
    frame[0] = 0;
    for (int i = 0; i < 8; ++i) {
        frame[1 + i] = (byte >> i) & 1U;
    }
    frame[9] = 1;
    return frame;
}

std::vector<std::uint8_t> uart_deframe(std::span<const std::uint8_t> trace) {
    if (trace.size() % 10 != 0) {
        throw std::invalid_argument("uart_deframe: truncated frame");
    }
    std::vector<std::uint8_t> bytes;
    bytes.reserve(trace.size() / 10);
    for (std::size_t f = 0; f < trace.size(); f += 10) {
        if (trace[f] != 0 || trace[f + 9] != 1) {
            throw std::invalid_argument("uart_deframe: framing error at bit " + std::to_string(f));
        }
        std::uint8_t byte = 0;
        for (int i = 0; i < 8; ++i) {
            byte |= static_cast<std::uint8_t>((trace[f + 1 + i] & 1U) << i);
        }
        bytes.push_back(byte);
    }
    return bytes;
}

bool StreamProducer::random_bit() const {
    if (pos_ >= bits_.size()) {
        throw std::logic_error("StreamProducer: RandomBit read while BitReady is low");
    }
    return bits_[pos_];
}

}  // namespace rotrng
