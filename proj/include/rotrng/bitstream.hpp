#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace rotrng {

/// Packed bit sequence. Bit i lives in word i/64 at position i%64, which
/// makes byte packing LSB-first: bit i is bit (i%8) of byte i/8.
class BitStream {
public:
    BitStream() = default;

    static BitStream from_bytes(std::span<const std::uint8_t> bytes);
    static BitStream from_bits(std::span<const std::uint8_t> bits);

    void push_back(bool bit) {
        if ((len_ & 63U) == 0) {
            words_.push_back(0);
        }
        words_.back() |= static_cast<std::uint64_t>(bit) << (len_ & 63U);
        ++len_;
    }

    bool operator[](std::size_t i) const noexcept { return ((words_[i >> 6] >> (i & 63U)) & 1U) != 0; }

    std::size_t size() const noexcept { return len_; }
    bool empty() const noexcept { return len_ == 0; }
    void reserve(std::size_t bits) { words_.reserve((bits + 63) / 64); }

    std::size_t count_ones() const noexcept;

    /// LSB-first packing; a partial last byte is zero-padded.
    std::vector<std::uint8_t> to_bytes() const;
    /// One 0/1 value per bit.
    std::vector<std::uint8_t> to_bits() const;

    std::span<const std::uint64_t> words() const noexcept { return words_; }

    friend bool operator==(const BitStream&, const BitStream&) = default;

private:
    std::vector<std::uint64_t> words_;
    std::size_t len_ = 0;
};

}  // namespace rotrng
