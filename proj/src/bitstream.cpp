#include "rotrng/bitstream.hpp"

#include <bit>

namespace rotrng {

BitStream BitStream::from_bytes(std::span<const std::uint8_t> bytes) {
    BitStream out;
    out.words_.assign((bytes.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < bytes.size(); ++i) {
        out.words_[i / 8] |= static_cast<std::uint64_t>(bytes[i]) << (8 * (i % 8));
    }
    out.len_ = bytes.size() * 8;
    return out;
}

BitStream BitStream::from_bits(std::span<const std::uint8_t> bits) {
    BitStream out;
    out.reserve(bits.size());
    for (auto b : bits) {
        out.push_back(b != 0);
    }
    return out;
}

std::size_t BitStream::count_ones() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

std::vector<std::uint8_t> BitStream::to_bytes() const {
    std::vector<std::uint8_t> out((len_ + 7) / 8);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = static_cast<std::uint8_t>(words_[i / 8] >> (8 * (i % 8)));
    }
    return out;
}

std::vector<std::uint8_t> BitStream::to_bits() const {
    std::vector<std::uint8_t> out(len_);
    for (std::size_t i = 0; i < len_; ++i) {
        out[i] = (*this)[i] ? 1 : 0;
    }
    return out;
}

}  // namespace rotrng
