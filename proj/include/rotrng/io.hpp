#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace rotrng {

/// Raw binary file; errors carry the path.
void write_bytes_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> read_bytes_file(const std::filesystem::path& path);

/// One '0'/'1' character per element, no separators.
void write_bit_trace(const std::filesystem::path& path, std::span<const std::uint8_t> bits);
std::vector<std::uint8_t> read_bit_trace(const std::filesystem::path& path);

}  // namespace rotrng
