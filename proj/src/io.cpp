#include "rotrng/io.hpp"

#include <cerrno>
#include <cstring>
#include <fstream>
#include <iterator>
#include <stdexcept>

namespace rotrng {
namespace {

[[noreturn]] void io_error(const char* what, const std::filesystem::path& path) {
    throw std::runtime_error(std::string(what) + " '" + path.string() + "': " + std::strerror(errno));
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        io_error("cannot open for writing", path);
    }
    return out;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        io_error("cannot open for reading", path);
    }
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) {
        io_error("read failed for", path);
    }
    return data;
}

}  // namespace

void write_bytes_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
    auto out = open_out(path);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out.flush()) {
        io_error("write failed for", path);
    }
}

std::vector<std::uint8_t> read_bytes_file(const std::filesystem::path& path) {
    const std::string data = slurp(path);
    return {data.begin(), data.end()};
}

void write_bit_trace(const std::filesystem::path& path, std::span<const std::uint8_t> bits) {
    auto out = open_out(path);
    std::string text(bits.size(), '0');
    for (std::size_t i = 0; i < bits.size(); ++i) {
        text[i] = bits[i] ? '1' : '0';
    }
    out << text;
    if (!out.flush()) {
        io_error("write failed for", path);
    }
}

std::vector<std::uint8_t> read_bit_trace(const std::filesystem::path& path) {
    const std::string text = slurp(path);
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c == '0' || c == '1') {
            bits.push_back(c == '1' ? 1 : 0);
        } else if (c != '\n' && c != '\r') {
            throw std::runtime_error("bad character in bit trace '" + path.string() + "'");
        }
    }
    return bits;
}

}  // namespace rotrng
