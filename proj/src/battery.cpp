#include "rotrng/battery.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>

#include <nlohmann/json.hpp>

#include "rotrng/special.hpp"

namespace rotrng {
namespace {

constexpr std::array<std::size_t, 5> kAutocorrelationLags = {1, 2, 4, 8, 16};
constexpr unsigned kPokerBlockBits = 4;

// 64 bits of `words` starting at bit `pos`; bits past the end read as zero.
std::uint64_t window64(std::span<const std::uint64_t> words, std::size_t pos) {
    const std::size_t w = pos >> 6;
    const unsigned shift = pos & 63U;
    std::uint64_t lo = w < words.size() ? words[w] : 0;
    if (shift == 0) {
        return lo;
    }
    const std::uint64_t hi = w + 1 < words.size() ? words[w + 1] : 0;
    return (lo >> shift) | (hi << (64 - shift));
}

// Number of i in [0, len - lag) with bits[i] != bits[i + lag].
std::size_t count_disagreements(const BitStream& bits, std::size_t lag) {
    const auto words = bits.words();
    const std::size_t total = bits.size() - lag;
    std::size_t count = 0;
    for (std::size_t i = 0; i < total; i += 64) {
        std::uint64_t diff = window64(words, i) ^ window64(words, i + lag);
        const std::size_t valid = std::min<std::size_t>(64, total - i);
        if (valid < 64) {
            diff &= (std::uint64_t{1} << valid) - 1;
        }
        count += static_cast<std::size_t>(std::popcount(diff));
    }
    return count;
}

TestOutcome balance_outcome(std::size_t ones, std::size_t len) {
    const double s = 2.0 * static_cast<double>(ones) - static_cast<double>(len);
    const double statistic = std::fabs(s) / std::sqrt(static_cast<double>(len));
    return {statistic, special::erfc(statistic / std::numbers::sqrt2)};
}

void require_length(bool ok, const char* what) {
    if (!ok) {
        throw InsufficientData(std::string(what) + ": stream too short");
    }
}

std::string verdict(const TestResult& t) {
    if (!t.outcome.applicable) {
        return "not-applicable";
    }
    return t.passed ? "pass" : "fail";
}

}  // namespace

TestOutcome monobit(const BitStream& bits) {
    require_length(bits.size() >= 100, "monobit");
    return balance_outcome(bits.count_ones(), bits.size());
}

TestOutcome runs_test(const BitStream& bits) {
    require_length(bits.size() >= 100, "runs");
    const double n = static_cast<double>(bits.size());
    const double pi = static_cast<double>(bits.count_ones()) / n;
    if (std::fabs(pi - 0.5) >= 2.0 / std::sqrt(n)) {
        return {0.0, 0.0, false};
    }
    const double runs = 1.0 + static_cast<double>(count_disagreements(bits, 1));
    const double spread = 2.0 * pi * (1.0 - pi);
    const double z = std::fabs(runs - n * spread) / (std::sqrt(2.0 * n) * spread);
    return {runs, special::erfc(z)};
}

TestOutcome poker_test(const BitStream& bits, unsigned m) {
    if (m == 0 || m > 16) {
        throw std::invalid_argument("poker: block size must be in [1, 16]");
    }
    const std::size_t categories = std::size_t{1} << m;
    require_length(bits.size() >= 5 * categories * m, "poker");

    const std::size_t blocks = bits.size() / m;
    std::vector<std::size_t> counts(categories, 0);
    const auto words = bits.words();
    for (std::size_t b = 0; b < blocks; ++b) {
        const std::uint64_t pattern = window64(words, b * m) & (categories - 1);
        ++counts[pattern];
    }
    const double expected = static_cast<double>(blocks) / static_cast<double>(categories);
    double chi2 = 0.0;
    for (auto c : counts) {
        const double diff = static_cast<double>(c) - expected;
        chi2 += diff * diff / expected;
    }
    return {chi2, special::chi_square_sf(chi2, static_cast<double>(categories - 1))};
}

TestOutcome autocorrelation(const BitStream& bits, std::size_t lag) {
    if (lag == 0) {
        throw std::invalid_argument("autocorrelation: lag must be positive");
    }
    require_length(bits.size() >= lag && bits.size() - lag >= 100, "autocorrelation");
    return balance_outcome(count_disagreements(bits, lag), bits.size() - lag);
}

TestOutcome chi_square_bytes(std::span<const std::uint8_t> bytes) {
    require_length(bytes.size() >= 256 * 5, "byte chi-square");
    std::array<std::size_t, 256> counts{};
    for (auto b : bytes) {
        ++counts[b];
    }
    const double expected = static_cast<double>(bytes.size()) / 256.0;
    double chi2 = 0.0;
    for (auto c : counts) {
        const double diff = static_cast<double>(c) - expected;
        chi2 += diff * diff / expected;
    }
    return {chi2, special::chi_square_sf(chi2, 255.0)};
}

const TestResult* TestReport::find(const std::string& name) const {
    for (const auto& t : tests) {
        if (t.name == name) {
            return &t;
        }
    }
    return nullptr;
}

std::vector<std::string> battery_test_names() {
    std::vector<std::string> names = {"monobit", "runs", "poker_m4"};
    for (auto lag : kAutocorrelationLags) {
        names.push_back("autocorrelation_lag" + std::to_string(lag));
    }
    names.emplace_back("byte_chi_square");
    return names;
}

TestReport battery(const BitStream& bits, const BatteryConfig& config) {
    TestReport report;
    report.length = bits.size();
    report.alpha = config.alpha;
    report.reliable = bits.size() >= config.min_length;

    const auto bytes = bits.to_bytes();
    auto run = [&](std::string name, auto&& test) {
        TestResult result;
        result.name = std::move(name);
        try {
            result.outcome = test();
        } catch (const InsufficientData&) {
            result.outcome = {0.0, 0.0, false};
        }
        const double p = result.outcome.p_value;
        result.passed = result.outcome.applicable && p > config.alpha && p < 1.0 - config.alpha;
        report.tests.push_back(std::move(result));
    };

    run("monobit", [&] { return monobit(bits); });
    run("runs", [&] { return runs_test(bits); });
    run("poker_m4", [&] { return poker_test(bits, kPokerBlockBits); });
    for (auto lag : kAutocorrelationLags) {
        run("autocorrelation_lag" + std::to_string(lag), [&] { return autocorrelation(bits, lag); });
    }
    // Only whole bytes take part.
    run("byte_chi_square",
        [&] { return chi_square_bytes(std::span(bytes).first(bits.size() / 8)); });

    report.passed = true;
    for (const auto& t : report.tests) {
        report.passed = report.passed && t.passed;
    }
    return report;
}

void write_report_table(std::ostream& os, const TestReport& report) {
    os << "bits: " << report.length << "  alpha: " << report.alpha
       << (report.reliable ? "" : "  (UNRELIABLE: stream shorter than floor)") << '\n';
    os << std::left << std::setw(24) << "test" << std::right << std::setw(16) << "statistic"
       << std::setw(16) << "p_value" << "  verdict\n";
    for (const auto& t : report.tests) {
        os << std::left << std::setw(24) << t.name << std::right << std::setw(16) << std::setprecision(6)
           << t.outcome.statistic << std::setw(16) << std::setprecision(6) << t.outcome.p_value << "  "
           << verdict(t) << '\n';
    }
    os << "overall: " << (report.passed ? "PASS" : "FAIL") << '\n';
}

void write_report_json(std::ostream& os, const TestReport& report) {
    nlohmann::json j;
    j["length"] = report.length;
    j["alpha"] = report.alpha;
    j["reliable"] = report.reliable;
    j["overall"] = report.passed ? "pass" : "fail";
    j["tests"] = nlohmann::json::array();
    for (const auto& t : report.tests) {
        j["tests"].push_back(
            {{"test", t.name}, {"statistic", t.outcome.statistic}, {"p_value", t.outcome.p_value}, {"verdict", verdict(t)}});
    }
    os << j.dump(2) << '\n';
}

void write_report_csv(std::ostream& os, const TestReport& report) {
    os << "test,statistic,p_value,verdict\n";
    os << std::setprecision(17);
    for (const auto& t : report.tests) {
        os << t.name << ',' << t.outcome.statistic << ',' << t.outcome.p_value << ',' << verdict(t) << '\n';
    }
}

}  // namespace rotrng
