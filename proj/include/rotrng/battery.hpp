#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rotrng/bitstream.hpp"

namespace rotrng {

/// Raised when a stream is too short for a test's normal approximation.
class InsufficientData : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct TestOutcome {
    double statistic = 0.0;
    double p_value = 0.0;
    /// False when the test's precondition failed; p_value is then 0.
    bool applicable = true;
};

/// Frequency test: p = erfc(|#ones - #zeros| / sqrt(2 len)). len >= 100.
TestOutcome monobit(const BitStream& bits);

/// Total-runs test. Not applicable when the one-fraction deviates from 1/2 by
/// 2/sqrt(len) or more. len >= 100.
TestOutcome runs_test(const BitStream& bits);

/// Chi-square of the 2^m non-overlapping m-bit block patterns.
/// len >= 5 * 2^m * m.
TestOutcome poker_test(const BitStream& bits, unsigned m);

/// Monobit statistic applied to bits[i] XOR bits[i + lag]. len - lag >= 100.
TestOutcome autocorrelation(const BitStream& bits, std::size_t lag);

/// 255-dof chi-square of byte frequencies. At least 1280 bytes.
TestOutcome chi_square_bytes(std::span<const std::uint8_t> bytes);

struct TestResult {
    std::string name;
    TestOutcome outcome;
    bool passed = false;
};

struct TestReport {
    std::vector<TestResult> tests;
    bool passed = false;
    std::size_t length = 0;
    double alpha = 0.0;
    /// False when the stream is shorter than the configured floor.
    bool reliable = true;

    const TestResult* find(const std::string& name) const;
};

struct BatteryConfig {
    double alpha = 1e-4;
    std::size_t min_length = 1'000'000;
};

/// Names of the battery's tests, in report order.
std::vector<std::string> battery_test_names();

/// Runs every test; the stream passes iff every p-value lies in
/// (alpha, 1 - alpha). A test whose precondition fails counts as a failure.
TestReport battery(const BitStream& bits, const BatteryConfig& config = {});

void write_report_table(std::ostream& os, const TestReport& report);
/// JSON object with a `tests` array of {test, statistic, p_value, verdict}.
void write_report_json(std::ostream& os, const TestReport& report);
void write_report_csv(std::ostream& os, const TestReport& report);

}  // namespace rotrng
