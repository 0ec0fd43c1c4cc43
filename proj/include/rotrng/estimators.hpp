#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "rotrng/params.hpp"

namespace rotrng {

using Rational = boost::rational<std::int64_t>;

/// Parses a non-negative decimal such as "50e6", "12.5" or "50000000"
/// exactly. Throws std::invalid_argument on malformed input.
Rational parse_decimal(std::string_view text);

/// Exact decimal expansion when it terminates, otherwise "p/q".
std::string format_rational(const Rational& value);

struct ThroughputEstimate {
    Rational bps;

    Rational kbps() const { return bps / 1000; }
};

/// b = f / (2^r * 2^d). Throws std::invalid_argument for f <= 0.
ThroughputEstimate throughput(const Rational& f_hz, unsigned d, unsigned r);

struct ResourceTerm {
    std::string name;
    Rational clbs;
};

/// CLB estimate C = l + ceil((n-1)/3) + d/4 + r/4 + ceil((r-1)/3) + 3.
/// The fractional terms are approximations and are kept exact, not rounded.
struct ResourceEstimate {
    Rational clb_count;
    /// ro_chain, xor_tree, divider, counter, and_stage, fixed.
    std::vector<ResourceTerm> breakdown;

    /// ceil(clb_count), for display only.
    std::int64_t rounded_up() const;
};

ResourceEstimate clb_count(const TrngParams& params);

struct Table1Row {
    unsigned d;
    unsigned r;
    unsigned n;
    unsigned l;
    Rational kbps;

    /// Throughput truncated to whole Kbps, as the table prints it.
    std::int64_t kbps_truncated() const;
};

/// The four recommended parameter rows with their throughput at `f_hz`.
std::vector<Table1Row> table1(const Rational& f_hz);

void write_table1_text(std::ostream& os, const std::vector<Table1Row>& rows);
void write_table1_csv(std::ostream& os, const std::vector<Table1Row>& rows);

}  // namespace rotrng
