#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rotrng/battery.hpp"
#include "rotrng/jitter.hpp"
#include "rotrng/params.hpp"

namespace rotrng {

/// Parameter grid experiment: every (n, l, d, r) combination is generated
/// and tested once per seed.
struct SweepSpec {
    std::vector<std::uint32_t> n_values{20};
    std::vector<std::uint32_t> l_values{3};
    std::vector<std::uint32_t> d_values{0};
    std::vector<std::uint32_t> r_values{2};
    double f_clk_hz = 50e6;
    /// Seeds are first_seed, first_seed + 1, ..., first_seed + seeds - 1.
    std::uint64_t first_seed = 1;
    std::uint32_t seeds = 10;
    std::size_t bits = 1'000'000;
    BatteryConfig battery{};
    /// Noise magnitudes; the seed field is overwritten per run.
    JitterModel model{};
    /// Worker threads; results never depend on this.
    unsigned jobs = 1;

    /// Cartesian product in n, l, d, r order (r varies fastest).
    std::vector<TrngParams> cells() const;
    /// Throws std::invalid_argument for an empty grid or zero seeds.
    void validate() const;
};

struct SweepRow {
    std::size_t cell = 0;
    TrngParams params;
    std::uint64_t seed = 0;
    std::optional<TestReport> report;
    /// Set when the run threw; the sweep carries on with the next run.
    std::string error;

    bool passed() const { return report && report->passed; }
};

/// Rows ordered by (cell, seed) regardless of completion order.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// One row per (cell, seed): n,l,d,r,seed, one p-value column per test, pass.
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

/// Fraction of passing rows for each cell, indexed like SweepSpec::cells().
std::vector<double> pass_fractions(const std::vector<SweepRow>& rows, std::size_t cells);

}  // namespace rotrng
