#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "rotrng/battery.hpp"

namespace rotrng {
namespace {

constexpr double kAlpha = 1e-4;

BitStream fair_coins(std::size_t len, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    BitStream b;
    b.reserve(len);
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < len; ++i) {
        if (i % 64 == 0) {
            word = rng();
        }
        b.push_back(((word >> (i % 64)) & 1U) != 0);
    }
    return b;
}

BitStream alternating(std::size_t len) {
    BitStream b;
    for (std::size_t i = 0; i < len; ++i) {
        b.push_back(i % 2 == 1);
    }
    return b;
}

BitStream constant(std::size_t len, bool v) {
    BitStream b;
    for (std::size_t i = 0; i < len; ++i) {
        b.push_back(v);
    }
    return b;
}

bool inside(double p) { return p > kAlpha && p < 1.0 - kAlpha; }

TEST(Monobit, Examples) {
    EXPECT_LT(monobit(constant(100, false)).p_value, 1e-20);
    EXPECT_DOUBLE_EQ(monobit(alternating(100)).p_value, 1.0);
    BitStream b;
    for (int i = 0; i < 100; ++i) {
        b.push_back(i < 60);
    }
    // erfc(sqrt(2)) = 0.0455002638...
    EXPECT_NEAR(monobit(b).p_value, 0.04550026389635842, 1e-12);
    EXPECT_THROW(monobit(constant(99, true)), InsufficientData);
}

TEST(Monobit, InvariantUnderReversalAndComplement) {
    const BitStream b = fair_coins(5000, 3);
    BitStream reversed;
    BitStream complemented;
    for (std::size_t i = 0; i < b.size(); ++i) {
        reversed.push_back(b[b.size() - 1 - i]);
        complemented.push_back(!b[i]);
    }
    EXPECT_DOUBLE_EQ(monobit(reversed).p_value, monobit(b).p_value);
    EXPECT_DOUBLE_EQ(monobit(complemented).p_value, monobit(b).p_value);
}

TEST(Runs, Examples) {
    const TestOutcome alt = runs_test(alternating(100));
    EXPECT_DOUBLE_EQ(alt.statistic, 100.0);
    EXPECT_FALSE(inside(alt.p_value));
    BitStream blocks;
    for (int i = 0; i < 100; ++i) {
        blocks.push_back(i >= 50);
    }
    const TestOutcome two = runs_test(blocks);
    EXPECT_DOUBLE_EQ(two.statistic, 2.0);
    EXPECT_FALSE(inside(two.p_value));
    EXPECT_TRUE(inside(runs_test(fair_coins(1'000'000, 11)).p_value));
}

TEST(Runs, NotApplicableWhenBiased) {
    BitStream b;
    for (int i = 0; i < 1000; ++i) {
        b.push_back(i % 3 != 0);
    }
    const TestOutcome out = runs_test(b);
    EXPECT_FALSE(out.applicable);
    EXPECT_EQ(out.p_value, 0.0);
}

TEST(Poker, Examples) {
    BitStream uniform;
    for (int rep = 0; rep < 5; ++rep) {
        for (unsigned pattern = 0; pattern < 16; ++pattern) {
            for (unsigned i = 0; i < 4; ++i) {
                uniform.push_back(((pattern >> i) & 1U) != 0);
            }
        }
    }
    const TestOutcome flat = poker_test(uniform, 4);
    EXPECT_DOUBLE_EQ(flat.statistic, 0.0);
    EXPECT_DOUBLE_EQ(flat.p_value, 1.0);

    BitStream repeated;
    for (int i = 0; i < 4000; ++i) {
        repeated.push_back(i % 4 == 1);
    }
    EXPECT_LT(poker_test(repeated, 4).p_value, 1e-20);
    EXPECT_TRUE(inside(poker_test(fair_coins(1'000'000, 12), 4).p_value));
    EXPECT_THROW(poker_test(fair_coins(319, 1), 4), InsufficientData);
}

TEST(Autocorrelation, Examples) {
    EXPECT_LT(autocorrelation(alternating(1000), 1).p_value, 1e-20);
    EXPECT_LT(autocorrelation(alternating(1000), 2).p_value, 1e-20);
    const BitStream coins = fair_coins(1'000'000, 13);
    for (std::size_t lag : {1, 2, 8}) {
        EXPECT_TRUE(inside(autocorrelation(coins, lag).p_value)) << lag;
    }
    EXPECT_THROW(autocorrelation(fair_coins(150, 1), 60), InsufficientData);
}

TEST(ByteChiSquare, Examples) {
    std::vector<std::uint8_t> uniform;
    for (int rep = 0; rep < 5; ++rep) {
        for (int v = 0; v < 256; ++v) {
            uniform.push_back(static_cast<std::uint8_t>(v));
        }
    }
    const TestOutcome flat = chi_square_bytes(uniform);
    EXPECT_DOUBLE_EQ(flat.statistic, 0.0);
    EXPECT_DOUBLE_EQ(flat.p_value, 1.0);
    EXPECT_LT(chi_square_bytes(std::vector<std::uint8_t>(5000, 0x42)).p_value, 1e-20);
    EXPECT_TRUE(inside(chi_square_bytes(fair_coins(8'000'000, 14).to_bytes()).p_value));
    EXPECT_THROW(chi_square_bytes(std::vector<std::uint8_t>(1279, 0)), InsufficientData);
}

TEST(Battery, AllZerosFails) {
    const TestReport rep = battery(constant(1'000'000, false));
    EXPECT_FALSE(rep.passed);
    EXPECT_TRUE(rep.reliable);
}

TEST(Battery, FairCoinsPass) {
    // Seed 15 hits an exact balance at lag 4 (p = 1, rejected two-sided), an
    // event of probability about 2.5e-4 per test at this length.
    const TestReport rep = battery(fair_coins(10'000'000, 16));
    EXPECT_TRUE(rep.passed);
    ASSERT_EQ(rep.tests.size(), battery_test_names().size());
    for (std::size_t i = 0; i < rep.tests.size(); ++i) {
        EXPECT_EQ(rep.tests[i].name, battery_test_names()[i]);
        EXPECT_GE(rep.tests[i].outcome.p_value, 0.0);
        EXPECT_LE(rep.tests[i].outcome.p_value, 1.0);
    }
}

TEST(Battery, ShortStreamIsUnreliableAndTooShortTestsFail) {
    const TestReport rep = battery(fair_coins(500, 16));
    EXPECT_FALSE(rep.reliable);
    EXPECT_FALSE(rep.passed);
    ASSERT_NE(rep.find("byte_chi_square"), nullptr);
    EXPECT_FALSE(rep.find("byte_chi_square")->outcome.applicable);
    EXPECT_EQ(rep.find("no_such_test"), nullptr);
}

TEST(Battery, PValuesInUnitInterval) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        BitStream b;
        const double p_one = (rng() % 100) / 100.0;
        std::bernoulli_distribution coin(p_one);
        for (int i = 0; i < 20'000; ++i) {
            b.push_back(coin(rng));
        }
        for (const auto& t : battery(b).tests) {
            EXPECT_GE(t.outcome.p_value, 0.0);
            EXPECT_LE(t.outcome.p_value, 1.0);
        }
    }
}

TEST(Battery, MonobitCalibrationOnFairCoins) {
    int rejections = 0;
    for (std::uint64_t s = 0; s < 200; ++s) {
        rejections += monobit(fair_coins(1'000'000, 1000 + s)).p_value < 0.05 ? 1 : 0;
    }
    const double rate = rejections / 200.0;
    EXPECT_GE(rate, 0.02);
    EXPECT_LE(rate, 0.10);
}

TEST(Reports, JsonFieldsAndNames) {
    const TestReport rep = battery(fair_coins(1'000'000, 17));
    std::ostringstream os;
    write_report_json(os, rep);
    const auto j = nlohmann::json::parse(os.str());
    std::multiset<std::string> names;
    for (const auto& t : j.at("tests")) {
        EXPECT_TRUE(t.contains("test"));
        EXPECT_TRUE(t.contains("statistic"));
        EXPECT_TRUE(t.contains("p_value"));
        EXPECT_TRUE(t.contains("verdict"));
        names.insert(t.at("test").get<std::string>());
    }
    for (const auto& n : battery_test_names()) {
        EXPECT_EQ(names.count(n), 1u) << n;
    }
    EXPECT_EQ(names.size(), battery_test_names().size());

    std::ostringstream csv;
    write_report_csv(csv, rep);
    EXPECT_EQ(csv.str().rfind("test,statistic,p_value,verdict", 0), 0u);
    std::ostringstream table;
    write_report_table(table, rep);
    EXPECT_NE(table.str().find("autocorrelation_lag16"), std::string::npos);
}

}  // namespace
}  // namespace rotrng
