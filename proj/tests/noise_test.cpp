#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "rotrng/noise.hpp"

namespace rotrng {
namespace {

TEST(Xoshiro, SameSeedSameSequence) {
    Xoshiro256pp a(123);
    Xoshiro256pp b(123);
    for (int i = 0; i < 1000; ++i) {
        ASSERT_EQ(a(), b());
    }
}

TEST(Xoshiro, DifferentSeedsDiverge) {
    Xoshiro256pp a(1);
    Xoshiro256pp b(2);
    int equal = 0;
    for (int i = 0; i < 1000; ++i) {
        equal += a() == b() ? 1 : 0;
    }
    EXPECT_EQ(equal, 0);
}

TEST(DeriveSeed, IndexZeroIsParent) {
    EXPECT_EQ(derive_seed(77, 0), 77u);
    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 64; ++i) {
        seen.insert(derive_seed(77, i));
    }
    EXPECT_EQ(seen.size(), 64u);
}

TEST(NoiseSource, GaussianMoments) {
    NoiseSource noise(9);
    constexpr int kDraws = 2'000'000;
    double s1 = 0.0;
    double s2 = 0.0;
    double s4 = 0.0;
    int beyond3 = 0;
    for (int i = 0; i < kDraws; ++i) {
        const double x = noise.gaussian();
        s1 += x;
        s2 += x * x;
        s4 += x * x * x * x;
        beyond3 += std::abs(x) > 3.0 ? 1 : 0;
    }
    const double mean = s1 / kDraws;
    const double var = s2 / kDraws - mean * mean;
    EXPECT_NEAR(mean, 0.0, 0.004);
    EXPECT_NEAR(var, 1.0, 0.006);
    EXPECT_NEAR(s4 / kDraws, 3.0, 0.03);
    // P(|X| > 3) = 0.0026998
    EXPECT_NEAR(static_cast<double>(beyond3) / kDraws, 0.0026998, 0.0002);
}

TEST(NoiseSource, GaussianTailReachesBeyondBaseLayer) {
    NoiseSource noise(4);
    double largest = 0.0;
    for (int i = 0; i < 5'000'000; ++i) {
        largest = std::max(largest, std::abs(noise.gaussian()));
    }
    EXPECT_GT(largest, 3.6);
}

TEST(NoiseSource, GaussianCdfAtQuantiles) {
    NoiseSource noise(11);
    constexpr int kDraws = 1'000'000;
    const std::vector<double> q{-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0};
    std::vector<int> below(q.size(), 0);
    for (int i = 0; i < kDraws; ++i) {
        const double x = noise.gaussian();
        for (std::size_t k = 0; k < q.size(); ++k) {
            below[k] += x < q[k] ? 1 : 0;
        }
    }
    for (std::size_t k = 0; k < q.size(); ++k) {
        const double expected = 0.5 * std::erfc(-q[k] / std::sqrt(2.0));
        EXPECT_NEAR(static_cast<double>(below[k]) / kDraws, expected, 0.002) << "q=" << q[k];
    }
}

TEST(NoiseSource, CoinAndUniform) {
    NoiseSource noise(5);
    constexpr int kDraws = 1'000'000;
    int heads = 0;
    double sum = 0.0;
    for (int i = 0; i < kDraws; ++i) {
        heads += noise.coin() ? 1 : 0;
        const double u = noise.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        sum += u;
    }
    EXPECT_NEAR(static_cast<double>(heads) / kDraws, 0.5, 0.002);
    EXPECT_NEAR(sum / kDraws, 0.5, 0.002);
}

}  // namespace
}  // namespace rotrng
