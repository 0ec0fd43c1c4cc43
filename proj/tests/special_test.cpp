#include <cmath>
#include <stdexcept>

#include <gtest/gtest.h>

#include "reference_grid.hpp"
#include "rotrng/special.hpp"

namespace rotrng {
namespace {

TEST(Special, MatchesHighPrecisionReference) {
    const auto grid = testing::special_function_grid();
    ASSERT_GE(grid.size(), 50u);
    for (const auto& point : grid) {
        EXPECT_LT(point.abs_error(), 1e-10) << point.label << " ours=" << point.ours << " ref=" << point.reference;
    }
}

TEST(Special, LogGamma) {
    EXPECT_NEAR(special::log_gamma(1.0), 0.0, 1e-14);
    EXPECT_NEAR(special::log_gamma(2.0), 0.0, 1e-14);
    EXPECT_NEAR(special::log_gamma(0.5), 0.5 * std::log(M_PI), 1e-13);
    for (double x : {0.1, 3.7, 12.5, 127.5, 1000.0}) {
        EXPECT_NEAR(special::log_gamma(x), std::lgamma(x), 1e-12 * std::max(1.0, std::abs(std::lgamma(x)))) << x;
    }
}

TEST(Special, ComplementsSumToOne) {
    for (double a : {0.5, 3.0, 127.5}) {
        for (double x : {0.0, 0.3, 5.0, 130.0}) {
            EXPECT_NEAR(special::gamma_p(a, x) + special::gamma_q(a, x), 1.0, 1e-14);
        }
    }
    EXPECT_EQ(special::gamma_q(2.0, 0.0), 1.0);
    EXPECT_EQ(special::erfc(0.0), 1.0);
    EXPECT_EQ(special::erfc(40.0), 0.0);
}

TEST(Special, RejectsInvalidArguments) {
    EXPECT_THROW(special::gamma_q(0.0, 1.0), std::domain_error);
    EXPECT_THROW(special::gamma_q(1.0, -1.0), std::domain_error);
    EXPECT_THROW(special::log_gamma(-1.0), std::domain_error);
}

}  // namespace
}  // namespace rotrng
