#pragma once

#include <cmath>
#include <string>
#include <vector>

#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "rotrng/special.hpp"

namespace rotrng::testing {

using Big = boost::multiprecision::cpp_bin_float_50;

struct GridPoint {
    std::string label;
    double ours;
    double reference;
    double abs_error() const { return std::abs(ours - reference); }
};

// Special functions against 50-digit Boost.Math evaluations.
inline std::vector<GridPoint> special_function_grid() {
    std::vector<GridPoint> grid;
    for (double x : {-3.0, -1.5, -0.5, 0.0, 1e-6, 0.1, 0.5, 1.0, 1.41421356237, 2.0, 3.0, 4.5, 6.0, 8.0}) {
        grid.push_back({"erfc(" + std::to_string(x) + ")", special::erfc(x),
                        static_cast<double>(boost::math::erfc(Big(x)))});
    }
    const double pairs[][2] = {
        {0.5, 0.01},  {0.5, 1.0},    {0.5, 10.0},   {1.0, 0.5},    {1.0, 3.0},    {2.5, 1.0},
        {2.5, 2.5},   {2.5, 9.0},    {7.5, 3.0},    {7.5, 7.5},    {7.5, 15.0},   {10.0, 11.0},
        {32.0, 20.0}, {32.0, 31.0},  {32.0, 45.0},  {127.5, 90.0}, {127.5, 120.0}, {127.5, 127.5},
        {127.5, 135.0}, {127.5, 160.0}, {127.5, 200.0}, {500.0, 480.0},
    };
    for (const auto& p : pairs) {
        const std::string args = "(" + std::to_string(p[0]) + ", " + std::to_string(p[1]) + ")";
        grid.push_back({"gamma_p" + args, special::gamma_p(p[0], p[1]),
                        static_cast<double>(boost::math::gamma_p(Big(p[0]), Big(p[1])))});
        grid.push_back({"gamma_q" + args, special::gamma_q(p[0], p[1]),
                        static_cast<double>(boost::math::gamma_q(Big(p[0]), Big(p[1])))});
    }
    for (double stat : {200.0, 255.0, 300.0}) {
        grid.push_back({"chi_square_sf(" + std::to_string(stat) + ", 255)", special::chi_square_sf(stat, 255.0),
                        static_cast<double>(boost::math::gamma_q(Big(127.5), Big(stat) / 2))});
    }
    return grid;
}

}  // namespace rotrng::testing
