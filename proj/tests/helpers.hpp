#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "gsobolev/test_function.hpp"

namespace gsob::testing {

inline TestFunction zero_function() {
    TestFunction f;
    f.id = "zero";
    f.value = [](double) { return 0.0; };
    for (int tau = 1; tau <= 8; ++tau) f.derivatives.push_back([](double) { return 0.0; });
    f.alpha_known = 8;
    return f;
}

inline TestFunction constant_function(double c) {
    TestFunction f;
    f.id = "constant";
    f.value = [c](double) { return c; };
    for (int tau = 1; tau <= 8; ++tau) f.derivatives.push_back([](double) { return 0.0; });
    f.alpha_known = 8;
    return f;
}

/// Random cubic-plus-trig function with exact derivatives to order 3.
inline TestFunction random_smooth(std::mt19937& rng) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    const double a0 = unit(rng), a1 = unit(rng), a2 = unit(rng), a3 = unit(rng);
    const double b1 = unit(rng), b2 = unit(rng);
    TestFunction f;
    f.id = "random_smooth";
    f.value = [=](double x) {
        return a0 + a1 * x + a2 * x * x + a3 * x * x * x + b1 * std::sin(x) +
               b2 * std::cos(2.0 * x);
    };
    f.derivatives = {
        [=](double x) {
            return a1 + 2.0 * a2 * x + 3.0 * a3 * x * x + b1 * std::cos(x) -
                   2.0 * b2 * std::sin(2.0 * x);
        },
        [=](double x) {
            return 2.0 * a2 + 6.0 * a3 * x - b1 * std::sin(x) - 4.0 * b2 * std::cos(2.0 * x);
        },
        [=](double x) { return 6.0 * a3 - b1 * std::cos(x) + 8.0 * b2 * std::sin(2.0 * x); },
    };
    f.alpha_known = 3;
    return f;
}

inline double rel_diff(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace gsob::testing
