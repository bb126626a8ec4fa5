#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <memory>
#include <numbers>
#include <random>
#include <vector>

#include "gsobolev/errors.hpp"
#include "gsobolev/special_functions.hpp"
#include "gsobolev/trig_interp.hpp"
#include "helpers.hpp"

using namespace gsob;
using gsob::testing::rel_diff;

namespace {

TestFunction value_only(std::function<double(double)> v) {
    TestFunction f;
    f.id = "adhoc";
    f.value = std::move(v);
    f.alpha_known = 0;
    return f;
}

double weighted_sample(const TestFunction& f, double p, double x) {
    return f.value(x) * gaussian_density_pow(x, 1.0 / p);
}

// O(n^2) coefficients straight from the aliasing identity, as a cross-check
// on the transform path.
std::vector<std::complex<double>> direct_coeffs(const TestFunction& f, int n, double T, double p) {
    const int K = n / 2;
    std::vector<std::complex<double>> out(2 * K + 1);
    for (int k = -K; k <= K; ++k) {
        std::complex<double> sum = 0.0;
        for (int j = 0; j < n; ++j) {
            const double xj = 2.0 * T * j / n - T;
            sum += weighted_sample(f, p, xj) *
                   std::polar(1.0, -2.0 * std::numbers::pi * double(j) * double(k) / double(n));
        }
        std::complex<double> c = std::sqrt(2.0 * T) / double(n) * sum;
        if (n % 2 == 0 && std::abs(k) == K) c *= 0.5;
        out[k + K] = c;
    }
    return out;
}

}  // namespace

TEST_CASE("cutoff selection closed forms") {
    const auto params = ApproximationParams::make(1.0, 2.0, 4, 0.25);
    CHECK(select_T(30, params) == doctest::Approx(10.432560386270907).epsilon(1e-12));
    CHECK(select_T(62, params) == doctest::Approx(11.492097298641486).epsilon(1e-12));
    CHECK(select_T(2, params) == doctest::Approx(4.7096400900618987).epsilon(1e-12));
    CHECK_THROWS_AS(select_T(1, params), std::invalid_argument);

    // the cutoff exceeds 1 and grows with n for every admissible parameter set
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> ps(1.0, 4.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double p = ps(rng);
        const double q = p + std::uniform_real_distribution<double>(0.1, 3.0)(rng);
        const int alpha = std::uniform_int_distribution<int>(1, 6)(rng);
        const auto pr = ApproximationParams::make(p, q, alpha);
        double prev = 1.0;
        for (int n : {2, 5, 17, 120, 4001}) {
            const double T = select_T(n, pr);
            CHECK(T > 1.0);
            CHECK(T >= prev);
            prev = T;
        }
    }
}

TEST_CASE("smoothness-free cutoff schedule") {
    CHECK(default_gamma(2) == 1.0);
    CHECK(default_gamma(3) == 1.0);
    CHECK(default_gamma(16) == doctest::Approx(1.0197814405382263).epsilon(1e-12));

    const auto params = ApproximationParams::make(1.0, 2.0, 4, 0.25);
    CHECK(select_T_alpha_free(30, default_gamma, params) ==
          doctest::Approx(5.7713079184910021).epsilon(1e-12));
    CHECK(select_T_alpha_free(3, default_gamma, params) ==
          doctest::Approx(2.9646076147350222).epsilon(1e-12));
    CHECK_THROWS_AS(select_T_alpha_free(30, nullptr, params), std::invalid_argument);
    CHECK_THROWS_AS(select_T_alpha_free(30, [](int) { return 0.0; }, params),
                    std::invalid_argument);
    CHECK_THROWS_AS(default_gamma(1), std::invalid_argument);
}

TEST_CASE("builder validation and sample count") {
    const TestFunction zero = gsob::testing::zero_function();
    CHECK_THROWS_AS(build_trig_interpolant(zero, 0, 2.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(build_trig_interpolant(zero, 8, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(build_trig_interpolant(zero, 8, 2.0, 0.5), std::invalid_argument);

    // a pole on the sample grid must surface as a numerical failure
    const TestFunction pole = value_only([](double x) { return 1.0 / x; });
    CHECK_THROWS_AS(build_trig_interpolant(pole, 8, 2.0, 1.0), numerical_error);

    std::mt19937 rng(3);
    const TestFunction f = gsob::testing::random_smooth(rng);
    auto count = std::make_shared<std::size_t>(0);
    const TestFunction counted = instrumented(f, count);
    for (int n : {1, 2, 37, 64}) {
        *count = 0;
        build_trig_interpolant(counted, n, 3.0, 1.0);
        CHECK(*count == std::size_t(n));
    }
}

TEST_CASE("zero and constant weighted samples") {
    const auto z = build_trig_interpolant(gsob::testing::zero_function(), 16, 2.0, 1.0);
    for (const auto& c : z.coeffs) CHECK(std::abs(c) <= 1e-15);

    // f = c rho^{-1/p} makes g constant, so only the zero mode survives
    const double c = 0.8;
    const double T = 2.0;
    const TestFunction flat =
        value_only([c](double x) { return c * gaussian_density_pow(x, -1.0); });
    for (int n : {15, 16}) {
        const auto interp = build_trig_interpolant(flat, n, T, 1.0);
        CHECK(rel_diff(interp.coeff(0).real(), c * std::sqrt(2.0 * T)) <= 1e-13);
        CHECK(std::abs(interp.coeff(0).imag()) <= 1e-13);
        for (int k = -interp.max_mode(); k <= interp.max_mode(); ++k)
            if (k != 0) CHECK(std::abs(interp.coeff(k)) <= 1e-13);
        // recovered function is c rho^{-1/p} everywhere inside the window
        for (double x : {-1.7, -0.3, 0.0, 1.2})
            CHECK(rel_diff(evaluate_trig(interp, x), c * gaussian_density_pow(x, -1.0)) <= 1e-12);
    }
    CHECK_THROWS_AS(z.coeff(9), std::invalid_argument);
    CHECK_THROWS_AS(z.coeff(-9), std::invalid_argument);
}

TEST_CASE("band-limited weighted samples are reproduced exactly") {
    const double T = 3.0;
    const double p = 2.0;
    const int m = 5;
    const auto wave = [T](double x) {
        return std::cos(2.0 * std::numbers::pi * double(m) * (x + T) / (2.0 * T));
    };
    const TestFunction f =
        value_only([&, T, p](double x) { return wave(x) * gaussian_density_pow(x, -1.0 / p); });

    const int n = 21;
    const auto interp = build_trig_interpolant(f, n, T, p);
    const double expected = std::sqrt(2.0 * T) / 2.0;
    CHECK(rel_diff(interp.coeff(m).real(), expected) <= 1e-12);
    CHECK(rel_diff(interp.coeff(-m).real(), expected) <= 1e-12);
    double off_band = 0.0;
    for (int k = -interp.max_mode(); k <= interp.max_mode(); ++k)
        if (std::abs(k) != m) off_band = std::max(off_band, std::abs(interp.coeff(k)));
    CHECK(off_band <= 1e-12 * std::sqrt(2.0 * T));

    std::mt19937 rng(8);
    std::uniform_real_distribution<double> xs(-T, T);
    for (int rep = 0; rep < 100; ++rep) {
        const double x = xs(rng);
        CHECK(std::abs(evaluate_trig_weighted(interp, x) - wave(x)) <= 1e-10);
    }
}

TEST_CASE("nodal interpolation for both parities") {
    std::mt19937 rng(17);
    const TestFunction f = gsob::testing::random_smooth(rng);
    const double T = 4.0;
    for (double p : {1.0, 2.0}) {
        for (int n : {8, 9, 33, 64, 129}) {
            const auto interp = build_trig_interpolant(f, n, T, p);
            for (int j = 0; j < n; ++j) {
                const double xj = 2.0 * T * j / n - T;
                const double target = weighted_sample(f, p, xj);
                CHECK(std::abs(evaluate_trig_weighted(interp, xj) - target) <=
                      1e-9 * std::max(1.0, std::abs(target)));
            }
        }
    }
}

TEST_CASE("transform path agrees with the direct aliasing sums") {
    std::mt19937 rng(29);
    const TestFunction f = gsob::testing::random_smooth(rng);
    const double T = 2.5;
    for (int n : {8, 9, 64, 65}) {
        const auto interp = build_trig_interpolant(f, n, T, 1.0);
        const auto direct = direct_coeffs(f, n, T, 1.0);
        double scale = 0.0;
        for (const auto& c : direct) scale = std::max(scale, std::abs(c));
        REQUIRE(interp.coeffs.size() == direct.size());
        for (std::size_t i = 0; i < direct.size(); ++i)
            CHECK(std::abs(interp.coeffs[i] - direct[i]) <= 1e-11 * std::max(1.0, scale));
    }
}

TEST_CASE("real samples give conjugate-symmetric coefficients") {
    std::mt19937 rng(41);
    const TestFunction f = gsob::testing::random_smooth(rng);
    for (int n : {12, 13}) {
        const auto interp = build_trig_interpolant(f, n, 3.0, 1.0);
        for (int k = 0; k <= interp.max_mode(); ++k)
            CHECK(std::abs(interp.coeff(k) - std::conj(interp.coeff(-k))) <= 1e-12);
    }
}

TEST_CASE("linearity in the sampled function") {
    std::mt19937 rng(53);
    const TestFunction f1 = gsob::testing::random_smooth(rng);
    const TestFunction f2 = gsob::testing::random_smooth(rng);
    const double a = 1.75, b = -0.4;
    const TestFunction combo = value_only(
        [&, a, b](double x) { return a * f1.value(x) + b * f2.value(x); });
    const int n = 24;
    const auto i1 = build_trig_interpolant(f1, n, 3.0, 1.0);
    const auto i2 = build_trig_interpolant(f2, n, 3.0, 1.0);
    const auto ic = build_trig_interpolant(combo, n, 3.0, 1.0);
    for (std::size_t i = 0; i < ic.coeffs.size(); ++i)
        CHECK(std::abs(ic.coeffs[i] - (a * i1.coeffs[i] + b * i2.coeffs[i])) <= 1e-12);
}

TEST_CASE("even samples give an even interpolant") {
    const TestFunction f = value_only([](double x) { return x * x; });
    const auto interp = build_trig_interpolant(f, 16, 3.0, 1.0);
    std::mt19937 rng(61);
    std::uniform_real_distribution<double> xs(0.0, 3.0);
    for (int rep = 0; rep < 50; ++rep) {
        const double x = xs(rng);
        CHECK(std::abs(evaluate_trig_weighted(interp, x) - evaluate_trig_weighted(interp, -x)) <=
              1e-12);
    }
}

TEST_CASE("support cutoff and reweighting guard") {
    const TestFunction f = value_only([](double x) { return 1.0 + x; });
    const auto interp = build_trig_interpolant(f, 9, 2.0, 1.0);
    CHECK(evaluate_trig(interp, 2.0001) == 0.0);
    CHECK(evaluate_trig(interp, -7.0) == 0.0);
    CHECK(evaluate_trig_weighted(interp, 2.0001) == 0.0);

    // a representable weighted value can overflow once rho^{-1/p} is applied
    TrigInterpolant wide;
    wide.T = 60.0;
    wide.n = 1;
    wide.p = 1.0;
    wide.coeffs = {std::complex<double>(1.0, 0.0)};
    CHECK(std::isfinite(evaluate_trig(wide, 0.0)));
    CHECK_THROWS_AS(evaluate_trig(wide, 59.0), numerical_error);

    TrigInterpolant unbuilt;
    CHECK_THROWS_AS(evaluate_trig(unbuilt, 0.0), std::invalid_argument);
}
