#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "gsobolev/corpus.hpp"
#include "gsobolev/periodization.hpp"
#include "gsobolev/quadrature.hpp"
#include "helpers.hpp"

using namespace gsob;

namespace {

AuxiliaryG build_for(const std::string& id, int alpha, double T, double p = 1.0) {
    const TestFunction f = corpus_lookup(id);
    const auto params = ApproximationParams::make(p, p + 1.0, alpha);
    return build_auxiliary_G(f, params, T, QuadratureConfig::for_support(T, f.kinks));
}

}  // namespace

TEST_CASE("corrected function matches at the window endpoints") {
    // smooth case: derivatives through alpha - 1 line up across the seam
    const auto smooth = build_for("poly2", 2, 3.0);
    for (double r : check_boundary_matching(smooth)) CHECK(r <= 1e-8);

    // kinked case: |x|^3 has three integrable derivatives
    const auto kinked = build_for("abs3", 3, 5.0);
    for (double r : check_boundary_matching(kinked)) CHECK(r <= 1e-8);

    const auto oscillatory = build_for("sin", 4, 4.0, 2.0);
    for (double r : check_boundary_matching(oscillatory)) CHECK(r <= 1e-8);
}

TEST_CASE("first moment is the endpoint difference of g") {
    // mu_1 integrates an exact derivative, so it telescopes
    const auto aux = build_for("sin", 1, 2.0);
    REQUIRE(aux.moments.size() == 1);
    const double expected = aux.g(2.0) - aux.g(-2.0);
    CHECK(std::abs(expected) > 0.01);  // the probe is genuinely asymmetric
    CHECK(std::abs(aux.moments[0] - expected) <= 1e-12 * std::max(1.0, std::abs(expected)));

    // even g: the endpoint difference vanishes and G reduces to g
    const auto even = build_for("gauss_bump", 1, 2.5);
    CHECK(std::abs(even.moments[0]) <= 1e-14);
    for (double x : {-2.0, -0.4, 1.1})
        CHECK(std::abs(even.evaluate(x) - even.g(x)) <= 1e-13);
}

TEST_CASE("zero function needs no correction") {
    const TestFunction zero = gsob::testing::zero_function();
    const auto aux = build_auxiliary_G(zero, ApproximationParams::make(1.0, 2.0, 1), 2.0,
                                       QuadratureConfig::for_support(2.0));
    CHECK(aux.moments[0] == 0.0);
    CHECK(aux.evaluate(0.7) == 0.0);
    for (double r : check_boundary_matching(aux)) CHECK(r == 0.0);
}

TEST_CASE("correction is a polynomial of bounded degree") {
    // G - g is a combination of Bernoulli polynomials of degree <= alpha, so
    // an (alpha+1)-th finite difference annihilates it
    const auto aux = build_for("sin", 3, 3.0);
    const int d = aux.alpha + 1;
    const double h = 0.5;
    for (double x0 : {-2.0, -0.5, 0.8}) {
        double diff = 0.0;
        double binom = 1.0;
        for (int i = 0; i <= d; ++i) {
            if (i > 0) binom = binom * double(d - i + 1) / double(i);
            const double sign = (d - i) % 2 == 0 ? 1.0 : -1.0;
            const double x = x0 + i * h;
            diff += sign * binom * (aux.evaluate(x) - aux.g(x));
        }
        CHECK(std::abs(diff) <= 1e-10);
    }
}

TEST_CASE("derivatives of the corrected function are consistent") {
    const auto aux = build_for("sin", 3, 3.0);
    for (int tau = 1; tau <= aux.alpha; ++tau) {
        for (double x : {-2.3, -0.9, 0.0, 1.6, 2.8}) {
            const double h = tau == 1 ? 1e-6 : 1e-5;
            const double numeric =
                (aux.derivative(tau - 1, x + h) - aux.derivative(tau - 1, x - h)) / (2.0 * h);
            const double exact = aux.derivative(tau, x);
            CHECK(std::abs(numeric - exact) <= 1e-4 * std::max(1.0, std::abs(exact)));
        }
    }
}

TEST_CASE("builder validation") {
    const TestFunction abs_f = corpus_lookup("abs");
    // alpha beyond the declared smoothness is rejected
    CHECK_THROWS_AS(build_auxiliary_G(abs_f, ApproximationParams::make(1.0, 2.0, 3), 2.0,
                                      QuadratureConfig::for_support(2.0, abs_f.kinks)),
                    std::invalid_argument);
    const auto aux = build_for("abs", 1, 2.0);
    CHECK_THROWS_AS(aux.derivative(2, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(aux.derivative(0, 2.5), std::invalid_argument);
}
