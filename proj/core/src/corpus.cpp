#include "gsobolev/corpus.hpp"

#include <cmath>
#include <stdexcept>

#include "gsobolev/special_functions.hpp"

namespace gsob {
namespace {

double sgn(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

TestFunction make_abs() {
    TestFunction f;
    f.id = "abs";
    f.value = [](double x) { return std::abs(x); };
    f.derivatives = {[](double x) { return sgn(x); }};
    f.alpha_known = 1;
    f.kinks = {0.0};
    return f;
}

TestFunction make_abs3() {
    TestFunction f;
    f.id = "abs3";
    f.value = [](double x) { return std::abs(x) * x * x; };
    f.derivatives = {
        [](double x) { return 3.0 * x * std::abs(x); },
        [](double x) { return 6.0 * std::abs(x); },
        [](double x) { return 6.0 * sgn(x); },
    };
    f.alpha_known = 3;
    f.kinks = {0.0};
    return f;
}

TestFunction make_abs5() {
    TestFunction f;
    f.id = "abs5";
    f.value = [](double x) { return std::abs(x) * x * x * x * x; };
    f.derivatives = {
        [](double x) { return 5.0 * x * x * x * std::abs(x); },
        [](double x) { return 20.0 * x * x * std::abs(x); },
        [](double x) { return 60.0 * x * std::abs(x); },
        [](double x) { return 120.0 * std::abs(x); },
        [](double x) { return 120.0 * sgn(x); },
    };
    f.alpha_known = 5;
    f.kinks = {0.0};
    return f;
}

TestFunction make_poly2() {
    TestFunction f;
    f.id = "poly2";
    f.value = [](double x) { return x * x; };
    f.derivatives = {
        [](double x) { return 2.0 * x; },
        [](double) { return 2.0; },
    };
    for (int tau = 3; tau <= 8; ++tau) f.derivatives.push_back([](double) { return 0.0; });
    f.alpha_known = 8;
    return f;
}

TestFunction make_sin() {
    TestFunction f;
    f.id = "sin";
    f.value = [](double x) { return std::sin(x); };
    for (int tau = 1; tau <= 8; ++tau) {
        switch (tau % 4) {
            case 0: f.derivatives.push_back([](double x) { return std::sin(x); }); break;
            case 1: f.derivatives.push_back([](double x) { return std::cos(x); }); break;
            case 2: f.derivatives.push_back([](double x) { return -std::sin(x); }); break;
            default: f.derivatives.push_back([](double x) { return -std::cos(x); }); break;
        }
    }
    f.alpha_known = 8;
    return f;
}

TestFunction make_gauss_bump() {
    TestFunction f;
    f.id = "gauss_bump";
    f.value = [](double x) { return std::exp(-0.5 * x * x); };
    // d^tau/dx^tau e^{-x^2/2} = (-1)^tau sqrt(tau!) H_tau(x) e^{-x^2/2} with
    // the normalized probabilists' Hermite polynomials.
    for (int tau = 1; tau <= 8; ++tau) {
        f.derivatives.push_back([tau](double x) {
            const double sign = tau % 2 == 0 ? 1.0 : -1.0;
            const double sqrt_factorial = std::exp(0.5 * std::lgamma(double(tau) + 1.0));
            return sign * sqrt_factorial * hermite_prob_normalized(tau, x) * std::exp(-0.5 * x * x);
        });
    }
    f.alpha_known = 8;
    return f;
}

}  // namespace

TestFunction corpus_lookup(const std::string& id) {
    if (id == "abs") return make_abs();
    if (id == "abs3") return make_abs3();
    if (id == "abs5") return make_abs5();
    if (id == "poly2") return make_poly2();
    if (id == "sin") return make_sin();
    if (id == "gauss_bump") return make_gauss_bump();
    throw std::invalid_argument("corpus_lookup: unknown function id '" + id + "'");
}

std::vector<std::string> corpus_ids() {
    return {"abs", "abs3", "abs5", "poly2", "sin", "gauss_bump"};
}

}  // namespace gsob
