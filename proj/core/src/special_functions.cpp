#include "gsobolev/special_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gsobolev/errors.hpp"

namespace gsob {
namespace {

// Monomial coefficients of B_tau, filled from B_tau' = tau B_{tau-1} with the
// constant term fixed by the vanishing integral over [0, 1].
const std::vector<std::vector<double>>& bernoulli_coefficients() {
    static const std::vector<std::vector<double>> table = [] {
        std::vector<std::vector<double>> c(max_special_order + 1);
        c[0] = {1.0};
        for (int tau = 1; tau <= max_special_order; ++tau) {
            c[tau].assign(tau + 1, 0.0);
            for (int j = 1; j <= tau; ++j) c[tau][j] = tau * c[tau - 1][j - 1] / j;
            double integral = 0.0;
            for (int j = 1; j <= tau; ++j) integral += c[tau][j] / (j + 1);
            c[tau][0] = -integral;
        }
        return c;
    }();
    return table;
}

}  // namespace

double hermite_prob_normalized(int ell, double x) {
    if (ell < 0 || ell > max_special_order)
        throw std::invalid_argument("hermite_prob_normalized: order must be in [0, 32]");
    if (ell == 0) return 1.0;
    double prev = 1.0;
    double cur = x;
    for (int l = 1; l < ell; ++l) {
        const double next = (x * cur - std::sqrt(double(l)) * prev) / std::sqrt(double(l + 1));
        prev = cur;
        cur = next;
    }
    return cur;
}

double bernoulli_poly(int tau, double t) {
    if (tau < 0 || tau > max_special_order)
        throw std::invalid_argument("bernoulli_poly: order must be in [0, 32]");
    const auto& c = bernoulli_coefficients()[tau];
    double acc = 0.0;
    for (int j = tau; j >= 0; --j) acc = acc * t + c[j];
    return acc;
}

double scaled_bernoulli(int tau, double T, double x) {
    if (!(T > 0.0)) throw std::invalid_argument("scaled_bernoulli: T must be positive");
    if (std::abs(x) > T) throw std::invalid_argument("scaled_bernoulli: x outside [-T, T]");
    return std::pow(2.0 * T, tau - 1) * bernoulli_poly(tau, (x + T) / (2.0 * T));
}

MaternKernel::MaternKernel(double gamma_, double length_scale_)
    : gamma(gamma_), length_scale(length_scale_) {
    const double doubled = 2.0 * gamma;
    const int twice = static_cast<int>(std::lround(doubled));
    if (std::abs(doubled - twice) > 1e-12 || twice % 2 == 0 || twice < 1 || twice > 7)
        throw std::invalid_argument("MaternKernel: gamma must be 1/2, 3/2, 5/2 or 7/2");
    if (!(length_scale > 0.0)) throw std::invalid_argument("MaternKernel: length scale must be positive");
}

double MaternKernel::operator()(double x, double y) const {
    return matern_phi(*this, std::abs(x - y));
}

int MaternKernel::smoothness_order() const {
    return static_cast<int>(std::lround(gamma + 0.5));
}

double matern_phi(const MaternKernel& kernel, double r) {
    if (r < 0.0) throw std::invalid_argument("matern_phi: radius must be nonnegative");
    const double z = std::sqrt(2.0 * kernel.gamma) * r / kernel.length_scale;
    switch (static_cast<int>(std::lround(kernel.gamma - 0.5))) {
        case 0: return std::exp(-z);
        case 1: return (1.0 + z) * std::exp(-z);
        case 2: return (1.0 + z + z * z / 3.0) * std::exp(-z);
        case 3: return (1.0 + z + 2.0 * z * z / 5.0 + z * z * z / 15.0) * std::exp(-z);
        default: throw std::invalid_argument("matern_phi: unsupported order");
    }
}

double gaussian_density_pow(double x, double s) {
    const double log_value = s * (-0.5 * x * x - log_sqrt_2pi);
    if (log_value > 709.0) throw numerical_error("gaussian_density_pow: rho^s overflows");
    return std::exp(log_value);
}

}  // namespace gsob
