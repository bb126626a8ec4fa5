#include "gsobolev/periodization.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gsobolev/quadrature.hpp"
#include "gsobolev/special_functions.hpp"

namespace gsob {
namespace {

double factorial(int k) { return std::round(std::exp(std::lgamma(double(k) + 1.0))); }

}  // namespace

double AuxiliaryG::g(double x) const {
    return base.value(x) * gaussian_density_pow(x, 1.0 / p);
}

double AuxiliaryG::g_deriv(int tau, double x) const { return g_derivative(base, p, tau, x); }

double AuxiliaryG::evaluate(double x) const { return derivative(0, x); }

double AuxiliaryG::derivative(int tau, double x) const {
    if (tau < 0 || tau > alpha)
        throw std::invalid_argument("AuxiliaryG::derivative: order outside [0, alpha]");
    if (std::abs(x) > T) throw std::invalid_argument("AuxiliaryG::derivative: x outside [-T, T]");
    double value = g_deriv(tau, x);
    for (int t = std::max(tau, 1); t <= alpha; ++t)
        value -= scaled_bernoulli(t - tau, T, x) / factorial(t - tau) * moments[t - 1];
    return value;
}

AuxiliaryG build_auxiliary_G(const TestFunction& f, const ApproximationParams& params, double T,
                             const QuadratureConfig& cfg) {
    params.validate();
    cfg.validate();
    if (!(T > 0.0)) throw std::invalid_argument("build_auxiliary_G: T must be positive");
    if (params.alpha > f.alpha_known)
        throw std::invalid_argument("build_auxiliary_G: alpha exceeds declared smoothness");

    AuxiliaryG aux;
    aux.T = T;
    aux.alpha = params.alpha;
    aux.p = params.p;
    aux.base = f;
    aux.moments.assign(params.alpha, 0.0);

    std::vector<double> forced(cfg.breakpoints);
    forced.insert(forced.end(), f.kinks.begin(), f.kinks.end());
    std::sort(forced.begin(), forced.end());
    const auto edges = panel_edges(-T, T, forced, std::min(cfg.max_panel_width(), 0.25));
    for (int tau = 1; tau <= params.alpha; ++tau)
        aux.moments[tau - 1] = integrate_panels(
            [&](double x) { return g_derivative(f, params.p, tau, x); }, edges, cfg.nodes_per_panel);
    return aux;
}

std::vector<double> check_boundary_matching(const AuxiliaryG& aux) {
    std::vector<double> residuals;
    residuals.reserve(aux.alpha);
    for (int tau = 0; tau < aux.alpha; ++tau) {
        const double right = aux.derivative(tau, aux.T);
        const double left = aux.derivative(tau, -aux.T);
        residuals.push_back(std::abs(right - left) / (1.0 + std::abs(right)));
    }
    return residuals;
}

}  // namespace gsob
