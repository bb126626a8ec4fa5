#include "gsobolev/trig_interp.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fft.hpp"
#include "gsobolev/errors.hpp"
#include "gsobolev/special_functions.hpp"

namespace gsob {
namespace {

std::complex<double> basis_sum(const TrigInterpolant& interp, double x) {
    // phi_k(x) = exp(i k theta) / sqrt(2T) with theta = pi (x + T) / T.
    const double theta = std::numbers::pi * (x + interp.T) / interp.T;
    const int K = interp.max_mode();
    std::complex<double> sum = 0.0;
    for (int k = -K; k <= K; ++k)
        sum += interp.coeffs[k + K] * std::polar(1.0, k * theta);
    return sum / std::sqrt(2.0 * interp.T);
}

void require_built(const TrigInterpolant& interp) {
    if (interp.n < 1 || interp.coeffs.size() != std::size_t(2 * interp.max_mode() + 1))
        throw std::invalid_argument("TrigInterpolant: not built");
}

}  // namespace

std::complex<double> TrigInterpolant::coeff(int k) const {
    if (std::abs(k) > max_mode())
        throw std::invalid_argument("TrigInterpolant::coeff: mode outside the truncation band");
    return coeffs[k + max_mode()];
}

double select_T(int n, const ApproximationParams& params) {
    params.validate();
    if (n < 2) throw std::invalid_argument("select_T: n must be at least 2");
    return std::sqrt(2.0 * params.alpha * std::log(double(n)) / params.decay_margin());
}

double select_T_alpha_free(int n, const std::function<double(int)>& gamma_fn,
                           const ApproximationParams& params) {
    params.validate();
    if (n < 2) throw std::invalid_argument("select_T_alpha_free: n must be at least 2");
    if (!gamma_fn) throw std::invalid_argument("select_T_alpha_free: null schedule");
    const double gamma = gamma_fn(n);
    if (!(gamma > 0.0))
        throw std::invalid_argument("select_T_alpha_free: schedule must be positive");
    return std::sqrt(2.0 * gamma * std::log(double(n)) / params.decay_margin());
}

double default_gamma(int n) {
    if (n < 2) throw std::invalid_argument("default_gamma: n must be at least 2");
    return std::max(std::log(std::log(double(n))), 1.0);
}

TrigInterpolant build_trig_interpolant(const TestFunction& f, int n, double T, double p) {
    if (n < 1) throw std::invalid_argument("build_trig_interpolant: n must be positive");
    if (!(T > 0.0)) throw std::invalid_argument("build_trig_interpolant: T must be positive");
    if (p < 1.0) throw std::invalid_argument("build_trig_interpolant: p must be at least 1");

    std::vector<std::complex<double>> samples(n);
    for (int j = 0; j < n; ++j) {
        const double xj = 2.0 * T * j / n - T;
        const double gj = f.value(xj) * gaussian_density_pow(xj, 1.0 / p);
        if (!std::isfinite(gj))
            throw numerical_error("build_trig_interpolant: non-finite sample of f rho^{1/p}");
        samples[j] = gj;
    }
    const auto spectrum = detail::dft(samples);

    TrigInterpolant interp;
    interp.T = T;
    interp.n = n;
    interp.p = p;
    const int K = n / 2;
    interp.coeffs.assign(2 * K + 1, {});
    // Aliased coefficient against phi_k: (2T/n) sum_j g(xi_j) conj(phi_k(xi_j))
    // = sqrt(2T)/n * X_{k mod n} for the forward transform X of the samples.
    const double scale = std::sqrt(2.0 * T) / n;
    for (int k = -K; k <= K; ++k) {
        std::complex<double> c = scale * spectrum[((k % n) + n) % n];
        if (n % 2 == 0 && std::abs(k) == K) c *= 0.5;
        interp.coeffs[k + K] = c;
    }
    return interp;
}

double evaluate_trig_weighted(const TrigInterpolant& interp, double x) {
    require_built(interp);
    if (std::abs(x) > interp.T) return 0.0;
    return basis_sum(interp, x).real();
}

double evaluate_trig(const TrigInterpolant& interp, double x) {
    require_built(interp);
    if (std::abs(x) > interp.T) return 0.0;
    const double s = basis_sum(interp, x).real();
    if (s == 0.0) return 0.0;
    // rho^{-1/p} applied in log space: a representable interpolant value can
    // still overflow after reweighting, and that case must be reported, not
    // wrapped to inf.
    const double log_mag = (0.5 * x * x + log_sqrt_2pi) / interp.p + std::log(std::abs(s));
    if (log_mag > 709.0) throw numerical_error("evaluate_trig: reweighted value overflows");
    return std::copysign(std::exp(log_mag), s);
}

}  // namespace gsob
