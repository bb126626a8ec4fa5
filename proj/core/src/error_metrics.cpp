#include "gsobolev/error_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gsobolev/errors.hpp"
#include "gsobolev/quadrature.hpp"
#include "gsobolev/special_functions.hpp"
#include "gsobolev/spline_approx.hpp"
#include "gsobolev/trig_interp.hpp"

namespace gsob {
namespace {

constexpr double tail_window = 10.0;

std::vector<double> merged(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> out(a);
    out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end());
    return out;
}

double power_p(double v, double p) { return p == 1.0 ? v : std::pow(v, p); }

// The Hermite-expanded bracket S_tau with g^(tau) = rho^{1/p} S_tau; having
// it separate lets the decay weight absorb rho^{1/p} analytically.
double g_derivative_bracket(const TestFunction& f, double p, int tau, double x) {
    const double inv_sqrt_p = 1.0 / std::sqrt(p);
    double sum = 0.0;
    double binom = 1.0;
    for (int l = 0; l <= tau; ++l) {
        if (l > 0) binom = binom * double(tau - l + 1) / double(l);
        const double sign = l % 2 == 0 ? 1.0 : -1.0;
        const double sqrt_factorial = std::exp(0.5 * std::lgamma(double(l) + 1.0));
        sum += binom * sign * sqrt_factorial * std::pow(inv_sqrt_p, l) *
               hermite_prob_normalized(l, x * inv_sqrt_p) * f.derivative(tau - l, x);
    }
    return sum;
}

// |g - (weighted approximant)|^p over [-support, support] plus the residual
// |g|^p beyond it; both in the weighted frame, which never needs rho^{-1/p}.
double weighted_frame_error(const TestFunction& f, const std::function<double(double)>& weighted,
                            double support, double p, const QuadratureConfig& cfg,
                            const std::vector<double>& extra_breakpoints) {
    cfg.validate();
    if (p < 1.0) throw std::invalid_argument("weighted_lp_error: p must be at least 1");
    if (cfg.truncation_radius + 1e-12 < support)
        throw std::invalid_argument("weighted_lp_error: truncation radius below approximant support");

    const auto g = [&f, p](double x) { return f.value(x) * gaussian_density_pow(x, 1.0 / p); };
    const double width = cfg.max_panel_width();
    const auto forced = merged(merged(cfg.breakpoints, f.kinks), extra_breakpoints);

    const auto interior_edges = panel_edges(-support, support, forced, width);
    double total = integrate_panels(
        [&](double x) { return power_p(std::abs(g(x) - weighted(x)), p); }, interior_edges,
        cfg.nodes_per_panel);

    const double far = std::max(cfg.truncation_radius, support) + tail_window;
    const double tail_width = std::min(width, 0.25);
    const auto tail_integrand = [&](double x) { return power_p(std::abs(g(x)), p); };
    total += integrate_panels(tail_integrand, panel_edges(support, far, forced, tail_width),
                              cfg.nodes_per_panel);
    total += integrate_panels(tail_integrand, panel_edges(-far, -support, forced, tail_width),
                              cfg.nodes_per_panel);
    return std::pow(total, 1.0 / p);
}

}  // namespace

QuadratureConfig QuadratureConfig::for_support(double radius, std::vector<double> breakpoints) {
    if (!(radius > 0.0))
        throw std::invalid_argument("QuadratureConfig::for_support: radius must be positive");
    QuadratureConfig cfg;
    // p = 1 integrands carry |.| kinks at every sign change of the residual,
    // so panel resolution, not Gauss-Legendre order, limits accuracy; this
    // default keeps a further doubling below 1e-4 relative on the slowest
    // convergence rows
    cfg.truncation_radius = radius;
    cfg.panel_count = std::max(1, static_cast<int>(std::ceil(2.0 * radius / 0.125 - 1e-9)));
    cfg.nodes_per_panel = 128;
    cfg.breakpoints = std::move(breakpoints);
    return cfg;
}

QuadratureConfig QuadratureConfig::doubled() const {
    QuadratureConfig cfg(*this);
    cfg.panel_count *= 2;
    cfg.nodes_per_panel *= 2;
    return cfg;
}

double QuadratureConfig::max_panel_width() const {
    return 2.0 * truncation_radius / panel_count;
}

void QuadratureConfig::validate() const {
    if (panel_count < 1) throw std::invalid_argument("QuadratureConfig: need at least one panel");
    if (nodes_per_panel < 2 || nodes_per_panel > 512)
        throw std::invalid_argument("QuadratureConfig: nodes per panel outside [2, 512]");
    if (!(truncation_radius > 0.0))
        throw std::invalid_argument("QuadratureConfig: truncation radius must be positive");
    for (double b : breakpoints)
        if (!std::isfinite(b)) throw std::invalid_argument("QuadratureConfig: non-finite breakpoint");
}

double weighted_lp_error(const TestFunction& f, const std::function<double(double)>& approximant,
                         double support_radius, double p, const QuadratureConfig& cfg) {
    cfg.validate();
    if (p < 1.0) throw std::invalid_argument("weighted_lp_error: p must be at least 1");
    if (!(support_radius > 0.0))
        throw std::invalid_argument("weighted_lp_error: support radius must be positive");
    if (cfg.truncation_radius + 1e-12 < support_radius)
        throw std::invalid_argument("weighted_lp_error: truncation radius below approximant support");
    if (!approximant) throw std::invalid_argument("weighted_lp_error: null approximant");

    const double width = cfg.max_panel_width();
    const auto forced = merged(cfg.breakpoints, f.kinks);
    const auto interior = panel_edges(-support_radius, support_radius, forced, width);
    double total = integrate_panels(
        [&](double x) {
            return power_p(std::abs(f.value(x) - approximant(x)), p) * gaussian_density_pow(x, 1.0);
        },
        interior, cfg.nodes_per_panel);

    const double far = std::max(cfg.truncation_radius, support_radius) + tail_window;
    const double tail_width = std::min(width, 0.25);
    const auto tail_integrand = [&](double x) {
        return power_p(std::abs(f.value(x)), p) * gaussian_density_pow(x, 1.0);
    };
    total += integrate_panels(tail_integrand, panel_edges(support_radius, far, forced, tail_width),
                              cfg.nodes_per_panel);
    total += integrate_panels(tail_integrand, panel_edges(-far, -support_radius, forced, tail_width),
                              cfg.nodes_per_panel);
    return std::pow(total, 1.0 / p);
}

double weighted_lp_error(const TestFunction& f, const TrigInterpolant& approximant, double p,
                         const QuadratureConfig& cfg) {
    if (approximant.n < 1) throw std::invalid_argument("weighted_lp_error: interpolant not built");
    if (std::abs(approximant.p - p) > 1e-12)
        throw std::invalid_argument("weighted_lp_error: interpolant was built for a different p");
    return weighted_frame_error(
        f, [&](double x) { return evaluate_trig_weighted(approximant, x); }, approximant.T, p, cfg,
        {});
}

double weighted_lp_error(const TestFunction& f, const SplineApproximant& approximant, double p,
                         const QuadratureConfig& cfg) {
    if (approximant.smoothers.size() != 2 * std::size_t(approximant.m))
        throw std::invalid_argument("weighted_lp_error: approximant not built");
    if (std::abs(approximant.p - p) > 1e-12)
        throw std::invalid_argument("weighted_lp_error: approximant was built for a different p");
    // Panels must not straddle the interval joints, where the piecewise
    // smoother jumps.
    std::vector<double> joints;
    for (int k = -approximant.m; k <= approximant.m; ++k) joints.push_back(double(k));
    return weighted_frame_error(
        f, [&](double x) { return evaluate_spline_weighted(approximant, x); },
        double(approximant.m), p, cfg, joints);
}

double weighted_lp_tail(const TestFunction& f, double p, double T, int nodes_per_panel,
                        double max_width) {
    if (p < 1.0) throw std::invalid_argument("weighted_lp_tail: p must be at least 1");
    if (!(T > 0.0)) throw std::invalid_argument("weighted_lp_tail: T must be positive");
    const auto integrand = [&](double x) {
        return power_p(std::abs(f.value(x)), p) * gaussian_density_pow(x, 1.0);
    };
    const double far = T + 2.0 * tail_window;
    double total = integrate_panels(integrand, panel_edges(T, far, f.kinks, max_width),
                                    nodes_per_panel);
    total += integrate_panels(integrand, panel_edges(-far, -T, f.kinks, max_width),
                              nodes_per_panel);
    return std::pow(total, 1.0 / p);
}

double sobolev_norm(const TestFunction& f, int alpha, double q, const QuadratureConfig& cfg) {
    cfg.validate();
    if (alpha < 0 || alpha > f.alpha_known)
        throw std::invalid_argument("sobolev_norm: alpha exceeds declared smoothness");
    if (q < 1.0) throw std::invalid_argument("sobolev_norm: q must be at least 1");

    const double R = cfg.truncation_radius;
    auto forced = merged(cfg.breakpoints, f.kinks);
    forced.push_back(-R);
    forced.push_back(R);
    const auto edges =
        panel_edges(-R - tail_window, R + tail_window, forced, std::min(cfg.max_panel_width(), 0.25));
    double total = 0.0;
    for (int tau = 0; tau <= alpha; ++tau) {
        total += integrate_panels(
            [&](double x) {
                return power_p(std::abs(f.derivative(tau, x)), q) * gaussian_density_pow(x, 1.0);
            },
            edges, cfg.nodes_per_panel);
    }
    return std::pow(total, 1.0 / q);
}

double g_derivative(const TestFunction& f, double p, int tau, double x) {
    if (p < 1.0) throw std::invalid_argument("g_derivative: p must be at least 1");
    if (tau < 0 || tau > f.alpha_known)
        throw std::invalid_argument("g_derivative: order exceeds declared smoothness");
    return g_derivative_bracket(f, p, tau, x) * gaussian_density_pow(x, 1.0 / p);
}

double decay_norm_estimate(const TestFunction& f, const ApproximationParams& params,
                           double grid_radius, double grid_step) {
    params.validate();
    if (!(grid_radius > 0.0) || !(grid_step > 0.0))
        throw std::invalid_argument("decay_norm_estimate: grid must be nondegenerate");
    if (params.alpha - 1 > f.alpha_known)
        throw std::invalid_argument("decay_norm_estimate: needs derivatives up to alpha - 1");

    // Weight rho^{1/q - 1/p + eps} applied to g^(tau) = rho^{1/p} S_tau: the
    // rho^{1/p} factors cancel analytically, leaving rho^{1/q + eps} S_tau.
    const double exponent = 1.0 / params.q + params.epsilon;
    const long long steps = std::llround(std::floor(2.0 * grid_radius / grid_step));
    double best = 0.0;
    for (int tau = 0; tau < params.alpha; ++tau) {
        for (long long i = 0; i <= steps; ++i) {
            const double x = -grid_radius + double(i) * grid_step;
            const double value =
                std::abs(g_derivative_bracket(f, params.p, tau, x)) * gaussian_density_pow(x, exponent);
            best = std::max(best, value);
        }
    }
    return best;
}

double tail_bound(const ApproximationParams& params, double decay_norm, double T) {
    params.validate();
    if (!(T > 0.0)) throw std::invalid_argument("tail_bound: T must be positive");
    if (!(decay_norm >= 0.0)) throw std::invalid_argument("tail_bound: decay norm must be nonnegative");
    const double r = 1.0 / params.p - 1.0 / params.q - params.epsilon;
    if (!(r > 0.0)) throw std::invalid_argument("tail_bound: 1/p - 1/q - eps must be positive");
    return std::pow(2.0 / (r * params.p * T), 1.0 / params.p) *
           std::pow(2.0 * std::numbers::pi, -0.5 * r) * std::exp(-0.5 * r * T * T) * decay_norm;
}

double fit_rate(const std::vector<RatePoint>& points) {
    if (points.size() < 3) throw std::invalid_argument("fit_rate: need at least three points");
    double sx = 0.0, sy = 0.0;
    for (const auto& pt : points) {
        if (!(pt.n > 0.0) || !(pt.error > 0.0))
            throw std::invalid_argument("fit_rate: points must be positive");
        sx += std::log(pt.n);
        sy += std::log(pt.error);
    }
    const double mx = sx / double(points.size());
    const double my = sy / double(points.size());
    double sxx = 0.0, sxy = 0.0;
    for (const auto& pt : points) {
        const double dx = std::log(pt.n) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(pt.error) - my);
    }
    if (!(sxx > 0.0)) throw std::invalid_argument("fit_rate: sample sizes must not be constant");
    return sxy / sxx;
}

}  // namespace gsob
