#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gsobolev/params.hpp"
#include "gsobolev/test_function.hpp"

namespace gsob {

struct TrigInterpolant;
struct SplineApproximant;

/// Composite-quadrature resolution for the weighted-norm oracle. Panels tile
/// [-R, R] with every breakpoint strictly inside on a panel boundary;
/// `doubled()` is the knob the self-consistency checks turn.
struct QuadratureConfig {
    int panel_count = 8;
    int nodes_per_panel = 64;
    double truncation_radius = 1.0;
    std::vector<double> breakpoints;

    /// Default resolution for a given support radius: panels no wider than
    /// 1/4 and 64 nodes per panel.
    static QuadratureConfig for_support(double radius, std::vector<double> breakpoints = {});

    /// Twice the panels and twice the nodes per panel.
    QuadratureConfig doubled() const;

    double max_panel_width() const;
    void validate() const;
};

/// Weighted L^p distance (integral of |f - A|^p rho over the line)^{1/p}.
/// The approximant is treated as zero beyond `support_radius`; past it the
/// residual is integrated over a width-10 window on each side, after which
/// the Gaussian weight is far below double precision resolution.
double weighted_lp_error(const TestFunction& f, const std::function<double(double)>& approximant,
                         double support_radius, double p, const QuadratureConfig& cfg);

/// Same distance for the truncated trigonometric interpolant. Integrates the
/// identity |f - A|^p rho = |g - I_n g|^p with g = f rho^{1/p}, which never
/// touches the reweighting factor rho^{-1/p}.
double weighted_lp_error(const TestFunction& f, const TrigInterpolant& approximant, double p,
                         const QuadratureConfig& cfg);

/// Same distance for the interval-partitioned kernel smoother, through the
/// same weighted identity.
double weighted_lp_error(const TestFunction& f, const SplineApproximant& approximant, double p,
                         const QuadratureConfig& cfg);

/// (integral of |f|^p rho over |x| > T)^{1/p}, over a width-20 window past
/// each cutoff.
double weighted_lp_tail(const TestFunction& f, double p, double T, int nodes_per_panel = 64,
                        double max_width = 0.25);

/// Gaussian-weighted Sobolev norm: (sum_{tau<=alpha} integral of
/// |f^{(tau)}|^q rho)^{1/q}, using the exact derivative evaluators.
double sobolev_norm(const TestFunction& f, int alpha, double q, const QuadratureConfig& cfg);

/// tau-th derivative of g = f rho^{1/p}, expanded through normalized
/// probabilists' Hermite polynomials:
///   g^(tau) = rho^{1/p} sum_l binom(tau,l) (-1)^l sqrt(l!) p^{-l/2}
///             H_l(x / sqrt p) f^(tau-l).
double g_derivative(const TestFunction& f, double p, int tau, double x);

/// Grid maximum of rho^{1/q - 1/p + eps} |g^(tau)| over tau <= alpha - 1.
/// A dense-grid lower estimate of the decay seminorm driving the tail bound.
double decay_norm_estimate(const TestFunction& f, const ApproximationParams& params,
                           double grid_radius, double grid_step);

/// Closed-form tail bound for the weighted L^p mass of f beyond [-T, T]:
/// with r = 1/p - 1/q - eps (required positive),
///   (2 / (r p T))^{1/p} (2 pi)^{-r/2} exp(-r T^2 / 2) * decay_norm.
double tail_bound(const ApproximationParams& params, double decay_norm, double T);

struct RatePoint {
    double n = 0.0;
    double error = 0.0;
};

/// Least-squares slope of ln(error) against ln(n); needs >= 3 points with
/// positive n and error.
double fit_rate(const std::vector<RatePoint>& points);

struct ReportRow {
    double n = 0.0;      // sample budget
    double param = 0.0;  // cutoff T or level m
    double error = 0.0;  // weighted L^p error
};

/// Convergence table produced by the experiment harness.
struct ConvergenceReport {
    std::string algorithm;
    std::string function_id;
    ApproximationParams params;
    std::vector<ReportRow> rows;
    std::optional<double> fitted_rate;
};

}  // namespace gsob
