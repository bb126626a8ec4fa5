#pragma once

namespace gsob {

/// Orders above this are rejected by the polynomial evaluators.
inline constexpr int max_special_order = 32;

/// ln sqrt(2 pi), the log normalization of the standard Gaussian density.
inline constexpr double log_sqrt_2pi = 0.91893853320467274178;

/// Probabilists' Hermite polynomial of degree ell with 1/sqrt(ell!)
/// normalization, via the stable three-term recurrence
///   sqrt(ell+1) H_{ell+1}(x) = x H_ell(x) - sqrt(ell) H_{ell-1}(x).
/// The family is orthonormal against the standard Gaussian density.
double hermite_prob_normalized(int ell, double x);

/// Bernoulli polynomial B_tau(t). B_0 = 1, B_tau' = tau B_{tau-1}, and the
/// integral of B_tau over [0, 1] vanishes for tau >= 1.
double bernoulli_poly(int tau, double t);

/// Bernoulli polynomial rescaled to [-T, T]:
///   B_tau^{[-T,T]}(x) = (2T)^{tau-1} B_tau((x + T) / (2T)).
/// Requires T > 0 and |x| <= T.
double scaled_bernoulli(int tau, double T, double x);

/// Stationary Matern kernel of half-integer order gamma in
/// {1/2, 3/2, 5/2, 7/2}. These orders have closed-form radial profiles and
/// reproduce Sobolev spaces of integer order gamma + 1/2 on an interval.
struct MaternKernel {
    double gamma = 1.5;
    double length_scale = 1.0;

    MaternKernel() = default;
    MaternKernel(double gamma, double length_scale);

    /// K(x, y) = Phi_gamma(|x - y|); K(x, x) = 1.
    double operator()(double x, double y) const;

    /// Integer order gamma + 1/2 of the reproduced Sobolev space.
    int smoothness_order() const;
};

/// Radial profile Phi_gamma(r), r >= 0, of the Matern kernel.
double matern_phi(const MaternKernel& kernel, double r);

/// rho(x)^s for the standard Gaussian density rho, computed in log space so
/// that moderate powers stay usable out to |x| ~ 40. Underflow returns 0;
/// overflow (s < 0 at large |x|) throws numerical_error.
double gaussian_density_pow(double x, double s);

}  // namespace gsob
