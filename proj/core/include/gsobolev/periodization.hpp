#pragma once

#include <vector>

#include "gsobolev/error_metrics.hpp"
#include "gsobolev/params.hpp"
#include "gsobolev/test_function.hpp"

namespace gsob {

/// Bernoulli-corrected companion of g = f rho^{1/p} on [-T, T]:
///   G = g - sum_{tau=1}^{alpha} B_tau^{[-T,T]} / tau! * mu_tau,
/// with mu_tau the integral of g^(tau) over [-T, T]. Its derivatives up to
/// order alpha - 1 take equal values at the two endpoints, which is the
/// property this diagnostic checks; neither recovery algorithm evaluates G.
struct AuxiliaryG {
    double T = 1.0;
    int alpha = 1;
    double p = 1.0;
    std::vector<double> moments;  // mu_1..mu_alpha
    TestFunction base;

    /// g = f rho^{1/p} and its derivatives via the Hermite product expansion.
    double g(double x) const;
    double g_deriv(int tau, double x) const;

    /// G(x) for |x| <= T.
    double evaluate(double x) const;

    /// G^(tau)(x), 0 <= tau <= alpha. Differentiating the correction drops
    /// its degree: B_tau turns into B_{tau - tau'} up to the factorials.
    double derivative(int tau, double x) const;
};

/// Computes the moments mu_tau with the supplied quadrature resolution.
/// Requires alpha <= f.alpha_known.
AuxiliaryG build_auxiliary_G(const TestFunction& f, const ApproximationParams& params, double T,
                             const QuadratureConfig& cfg);

/// Relative endpoint mismatches |G^(tau)(T) - G^(tau)(-T)| / (1 + |G^(tau)(T)|)
/// for tau = 0..alpha-1.
std::vector<double> check_boundary_matching(const AuxiliaryG& aux);

}  // namespace gsob
