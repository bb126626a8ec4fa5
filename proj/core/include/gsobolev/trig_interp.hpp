#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "gsobolev/params.hpp"
#include "gsobolev/test_function.hpp"

namespace gsob {

/// Truncated trigonometric interpolant of g = f rho^{1/p} on [-T, T]:
/// n samples on the equispaced grid xi_j = 2Tj/n - T, expanded against the
/// orthonormal exponentials phi_k(x) = exp(2 pi i k (x+T)/(2T)) / sqrt(2T)
/// for |k| <= floor(n/2). The recovered function is rho^{-1/p} times the
/// interpolant inside [-T, T] and identically zero outside.
struct TrigInterpolant {
    double T = 1.0;
    int n = 0;
    double p = 1.0;
    /// Modes k = -max_mode()..max_mode(), stored at index k + max_mode().
    std::vector<std::complex<double>> coeffs;

    int max_mode() const { return n / 2; }
    std::complex<double> coeff(int k) const;
};

/// Cutoff radius T(n) = sqrt(2 alpha ln n / ((q-p)/(pq) - eps)). Requires
/// n >= 2.
double select_T(int n, const ApproximationParams& params);

/// Smoothness-free cutoff: alpha replaced by a slowly growing schedule
/// gamma(n), which must be positive.
double select_T_alpha_free(int n, const std::function<double(int)>& gamma_fn,
                           const ApproximationParams& params);

/// Default schedule max(ln ln n, 1).
double default_gamma(int n);

/// Builds the interpolant with exactly n evaluations of f, forming the
/// aliased coefficients by FFT in O(n log n). For even n the shared Nyquist
/// mode is split evenly between k = -n/2 and k = n/2, which keeps the
/// expansion real for real samples and nodal-exact for both parities.
TrigInterpolant build_trig_interpolant(const TestFunction& f, int n, double T, double p);

/// The recovered function rho^{-1/p}(x) * Re sum_k c_k phi_k(x) on [-T, T],
/// zero outside. Throws numerical_error if the reweighted value overflows.
double evaluate_trig(const TrigInterpolant& interp, double x);

/// The interpolant of g itself, without the rho^{-1/p} reweighting.
double evaluate_trig_weighted(const TrigInterpolant& interp, double x);

}  // namespace gsob
