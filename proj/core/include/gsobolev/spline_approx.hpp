#pragma once

#include <span>
#include <vector>

#include "gsobolev/special_functions.hpp"
#include "gsobolev/test_function.hpp"

namespace gsob {

/// One regularized kernel smoother on a unit interval: the minimizer of
///   sum_i (s(x_i) - y_i)^2 + lambda |s|_K^2
/// over the reproducing space of K, which is s(x) = sum_i a_i K(x, x_i) with
/// (K + lambda I) a = y on the Gram matrix K.
struct IntervalSmoother {
    int interval_index = 1;
    std::vector<double> points;
    std::vector<double> coefficients;
    MaternKernel kernel;
    double lambda = 1.0;

    double evaluate(double x) const;
};

/// Piecewise smoother on [-m, m]: one IntervalSmoother per unit interval,
/// fitted to g = f rho^{1/p} and reweighted by rho^{-1/p} on evaluation.
/// Zero outside [-m, m].
struct SplineApproximant {
    int m = 1;
    double p = 1.0;
    std::vector<IntervalSmoother> smoothers;  // k = -m..-1 then 1..m

    const IntervalSmoother& smoother(int k) const;
};

struct PointAllocation {
    std::vector<int> counts;  // nu_1..nu_m
    long long total;          // 2 (2^m - 1)
};

/// Geometric budget nu_k = 2^{m-k} per interval, mirrored onto k < 0.
/// Requires 1 <= m <= 24.
PointAllocation allocate_points(int m);

/// Left endpoint of the unit interval with index k != 0: [k-1, k] for k >= 1
/// and [k, k+1] for k <= -1.
double interval_left(int k);

/// The nu equispaced points left + i/(nu+1), i = 1..nu, strictly inside the
/// interval with index k.
std::vector<double> interval_points(int nu, int k);

/// Index of the interval owning x, with integer points owned by the interval
/// on their left (x = -m stays in the leftmost). Returns 0 when |x| > m.
int owning_interval(double x, int m);

/// Ridge system (K + lambda I) a = values solved by Cholesky, with one step
/// of iterative refinement. Throws numerical_error when the shifted Gram
/// matrix is numerically singular or the residual exceeds 1e-10 * |values|.
/// Points must be strictly increasing; lambda must be positive.
IntervalSmoother fit_interval_smoother(std::span<const double> points,
                                       std::span<const double> values, const MaternKernel& kernel,
                                       double lambda, int interval_index = 1);

/// Fits all 2m interval smoothers to g = f rho^{1/p} with nu_k points on the
/// k-th interval and ridge weight nu_k^(-2 (gamma + 1/2)), the rate the
/// kernel order supports. Evaluates f exactly 2 (2^m - 1) times. The kernel
/// order gamma + 1/2 must be at least alpha.
SplineApproximant build_spline_approximant(const TestFunction& f, int m,
                                           const MaternKernel& kernel, int alpha, double p);

/// The recovered function rho^{-1/p}(x) s_k(x) on the owning interval, zero
/// beyond [-m, m]. Throws numerical_error if the reweighted value overflows.
double evaluate_spline(const SplineApproximant& approx, double x);

/// The piecewise smoother of g itself, without the reweighting.
double evaluate_spline_weighted(const SplineApproximant& approx, double x);

}  // namespace gsob
