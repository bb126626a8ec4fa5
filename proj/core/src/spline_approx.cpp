#include "gsobolev/spline_approx.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "gsobolev/errors.hpp"

namespace gsob {

double IntervalSmoother::evaluate(double x) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i)
        sum += coefficients[i] * kernel(x, points[i]);
    return sum;
}

const IntervalSmoother& SplineApproximant::smoother(int k) const {
    if (k == 0 || std::abs(k) > m)
        throw std::invalid_argument("SplineApproximant::smoother: index outside [-m, m] \\ {0}");
    const std::size_t idx = k < 0 ? std::size_t(k + m) : std::size_t(m + k - 1);
    return smoothers[idx];
}

PointAllocation allocate_points(int m) {
    if (m < 1 || m > 24) throw std::invalid_argument("allocate_points: m must be in [1, 24]");
    PointAllocation alloc;
    alloc.counts.resize(m);
    long long half = 0;
    for (int k = 1; k <= m; ++k) {
        alloc.counts[k - 1] = 1 << (m - k);
        half += alloc.counts[k - 1];
    }
    alloc.total = 2 * half;  // == 2 (2^m - 1)
    return alloc;
}

double interval_left(int k) {
    if (k == 0) throw std::invalid_argument("interval_left: index must be nonzero");
    return k >= 1 ? double(k - 1) : double(k);
}

std::vector<double> interval_points(int nu, int k) {
    if (nu < 1) throw std::invalid_argument("interval_points: need at least one point");
    const double left = interval_left(k);
    std::vector<double> points(nu);
    for (int i = 1; i <= nu; ++i) points[i - 1] = left + double(i) / (nu + 1);
    return points;
}

int owning_interval(double x, int m) {
    if (m < 1) throw std::invalid_argument("owning_interval: m must be positive");
    if (!(std::abs(x) <= m)) return 0;
    if (x > 0.0) return std::max(1, static_cast<int>(std::ceil(x)));
    const double floored = std::floor(x);
    const int c = static_cast<int>(floored);
    if (x == floored) return c == -m ? -m : c - 1;
    return c;
}

IntervalSmoother fit_interval_smoother(std::span<const double> points,
                                       std::span<const double> values, const MaternKernel& kernel,
                                       double lambda, int interval_index) {
    if (points.empty() || points.size() != values.size())
        throw std::invalid_argument("fit_interval_smoother: points/values size mismatch");
    if (!(lambda > 0.0)) throw std::invalid_argument("fit_interval_smoother: lambda must be positive");
    if (interval_index == 0) throw std::invalid_argument("fit_interval_smoother: index must be nonzero");
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
        if (!(points[i] < points[i + 1]))
            throw std::invalid_argument("fit_interval_smoother: points must be strictly increasing");

    const auto nu = static_cast<Eigen::Index>(points.size());
    Eigen::MatrixXd shifted(nu, nu);
    for (Eigen::Index i = 0; i < nu; ++i) {
        for (Eigen::Index j = 0; j < nu; ++j) shifted(i, j) = kernel(points[i], points[j]);
        shifted(i, i) += lambda;
    }
    Eigen::VectorXd rhs(nu);
    for (Eigen::Index i = 0; i < nu; ++i) {
        if (!std::isfinite(values[i]))
            throw numerical_error("fit_interval_smoother: non-finite sample");
        rhs(i) = values[i];
    }

    Eigen::LLT<Eigen::MatrixXd> llt(shifted);
    if (llt.info() != Eigen::Success || llt.rcond() < 1e-14)
        throw numerical_error("fit_interval_smoother: shifted Gram matrix numerically singular");
    Eigen::VectorXd coeff = llt.solve(rhs);
    // One refinement step; the solver contract is a residual within
    // 1e-10 * |values|.
    coeff += llt.solve(rhs - shifted * coeff);
    const double residual = (rhs - shifted * coeff).norm();
    if (residual > 1e-10 * rhs.norm() && rhs.norm() > 0.0)
        throw numerical_error("fit_interval_smoother: solve residual too large");

    IntervalSmoother smoother;
    smoother.interval_index = interval_index;
    smoother.points.assign(points.begin(), points.end());
    smoother.coefficients.assign(coeff.data(), coeff.data() + nu);
    smoother.kernel = kernel;
    smoother.lambda = lambda;
    return smoother;
}

SplineApproximant build_spline_approximant(const TestFunction& f, int m,
                                           const MaternKernel& kernel, int alpha, double p) {
    if (alpha < 1) throw std::invalid_argument("build_spline_approximant: alpha must be at least 1");
    if (p < 1.0) throw std::invalid_argument("build_spline_approximant: p must be at least 1");
    if (kernel.smoothness_order() < alpha)
        throw std::invalid_argument(
            "build_spline_approximant: kernel order gamma + 1/2 below requested smoothness");
    const PointAllocation alloc = allocate_points(m);

    SplineApproximant approx;
    approx.m = m;
    approx.p = p;
    approx.smoothers.reserve(2 * std::size_t(m));
    for (int k = -m; k <= m; ++k) {
        if (k == 0) continue;
        const int nu = alloc.counts[std::abs(k) - 1];
        const auto points = interval_points(nu, k);
        std::vector<double> values(points.size());
        for (std::size_t i = 0; i < points.size(); ++i)
            values[i] = f.value(points[i]) * gaussian_density_pow(points[i], 1.0 / p);
        const double lambda = std::pow(double(nu), -2.0 * kernel.smoothness_order());
        approx.smoothers.push_back(fit_interval_smoother(points, values, kernel, lambda, k));
    }
    return approx;
}

double evaluate_spline_weighted(const SplineApproximant& approx, double x) {
    if (approx.smoothers.size() != 2 * std::size_t(approx.m))
        throw std::invalid_argument("SplineApproximant: not built");
    const int k = owning_interval(x, approx.m);
    if (k == 0) return 0.0;
    return approx.smoother(k).evaluate(x);
}

double evaluate_spline(const SplineApproximant& approx, double x) {
    const double s = evaluate_spline_weighted(approx, x);
    if (s == 0.0) return 0.0;
    const double log_mag = (0.5 * x * x + log_sqrt_2pi) / approx.p + std::log(std::abs(s));
    if (log_mag > 709.0) throw numerical_error("evaluate_spline: reweighted value overflows");
    return std::copysign(std::exp(log_mag), s);
}

}  // namespace gsob
