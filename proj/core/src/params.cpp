#include "gsobolev/params.hpp"

#include <cmath>
#include <stdexcept>

namespace gsob {

double ApproximationParams::default_epsilon(double p, double q) {
    return (q - p) / (2.0 * p * q);
}

ApproximationParams ApproximationParams::make(double p, double q, int alpha) {
    return make(p, q, alpha, default_epsilon(p, q));
}

ApproximationParams ApproximationParams::make(double p, double q, int alpha, double epsilon) {
    ApproximationParams params{p, q, alpha, epsilon};
    params.validate();
    return params;
}

double ApproximationParams::decay_margin() const {
    return (q - p) / (p * q) - epsilon;
}

void ApproximationParams::validate() const {
    if (!std::isfinite(p) || !std::isfinite(q) || !std::isfinite(epsilon))
        throw std::invalid_argument("ApproximationParams: non-finite entry");
    if (p < 1.0) throw std::invalid_argument("ApproximationParams: p must be at least 1");
    if (!(q > p)) throw std::invalid_argument("ApproximationParams: q must exceed p");
    if (alpha < 1) throw std::invalid_argument("ApproximationParams: alpha must be at least 1");
    if (!(epsilon > 0.0) || !(epsilon < (q - p) / (p * q)))
        throw std::invalid_argument("ApproximationParams: epsilon outside (0, (q-p)/(pq))");
}

}  // namespace gsob
