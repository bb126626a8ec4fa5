#pragma once

namespace gsob {

/// Parameter tuple shared by both recovery algorithms and the error oracle:
/// source exponent q (smoothness norm), target exponent p (error norm),
/// integer smoothness alpha, and the tail-decay slack epsilon. Validity
/// requires 1 <= p < q and 0 < epsilon < (q - p)/(p q).
struct ApproximationParams {
    double p = 1.0;
    double q = 2.0;
    int alpha = 1;
    double epsilon = 0.25;

    /// Midpoint (q - p)/(2 p q) of the admissible epsilon interval.
    static double default_epsilon(double p, double q);

    static ApproximationParams make(double p, double q, int alpha);
    static ApproximationParams make(double p, double q, int alpha, double epsilon);

    /// (q - p)/(p q) - epsilon; strictly positive for valid parameters.
    double decay_margin() const;

    /// Throws std::invalid_argument on any constraint violation.
    void validate() const;
};

}  // namespace gsob
