#pragma once

#include <functional>
#include <vector>

namespace gsob {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Rule of the given order, by Newton iteration on the Legendre recurrence.
/// Exact for polynomials of degree 2 * order - 1. Order is capped at 512.
const GaussLegendreRule& gauss_legendre(int order);

/// Panel boundaries tiling [a, b]: every forced point strictly inside (a, b)
/// becomes a boundary, and each stretch is split evenly so that no panel is
/// wider than max_width. Returned edges are strictly increasing.
std::vector<double> panel_edges(double a, double b, const std::vector<double>& forced,
                                double max_width);

/// Composite Gauss-Legendre quadrature over consecutive panels, accumulated
/// in panel order for run-to-run determinism.
double integrate_panels(const std::function<double(double)>& fn, const std::vector<double>& edges,
                        int nodes_per_panel);

}  // namespace gsob
