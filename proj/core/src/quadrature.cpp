#include "gsobolev/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace gsob {
namespace {

GaussLegendreRule compute_rule(int order) {
    GaussLegendreRule rule;
    rule.nodes.assign(order, 0.0);
    rule.weights.assign(order, 0.0);
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Chebyshev-angle initial guess, then Newton on P_order.
        double z = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        double p1 = 0.0;
        double pp = 0.0;
        for (int iter = 0; iter < 64; ++iter) {
            p1 = 1.0;
            double p2 = 0.0;
            for (int j = 0; j < order; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
            }
            pp = order * (z * p1 - p2) / (z * z - 1.0);
            const double dz = p1 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) {
                p1 = 1.0;
                p2 = 0.0;
                for (int j = 0; j < order; ++j) {
                    const double p3 = p2;
                    p2 = p1;
                    p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
                }
                pp = order * (z * p1 - p2) / (z * z - 1.0);
                break;
            }
        }
        rule.nodes[i] = -z;
        rule.nodes[order - 1 - i] = z;
        rule.weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.weights[order - 1 - i] = rule.weights[i];
    }
    if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
    return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int order) {
    if (order < 1 || order > 512)
        throw std::invalid_argument("gauss_legendre: order must be in [1, 512]");
    static std::map<int, GaussLegendreRule> cache;
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_rule(order)).first;
    return it->second;
}

std::vector<double> panel_edges(double a, double b, const std::vector<double>& forced,
                                double max_width) {
    if (!(b > a)) throw std::invalid_argument("panel_edges: empty interval");
    if (!(max_width > 0.0)) throw std::invalid_argument("panel_edges: max_width must be positive");
    const double tol = 1e-12 * std::max(1.0, b - a);
    std::vector<double> anchors{a};
    std::vector<double> interior(forced);
    std::sort(interior.begin(), interior.end());
    for (double t : interior)
        if (t > a + tol && t < b - tol && t > anchors.back() + tol) anchors.push_back(t);
    anchors.push_back(b);

    std::vector<double> edges{a};
    for (std::size_t i = 0; i + 1 < anchors.size(); ++i) {
        const double u = anchors[i];
        const double v = anchors[i + 1];
        const int segments = std::max(1, static_cast<int>(std::ceil((v - u) / max_width - 1e-9)));
        for (int s = 1; s <= segments; ++s) edges.push_back(u + (v - u) * s / segments);
    }
    return edges;
}

double integrate_panels(const std::function<double(double)>& fn, const std::vector<double>& edges,
                        int nodes_per_panel) {
    if (edges.size() < 2) throw std::invalid_argument("integrate_panels: need at least one panel");
    const GaussLegendreRule& rule = gauss_legendre(nodes_per_panel);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        const double mid = 0.5 * (edges[i] + edges[i + 1]);
        const double half = 0.5 * (edges[i + 1] - edges[i]);
        double panel = 0.0;
        for (std::size_t j = 0; j < rule.nodes.size(); ++j)
            panel += rule.weights[j] * fn(mid + half * rule.nodes[j]);
        total += panel * half;
    }
    return total;
}

}  // namespace gsob
