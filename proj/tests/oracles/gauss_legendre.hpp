#pragma once

// Tensor-product Gauss-Legendre quadrature on axis-aligned boxes, with each
// axis optionally split at interior break points so that kinks (|x - u|) and
// peaks fall on panel boundaries.

#include <boost/math/quadrature/gauss.hpp>

#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace oracle {

struct Rule1d {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Composite rule on [lo, hi], split at the given break points, with the
/// fixed Points-node Gauss-Legendre rule on every panel.
template <unsigned Points>
Rule1d composite_rule(double lo, double hi, std::vector<double> breaks = {}) {
    using G = boost::math::quadrature::gauss<double, Points>;
    std::vector<double> edges{lo};
    for (double b : breaks) {
        if (b > edges.back() && b < hi) edges.push_back(b);
    }
    edges.push_back(hi);
    Rule1d rule;
    const auto& xs = G::abscissa();
    const auto& ws = G::weights();
    for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
        const double mid = 0.5 * (edges[p] + edges[p + 1]);
        const double half = 0.5 * (edges[p + 1] - edges[p]);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (xs[i] == 0.0) {
                rule.nodes.push_back(mid);
                rule.weights.push_back(half * ws[i]);
                continue;
            }
            rule.nodes.push_back(mid - half * xs[i]);
            rule.weights.push_back(half * ws[i]);
            rule.nodes.push_back(mid + half * xs[i]);
            rule.weights.push_back(half * ws[i]);
        }
    }
    return rule;
}

/// sum over the tensor grid of prod_i w_i * f(x).
inline double tensor_quadrature(const std::vector<Rule1d>& axes,
                                const std::function<double(std::span<const double>)>& f) {
    const std::size_t s = axes.size();
    std::vector<std::size_t> idx(s, 0);
    std::vector<double> x(s);
    double total = 0.0;
    while (true) {
        double w = 1.0;
        for (std::size_t i = 0; i < s; ++i) {
            x[i] = axes[i].nodes[idx[i]];
            w *= axes[i].weights[idx[i]];
        }
        total += w * f(x);
        std::size_t i = 0;
        while (i < s && ++idx[i] == axes[i].nodes.size()) idx[i++] = 0;
        if (i == s) break;
    }
    return total;
}

}  // namespace oracle
