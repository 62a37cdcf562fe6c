#pragma once

#include <boost/math/quadrature/gauss.hpp>

#include <vector>

namespace bezout::detail {

/// Full Gauss-Legendre rule on [-1, 1] unpacked from Boost's half-tables.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

template <unsigned N>
const GaussRule& gauss_rule() {
    static const GaussRule rule = [] {
        using G = boost::math::quadrature::gauss<double, N>;
        const auto& x = G::abscissa();
        const auto& w = G::weights();
        GaussRule r;
        for (std::size_t k = 0; k < x.size(); ++k) {
            if (x[k] == 0.0) {
                r.nodes.push_back(0.0);
                r.weights.push_back(w[k]);
                continue;
            }
            r.nodes.push_back(-x[k]);
            r.weights.push_back(w[k]);
            r.nodes.push_back(x[k]);
            r.weights.push_back(w[k]);
        }
        return r;
    }();
    return rule;
}

/// Composite rule over [lo, hi] with `panels` equal panels.
template <unsigned N, class F>
auto integrate_composite(F&& f, double lo, double hi, int panels) {
    const GaussRule& rule = gauss_rule<N>();
    const double step = (hi - lo) / panels;
    decltype(f(lo)) acc{};
    for (int p = 0; p < panels; ++p) {
        const double mid = lo + (p + 0.5) * step;
        for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
            acc += rule.weights[k] * 0.5 * step * f(mid + 0.5 * step * rule.nodes[k]);
        }
    }
    return acc;
}

} // namespace bezout::detail
