#include "qheis/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qheis {

QuadratureRule gauss_legendre(int npoints) {
    if (npoints < 1) throw std::invalid_argument("gauss_legendre: npoints >= 1");
    QuadratureRule rule;
    rule.nodes.resize(npoints);
    rule.weights.resize(npoints);
    const int m = (npoints + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Newton from the Chebyshev-like initial guess.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (npoints + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < npoints; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = npoints * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[npoints - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[npoints - 1 - i] = w;
    }
    return rule;
}

QuadratureRule gauss_legendre_on(double a, double b, int points_per_panel, int panels) {
    const QuadratureRule base = gauss_legendre(points_per_panel);
    QuadratureRule rule;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + (b - a) * p / panels;
        const double hi = a + (b - a) * (p + 1) / panels;
        const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        for (int i = 0; i < points_per_panel; ++i) {
            rule.nodes.push_back(mid + half * base.nodes[i]);
            rule.weights.push_back(half * base.weights[i]);
        }
    }
    return rule;
}

QuadratureRule bump_rule(const Bump& bump, int points_per_panel, int subpanels) {
    QuadratureRule rule;
    const double cuts[4] = {bump.lo(), bump.plateau_lo(), bump.plateau_hi(), bump.hi()};
    for (int seg = 0; seg < 3; ++seg) {
        if (cuts[seg + 1] <= cuts[seg]) continue;
        const QuadratureRule part =
            gauss_legendre_on(cuts[seg], cuts[seg + 1], points_per_panel, subpanels);
        rule.nodes.insert(rule.nodes.end(), part.nodes.begin(), part.nodes.end());
        rule.weights.insert(rule.weights.end(), part.weights.begin(), part.weights.end());
    }
    return rule;
}

QuadratureRule gauss_hermite(int npoints) {
    if (npoints < 1) throw std::invalid_argument("gauss_hermite: npoints >= 1");
    QuadratureRule rule;
    rule.nodes.resize(npoints);
    rule.weights.resize(npoints);
    const double pim4 = 1.0 / std::pow(std::numbers::pi, 0.25);
    double x = 0.0;
    const int m = (npoints + 1) / 2;
    for (int i = 0; i < m; ++i) {
        if (i == 0) x = std::sqrt(2.0 * npoints + 1.0) - 1.85575 * std::pow(2.0 * npoints + 1.0, -1.0 / 6.0);
        else if (i == 1) x -= 1.14 * std::pow(npoints, 0.426) / x;
        else if (i == 2) x = 1.86 * x - 0.86 * rule.nodes[npoints - 1];
        else if (i == 3) x = 1.91 * x - 0.91 * rule.nodes[npoints - 2];
        else x = 2.0 * x - rule.nodes[npoints - i + 1];
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = pim4, p1 = 0.0;
            for (int j = 0; j < npoints; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = x * std::sqrt(2.0 / (j + 1.0)) * p1 - std::sqrt(j / (j + 1.0)) * p2;
            }
            pp = std::sqrt(2.0 * npoints) * p1;
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-14) break;
        }
        rule.nodes[npoints - 1 - i] = x;
        rule.nodes[i] = -x;
        const double w = 2.0 / (pp * pp);
        // Fold e^{x^2} in so the rule integrates plain decaying functions.
        rule.weights[npoints - 1 - i] = w * std::exp(x * x);
        rule.weights[i] = rule.weights[npoints - 1 - i];
    }
    return rule;
}

cplx integrate(const QuadratureRule& rule, const std::function<cplx(double)>& f) {
    cplx acc(0.0);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) acc += rule.weights[i] * f(rule.nodes[i]);
    return acc;
}

} // namespace qheis
