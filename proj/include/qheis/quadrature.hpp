#pragma once

#include <functional>
#include <vector>

#include "qheis/bump.hpp"
#include "qheis/polynomial.hpp"

namespace qheis {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Legendre nodes/weights on [-1, 1].
QuadratureRule gauss_legendre(int npoints);

/// Composite Gauss-Legendre over [a, b] with `panels` equal panels.
QuadratureRule gauss_legendre_on(double a, double b, int points_per_panel, int panels = 1);

/// Quadrature adapted to a plateau bump: panels aligned with the smooth
/// pieces [lo, plateau_lo], [plateau_lo, plateau_hi], [plateau_hi, hi].
QuadratureRule bump_rule(const Bump& bump, int points_per_panel = 32, int subpanels = 2);

/// Gauss-Hermite nodes/weights (weight e^{-t^2}); `weights` here are already
/// multiplied by e^{t^2}, so sum_i w_i f(t_i) approximates int f.
QuadratureRule gauss_hermite(int npoints);

cplx integrate(const QuadratureRule& rule, const std::function<cplx(double)>& f);

} // namespace qheis
