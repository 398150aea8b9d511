#include "qheis/plancherel.hpp"

#include <cmath>
#include <stdexcept>

namespace qheis {

double PlancherelMeasure::density(double r) const {
    return std::pow(std::abs(eta_lambda(params, r)), params.n);
}

double PlancherelCheckResult::rel_closed() const {
    const double scale = std::max({1e-300, lhs_closed, rhs_closed});
    return std::abs(lhs_closed - rhs_closed) / scale;
}

double PlancherelCheckResult::rel_grid() const {
    const double scale = std::max({1e-300, lhs_closed, rhs_grid});
    return std::abs(lhs_closed - rhs_grid) / scale;
}

PlancherelCheckResult plancherel_check(const ModelParams& params, const SchwartzA& f,
                                       const QuadratureRule& r_rule, const Grid& grid) {
    PlancherelCheckResult out;
    const PlancherelMeasure mu{r_rule, params};
    for (std::size_t k = 0; k < r_rule.nodes.size(); ++k) {
        const double r = r_rule.nodes[k];
        const double w = r_rule.weights[k];
        const GaussianExpr slice = f.xy_slice(params, r);
        if (slice.is_zero()) continue;
        out.lhs_closed += w * (slice * slice.conjugated()).integrate_all().real();
        if (r == 0.0)
            throw std::invalid_argument(
                "plancherel_check: r-quadrature hits r = 0; keep the r-support away from 0");
        const double dens = mu.density(r);
        out.rhs_closed += w * pi_r_hs_sq_closed(params, f, r) * dens;
        out.rhs_grid += w * pi_r(params, f, r, grid).hs_norm_sq() * dens;
    }
    return out;
}

double intertwining_check(const ModelParams& params, const SchwartzAPtr& f, const SchwartzAPtr& xi,
                          const std::vector<double>& r_samples, const Grid& grid) {
    const SchwartzAPtr prod = regular_rep(f, xi);
    double worst = 0.0;
    for (double r : r_samples) {
        const GridOperator left = pi_r(params, *prod, r, grid);
        const GridOperator right = pi_r(params, *f, r, grid).compose(pi_r(params, *xi, r, grid));
        worst = std::max(worst, hs_relative_error(left, right));
    }
    return worst;
}

} // namespace qheis
