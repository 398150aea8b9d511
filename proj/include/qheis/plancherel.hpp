#pragma once

#include "qheis/quadrature.hpp"
#include "qheis/rep_a.hpp"
#include "qheis/twisted.hpp"

namespace qheis {

/// The measure |eta(r)|^n dr on the generic representations, discretized on
/// an r-quadrature rule.
struct PlancherelMeasure {
    QuadratureRule r_rule;
    ModelParams params;

    double density(double r) const;
};

struct PlancherelCheckResult {
    double lhs_closed = 0.0; // ||f||_2^2 by slicewise closed form
    double rhs_closed = 0.0; // int ||pi_r(f)||_HS^2 |eta|^n dr, closed-form HS
    double rhs_grid = 0.0;   // same with the grid-operator HS norm
    double rel_closed() const;
    double rel_grid() const;
};

/// Verifies ||f||_2^2 = int ||pi_r(f)||_HS^2 |eta(r)|^n dr on the given
/// r-quadrature.  The grid route builds pi_r at every node, so the rule must
/// avoid r = 0 (use a test function with r-support away from 0).
PlancherelCheckResult plancherel_check(const ModelParams& params, const SchwartzA& f,
                                       const QuadratureRule& r_rule, const Grid& grid);

/// Max over the r-samples of the relative Hilbert-Schmidt residual
/// || pi_r(f x xi) - pi_r(f) pi_r(xi) ||.
double intertwining_check(const ModelParams& params, const SchwartzAPtr& f, const SchwartzAPtr& xi,
                          const std::vector<double>& r_samples, const Grid& grid);

} // namespace qheis
