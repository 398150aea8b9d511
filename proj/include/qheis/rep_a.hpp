#pragma once

#include "qheis/grid.hpp"
#include "qheis/params.hpp"
#include "qheis/schwartz.hpp"

namespace qheis {

/// Fourier transform of the r-slice in the (x, y) slots only:
/// fhat(p, q) = int f(x, y, r) ebar(p.x + q.y) dx dy, one closed-form
/// expression in the 2n variables (p, q).
GaussianExpr partial_fourier_slice(const ModelParams& params, const SchwartzA& f, double r);

/// The 1-dimensional representation at (p, q): fhat(p, q) on the r = 0 slice.
cplx pi_pq(const ModelParams& params, const SchwartzA& f, const std::vector<double>& p,
           const std::vector<double>& q);

/// Kernel operator of the generic representation at r != 0 (desk scale
/// n = 1), sampled on `grid`:
///   K(u, xt) = int fhat(pt, eta u, r) e[pt (xt - u)] dpt.
/// The coverage defect |hs_grid - hs_closed| / hs_closed is recorded on the
/// returned operator.
GridOperator pi_r(const ModelParams& params, const SchwartzA& f, double r, const Grid& grid);

/// Same operator assembled without the Fourier detour,
/// K(u, v) = int f(v - u, y, r) ebar(eta u y) dy; kept as a cross-check.
GridOperator pi_r_direct(const ModelParams& params, const SchwartzA& f, double r, const Grid& grid);

/// Closed-form trace int fhat|_{O_r} dtheta and Hilbert-Schmidt norm
/// int |fhat|^2 dtheta of pi_r(f).
cplx pi_r_trace_closed(const ModelParams& params, const SchwartzA& f, double r);
double pi_r_hs_sq_closed(const ModelParams& params, const SchwartzA& f, double r);

struct PairedValues {
    double lhs = 0.0;
    double rhs = 0.0;
    double relative() const;
};

struct PairedComplex {
    cplx lhs{0.0};
    cplx rhs{0.0};
    double relative() const;
};

/// lhs = grid trace, rhs = closed-form orbit integral.
PairedComplex trace_formula_check(const ModelParams& params, const SchwartzA& f, double r,
                                  const Grid& grid);
/// lhs = grid HS norm squared, rhs = closed form.
PairedValues hs_norm_check(const ModelParams& params, const SchwartzA& f, double r,
                           const Grid& grid);

/// Shared kernel builder: the integral operator with symbol phi(p, q) on the
/// orbit at r, K(u, xt) = int phi(pt, eta u) e[pt (xt - u)] dpt.
GridOperator kernel_from_orbit_symbol(const ModelParams& params, const GaussianExpr& phi_pq,
                                      double r, const Grid& grid);

} // namespace qheis
