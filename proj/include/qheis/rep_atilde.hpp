#pragma once

#include "qheis/grid.hpp"
#include "qheis/schwartz.hpp"

namespace qheis {

/// 1-dimensional representation: int f(x,y,0,w) ebar(s w) dx dy dw.
cplx pi_tilde_s(const ModelParams& params, const SchwartzAtilde& f, double s);

/// Operator on the d-line with kernel
///   K(d, d') = int f(x, y, 0, d'-d) ebar(e^d p x + e^{-d} q y) dx dy.
/// On a periodic grid the kernel is wrapped in d'-d.  (p, q) = (0, 0) is
/// allowed and gives the reducible limit operator S.
GridOperator pi_tilde_pq(const ModelParams& params, const SchwartzAtilde& f, double p, double q,
                         const Grid& dgrid);

/// Generic operator at r != 0, kernel
///   K(u, v) = int f(e^w v - u, y, r, w) ebar(s w) ebar(eta u y) e^{w/2} dy dw,
/// with closed-form y-integration and Gauss-Legendre quadrature in w.
GridOperator pi_tilde_rs(const ModelParams& params, const SchwartzAtilde& f, double r, double s,
                         const Grid& ugrid, int w_points = 24);

/// Closed-form kernel of the scaled-Fourier conjugate of pi_tilde_rs,
///   K(v, v') = int f(x, e^{-w} v' - v, r, w) ebar(s w) e[eta e^{-w} v' x]
///              e^{-w/2} dx dw.
/// Works at r = 0, where it gives the limit operator Q.
GridOperator q_rs_kernel(const ModelParams& params, const SchwartzAtilde& f, double r, double s,
                         const Grid& vgrid, int w_points = 24);

/// The r -> 0 limit kernel of the generic series (same integral with r = 0
/// and no eta phase); reducible, but an honest grid operator.
GridOperator op_T(const ModelParams& params, const SchwartzAtilde& f, double s, const Grid& ugrid,
                  int w_points = 24);

struct LimitOperators {
    GridOperator S;
    GridOperator S_tilde;
    GridOperator T;
    GridOperator T_tilde;
    GridOperator Q;
};

/// The limit operators of the dyadic representation sequences, each
/// materialized on grids compatible with `base` (must be periodic so the
/// Fourier conjugations are exactly unitary).
LimitOperators limit_operators(const ModelParams& params, const SchwartzAtilde& f, double s,
                               const Grid& base, int w_points = 24);

/// Plain discrete Fourier pair on a periodic grid: F maps the grid to its
/// DFT-dual grid; F_inv is its inverse (and adjoint).
std::pair<GridOperator, GridOperator> fourier_pair(const Grid& periodic);

/// eta-scaled Fourier pair: F_r xi(v) = int xi(u) ebar(eta u v) |eta|^{1/2} du.
std::pair<GridOperator, GridOperator> f_r_transform(const ModelParams& params, double r,
                                                    const Grid& periodic);

} // namespace qheis
