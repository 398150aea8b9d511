#pragma once

#include "qheis/gaussian_expr.hpp"
#include "qheis/orbit.hpp"

namespace qheis {

/// Symplectic Fourier transform attached to a positive-dimensional orbit.
/// V = h-tilde / r_mu carries the self-dual measure dm = |det B|^{1/2} dX,
/// the orbit (regarded as the dual space of V in the dual basis) carries
/// dtheta = |det B|^{-1/2} dl, and
///   (F f)(l)       = int f(X) ebar<l, X> dm(X),
///   (F^{-1} g)(X)  = int g(l) e<l, X> dtheta(l).
class SymplecticFourier {
public:
    SymplecticFourier(const ModelParams& params, const Orbit& orbit);

    int dim() const { return k_; }
    double det_b() const { return det_b_; }
    double dm_density() const;
    double dtheta_density() const;

    GaussianExpr forward(const GaussianExpr& f) const;
    GaussianExpr inverse(const GaussianExpr& g) const;

    /// int |f|^2 dm over V.
    double l2_norm_sq_v(const GaussianExpr& f) const;
    /// int |g|^2 dtheta over the orbit.
    double l2_norm_sq_orbit(const GaussianExpr& g) const;

private:
    GaussianExpr transform(const GaussianExpr& f, int sign, double density) const;

    int k_;
    double det_b_;
};

/// Grid-sampled route for tabulated data (k = 2): tensor trapezoid
/// quadrature of the defining integral on [-L, L]^2.  `tail_report` gets an
/// estimate of the relative mass of f on the truncation boundary, so a
/// too-small box is visible to the caller.
std::vector<cplx> sympl_fourier_grid(const SymplecticFourier& sf,
                                     const std::vector<cplx>& samples, int npoints, double extent,
                                     const std::vector<std::pair<double, double>>& out_points,
                                     double* tail_report = nullptr);

} // namespace qheis
