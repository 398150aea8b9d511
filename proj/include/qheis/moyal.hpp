#pragma once

#include "qheis/orbit.hpp"
#include "qheis/rep_a.hpp"

namespace qheis {

/// Function in the analytic family S_c(O) on a classified orbit of G:
/// a closed-form expression in (p, q) on the 2n-dimensional orbits, a single
/// complex value on the point orbits.
struct OrbitFunction {
    Orbit orbit;
    GaussianExpr pq;      // used when orbit.dim > 0
    cplx point_value{0.0}; // used when orbit.dim == 0

    bool is_point() const { return orbit.dim == 0; }
};

/// Restriction of the partial Fourier transform of f to the orbit.
OrbitFunction orbit_function_from_schwartz(const ModelParams& params, const SchwartzA& f,
                                           const Orbit& orbit);

OrbitFunction orbit_function(const Orbit& orbit, GaussianExpr pq);

/// Quantization map: the kernel operator with symbol phi on a generic orbit.
GridOperator q_map(const ModelParams& params, const OrbitFunction& phi, const Grid& grid);
/// Point-orbit case: the 1-dimensional representation value.
cplx q_map_point(const OrbitFunction& phi);

/// L^2(O, dtheta) norm squared of phi.
double orbit_l2_norm_sq(const ModelParams& params, const OrbitFunction& phi);

/// Deformed product with deformation parameter hbar in (0, 1]:
///   (phi x psi)(a, b, r) = int phi(pt, b, r) psi(a, b + hbar eta xt, r)
///                              e[(pt - a) xt] dpt dxt,
/// the operator-composition product at hbar = 1; scaling the skew form by
/// hbar sends it to the pointwise product as hbar -> 0.
OrbitFunction moyal_product(const ModelParams& params, const OrbitFunction& phi,
                            const OrbitFunction& psi, double hbar = 1.0);

/// Involution psi* with q_map(psi*) = q_map(psi)^*.
OrbitFunction moyal_involution(const ModelParams& params, const OrbitFunction& psi);

/// Pointwise value of an orbit function at (p, q) (generic orbits, n = 1).
cplx orbit_function_value(const OrbitFunction& phi, double p, double q);

} // namespace qheis
