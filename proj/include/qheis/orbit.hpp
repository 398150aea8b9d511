#pragma once

#include <vector>

#include "qheis/dressing.hpp"
#include "qheis/group.hpp"

namespace qheis {

enum class OrbitKind { G_point, G_generic, Gt_point, Gt_2d, Gt_generic };

std::string to_string(OrbitKind kind);

/// A classified dressing orbit.  `params_*` hold the invariants of the kind:
///   G_point    : (pq_p, pq_q) = the fixed point (p, q, 0)
///   G_generic  : r
///   Gt_point   : s
///   Gt_2d      : canonical projective pair (pq_p, pq_q), r = s = 0
///   Gt_generic : r and c = s + p.q / eta(r), constant along the orbit
struct Orbit {
    OrbitKind kind;
    int n = 1;
    VecN pq_p, pq_q;
    double r = 0.0;
    double s = 0.0;
    double c = 0.0;
    GroupElement base_point;
    int dim = 0;
};

/// Classifies the orbit through a G or Gtilde element.  Zero tests are exact
/// unless a nonzero tolerance is passed (CLI convenience).
Orbit classify_orbit(const ModelParams& params, const GroupElement& mu, double zero_tol = 0.0);

/// Kind and invariant parameters agree to relative tolerance.
bool same_orbit(const Orbit& a, const Orbit& b, double rel_tol = 1e-12);

/// Basis of the stabilizer Lie algebra r_mu inside h-tilde (for Gtilde mu)
/// or h (for G mu); vectors are returned as Htilde / H elements.
std::vector<GroupElement> stabilizer_basis(const ModelParams& params, const GroupElement& mu);

/// Coordinate directions (indices into (x_1..x_n, y_1..y_n, z, w)) that
/// complement the stabilizer; they represent a basis of V = h-tilde / r_mu.
std::vector<int> complement_coordinates(const ModelParams& params, const GroupElement& mu);

/// Coordinate unit vector of the ambient Lie algebra of mu's dual group.
GroupElement lie_coordinate_vector(GroupKind kind, int n, int index);

/// The skew matrix B^mu over the complement-coordinate basis of V.
/// Throws if it comes out degenerate on a positive-dimensional orbit.
std::vector<std::vector<double>> b_matrix(const ModelParams& params, const GroupElement& mu);

double det_small(const std::vector<std::vector<double>>& m);

struct CanonicalMeasures {
    double dm_density;     // |det B|^{1/2}, relative to Lebesgue on V
    double dtheta_density; // |det B|^{-1/2}, relative to Lebesgue on the orbit
};

CanonicalMeasures canonical_measures(const ModelParams& params, const Orbit& orbit);

/// Points tracing the orbit through mu in the (p_1, q_1) plane; used for the
/// CSV export of the 2-dimensional Gtilde orbits and the point orbits.
std::vector<std::pair<double, double>> orbit_trace(const ModelParams& params,
                                                   const GroupElement& mu, int samples,
                                                   double zero_tol = 0.0);

} // namespace qheis
