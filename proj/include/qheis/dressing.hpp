#pragma once

#include "qheis/group.hpp"

namespace qheis {

/// Image of an Htilde Lie-algebra vector under the infinitesimal dressing
/// action at mu, expressed in Gtilde coordinates.  The r direction is always
/// fixed by dressing, so dr stays 0.
struct TangentVector {
    VecN dp, dq;
    double dr = 0.0;
    double ds = 0.0;
};

double sup_norm(const TangentVector& t);

/// Left dressing action of H on G in closed form:
/// (a,b,c) . (p,q,r) = (p + eta b, q - eta a, r).
GroupElement dressing_g(const ModelParams& params, const GroupElement& h, const GroupElement& mu);

/// Left dressing action of Htilde on Gtilde in closed form.
GroupElement dressing_gt(const ModelParams& params, const GroupElement& h, const GroupElement& mu);

/// Same action computed by factorizing mu . h^{-1} in the double group and
/// reading off the Gtilde part.  Must agree with dressing_gt.
GroupElement dressing_via_double(const ModelParams& params, const GroupElement& h,
                                 const GroupElement& mu);

/// d/dt|_0 of the dressing flow of tX at mu, X an Htilde vector (a,b,c,d).
TangentVector infinitesimal_dressing(const ModelParams& params, const GroupElement& X,
                                     const GroupElement& mu);

/// Poisson bracket of two linear functionals at mu.  The covectors dphi and
/// dpsi are given as H (for G) or Htilde (for Gtilde) coordinate vectors.
double poisson_bracket(const ModelParams& params, const GroupElement& mu,
                       const GroupElement& dphi, const GroupElement& dpsi);

/// The skew form omega^mu evaluated on the dressing images of X and Y; same
/// expression as the Gtilde Poisson bracket read at mu.
double omega_form(const ModelParams& params, const GroupElement& mu, const GroupElement& X,
                  const GroupElement& Y);

/// Differential at the identity of the inner automorphism alpha_h on Htilde.
GroupElement d_alpha(const GroupElement& h, const GroupElement& X);

} // namespace qheis
