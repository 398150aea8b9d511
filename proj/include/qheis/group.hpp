#pragma once

#include <string>
#include <vector>

#include "qheis/params.hpp"

namespace qheis {

using VecN = std::vector<double>;

double dot(const VecN& a, const VecN& b);
VecN zeros(int n);

enum class GroupKind { H, Htilde, G, Gtilde, Double };

std::string to_string(GroupKind kind);

/// A point of one of the five groups, in the global exponential coordinates
/// (the groups are identified with their Lie algebras as vector spaces).
/// Slot usage by kind:
///   H       : x, y, z
///   Htilde  : x, y, z, w
///   G       : p, q, r
///   Gtilde  : p, q, r, s
///   Double  : all eight slots (Htilde part; Gtilde part)
/// Unused slots are kept at zero.
struct GroupElement {
    GroupKind kind = GroupKind::H;
    int n = 1;
    VecN x, y;
    double z = 0.0, w = 0.0;
    VecN p, q;
    double r = 0.0, s = 0.0;

    static GroupElement h(VecN x, VecN y, double z);
    static GroupElement htilde(VecN x, VecN y, double z, double w);
    static GroupElement g(VecN p, VecN q, double r);
    static GroupElement gtilde(VecN p, VecN q, double r, double s);
    static GroupElement double_of(const GroupElement& ht, const GroupElement& gt);
    static GroupElement identity(GroupKind kind, int n);

    // Convenience for n = 1.
    static GroupElement h1(double x, double y, double z);
    static GroupElement htilde1(double x, double y, double z, double w);
    static GroupElement g1(double p, double q, double r);
    static GroupElement gtilde1(double p, double q, double r, double s);
};

/// Largest coordinate magnitude; used for scale-aware comparisons.
double sup_norm(const GroupElement& a);
/// Largest coordinate difference between two elements of the same kind.
double sup_dist(const GroupElement& a, const GroupElement& b);

GroupElement mul(const ModelParams& params, const GroupElement& a, const GroupElement& b);
GroupElement inverse(const ModelParams& params, const GroupElement& a);
/// g h g^{-1}
GroupElement conjugate(const ModelParams& params, const GroupElement& g, const GroupElement& h);

/// Embeds an Htilde (Gtilde) element into the double group by zero-padding
/// the complementary slots.  H and G elements embed through Htilde/Gtilde
/// with w = 0 / s = 0.
GroupElement embed(const GroupElement& elem);

/// Splits a double-group element into its (Htilde, Gtilde) normal-form
/// factors; mul(embed(h), embed(g)) reproduces the input.
std::pair<GroupElement, GroupElement> factorize(const GroupElement& d);

} // namespace qheis
