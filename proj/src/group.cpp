#include "qheis/group.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace qheis {

double dot(const VecN& a, const VecN& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

VecN zeros(int n) { return VecN(static_cast<std::size_t>(n), 0.0); }

std::string to_string(GroupKind kind) {
    switch (kind) {
        case GroupKind::H: return "H";
        case GroupKind::Htilde: return "Htilde";
        case GroupKind::G: return "G";
        case GroupKind::Gtilde: return "Gtilde";
        case GroupKind::Double: return "Double";
    }
    return "?";
}

namespace {

int vec_dim(const VecN& v) { return static_cast<int>(v.size()); }

void require_dim(const VecN& v, int n, const char* what) {
    if (vec_dim(v) != n)
        throw std::invalid_argument(std::string("GroupElement: bad dimension for ") + what);
}

void require_same(const GroupElement& a, const GroupElement& b) {
    if (a.kind != b.kind || a.n != b.n)
        throw std::invalid_argument("group arithmetic requires identical kind and dimension");
}

VecN add(const VecN& a, const VecN& b) {
    VecN out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

VecN axpy(double c, const VecN& a, const VecN& b) { // c*a + b
    VecN out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i] + b[i];
    return out;
}

VecN scale(double c, const VecN& a) {
    VecN out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
    return out;
}

} // namespace

GroupElement GroupElement::h(VecN x, VecN y, double z) {
    GroupElement e;
    e.kind = GroupKind::H;
    e.n = vec_dim(x);
    require_dim(y, e.n, "y");
    e.x = std::move(x);
    e.y = std::move(y);
    e.z = z;
    e.p = zeros(e.n);
    e.q = zeros(e.n);
    return e;
}

GroupElement GroupElement::htilde(VecN x, VecN y, double z, double w) {
    GroupElement e = h(std::move(x), std::move(y), z);
    e.kind = GroupKind::Htilde;
    e.w = w;
    return e;
}

GroupElement GroupElement::g(VecN p, VecN q, double r) {
    GroupElement e;
    e.kind = GroupKind::G;
    e.n = vec_dim(p);
    require_dim(q, e.n, "q");
    e.p = std::move(p);
    e.q = std::move(q);
    e.r = r;
    e.x = zeros(e.n);
    e.y = zeros(e.n);
    return e;
}

GroupElement GroupElement::gtilde(VecN p, VecN q, double r, double s) {
    GroupElement e = g(std::move(p), std::move(q), r);
    e.kind = GroupKind::Gtilde;
    e.s = s;
    return e;
}

GroupElement GroupElement::double_of(const GroupElement& ht, const GroupElement& gt) {
    if (ht.kind != GroupKind::Htilde || gt.kind != GroupKind::Gtilde || ht.n != gt.n)
        throw std::invalid_argument("double_of expects an Htilde and a Gtilde element of equal n");
    GroupElement e;
    e.kind = GroupKind::Double;
    e.n = ht.n;
    e.x = ht.x;
    e.y = ht.y;
    e.z = ht.z;
    e.w = ht.w;
    e.p = gt.p;
    e.q = gt.q;
    e.r = gt.r;
    e.s = gt.s;
    return e;
}

GroupElement GroupElement::identity(GroupKind kind, int n) {
    GroupElement e;
    e.kind = kind;
    e.n = n;
    e.x = zeros(n);
    e.y = zeros(n);
    e.p = zeros(n);
    e.q = zeros(n);
    return e;
}

GroupElement GroupElement::h1(double x, double y, double z) { return h({x}, {y}, z); }
GroupElement GroupElement::htilde1(double x, double y, double z, double w) { return htilde({x}, {y}, z, w); }
GroupElement GroupElement::g1(double p, double q, double r) { return g({p}, {q}, r); }
GroupElement GroupElement::gtilde1(double p, double q, double r, double s) { return gtilde({p}, {q}, r, s); }

double sup_norm(const GroupElement& a) {
    double m = std::max({std::abs(a.z), std::abs(a.w), std::abs(a.r), std::abs(a.s)});
    for (int i = 0; i < a.n; ++i)
        m = std::max({m, std::abs(a.x[i]), std::abs(a.y[i]), std::abs(a.p[i]), std::abs(a.q[i])});
    return m;
}

double sup_dist(const GroupElement& a, const GroupElement& b) {
    require_same(a, b);
    double m = std::max({std::abs(a.z - b.z), std::abs(a.w - b.w),
                         std::abs(a.r - b.r), std::abs(a.s - b.s)});
    for (int i = 0; i < a.n; ++i)
        m = std::max({m, std::abs(a.x[i] - b.x[i]), std::abs(a.y[i] - b.y[i]),
                      std::abs(a.p[i] - b.p[i]), std::abs(a.q[i] - b.q[i])});
    return m;
}

GroupElement mul(const ModelParams& params, const GroupElement& a, const GroupElement& b) {
    require_same(a, b);
    const double lam = params.lambda;
    switch (a.kind) {
        case GroupKind::H: {
            return GroupElement::h(add(a.x, b.x), add(a.y, b.y), a.z + b.z + dot(a.x, b.y));
        }
        case GroupKind::Htilde: {
            const double ew = std::exp(a.w), emw = std::exp(-a.w);
            return GroupElement::htilde(axpy(ew, b.x, a.x), axpy(emw, b.y, a.y),
                                        a.z + b.z + emw * dot(a.x, b.y), a.w + b.w);
        }
        case GroupKind::G: {
            const double e = std::exp(lam * b.r);
            return GroupElement::g(axpy(e, a.p, b.p), axpy(e, a.q, b.q), a.r + b.r);
        }
        case GroupKind::Gtilde: {
            const double e = std::exp(lam * b.r);
            return GroupElement::gtilde(axpy(e, a.p, b.p), axpy(e, a.q, b.q), a.r + b.r, a.s + b.s);
        }
        case GroupKind::Double: {
            const double eta = eta_lambda(params, a.r);
            const double e_pw = std::exp(lam * a.r + a.w);
            const double e_mw = std::exp(lam * a.r - a.w);
            const double f_pw = std::exp(lam * b.r + b.w);
            const double f_mw = std::exp(lam * b.r - b.w);
            GroupElement out = GroupElement::identity(GroupKind::Double, a.n);
            out.x = axpy(e_pw, b.x, a.x);
            out.y = axpy(e_mw, b.y, a.y);
            out.z = a.z + b.z + e_mw * dot(a.x, b.y) - lam * dot(a.p, b.x) - lam * dot(a.q, b.y)
                    + lam * eta * dot(b.x, b.y);
            out.w = a.w + b.w;
            out.p = add(scale(f_pw, a.p), axpy(-f_pw * eta, b.y, b.p));
            out.q = add(scale(f_mw, a.q), axpy(f_mw * eta, b.x, b.q));
            out.r = a.r + b.r;
            out.s = a.s + b.s - dot(a.p, b.x) + dot(a.q, b.y) + eta * dot(b.x, b.y);
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

GroupElement inverse(const ModelParams& params, const GroupElement& a) {
    const double lam = params.lambda;
    switch (a.kind) {
        case GroupKind::H:
            return GroupElement::h(scale(-1.0, a.x), scale(-1.0, a.y), -a.z + dot(a.x, a.y));
        case GroupKind::Htilde:
            return GroupElement::htilde(scale(-std::exp(-a.w), a.x), scale(-std::exp(a.w), a.y),
                                        -a.z + dot(a.x, a.y), -a.w);
        case GroupKind::G: {
            const double e = std::exp(-lam * a.r);
            return GroupElement::g(scale(-e, a.p), scale(-e, a.q), -a.r);
        }
        case GroupKind::Gtilde: {
            const double e = std::exp(-lam * a.r);
            return GroupElement::gtilde(scale(-e, a.p), scale(-e, a.q), -a.r, -a.s);
        }
        case GroupKind::Double: {
            // (h;g)^{-1} = (0;g^{-1}) (h^{-1};0), re-expanded through the double law.
            auto [hpart, gpart] = factorize(a);
            return mul(params, embed(inverse(params, gpart)), embed(inverse(params, hpart)));
        }
    }
    throw std::logic_error("unreachable");
}

GroupElement conjugate(const ModelParams& params, const GroupElement& g, const GroupElement& h) {
    return mul(params, mul(params, g, h), inverse(params, g));
}

GroupElement embed(const GroupElement& elem) {
    switch (elem.kind) {
        case GroupKind::H:
            return embed(GroupElement::htilde(elem.x, elem.y, elem.z, 0.0));
        case GroupKind::G:
            return embed(GroupElement::gtilde(elem.p, elem.q, elem.r, 0.0));
        case GroupKind::Htilde:
            return GroupElement::double_of(elem, GroupElement::identity(GroupKind::Gtilde, elem.n));
        case GroupKind::Gtilde:
            return GroupElement::double_of(GroupElement::identity(GroupKind::Htilde, elem.n), elem);
        case GroupKind::Double:
            throw std::invalid_argument("embed: element is already in the double group");
    }
    throw std::logic_error("unreachable");
}

std::pair<GroupElement, GroupElement> factorize(const GroupElement& d) {
    if (d.kind != GroupKind::Double)
        throw std::invalid_argument("factorize expects a double-group element");
    return {GroupElement::htilde(d.x, d.y, d.z, d.w), GroupElement::gtilde(d.p, d.q, d.r, d.s)};
}

} // namespace qheis
