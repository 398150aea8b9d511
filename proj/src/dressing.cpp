#include "qheis/dressing.hpp"

#include <cmath>
#include <stdexcept>

namespace qheis {

namespace {

void require_kind(const GroupElement& e, GroupKind kind, const char* what) {
    if (e.kind != kind)
        throw std::invalid_argument(std::string(what) + " expects a " + to_string(kind) + " element");
}

} // namespace

double sup_norm(const TangentVector& t) {
    double m = std::max(std::abs(t.dr), std::abs(t.ds));
    for (double v : t.dp) m = std::max(m, std::abs(v));
    for (double v : t.dq) m = std::max(m, std::abs(v));
    return m;
}

GroupElement dressing_g(const ModelParams& params, const GroupElement& h, const GroupElement& mu) {
    require_kind(h, GroupKind::H, "dressing_g");
    require_kind(mu, GroupKind::G, "dressing_g");
    const double eta = eta_lambda(params, mu.r);
    VecN p(mu.p), q(mu.q);
    for (int i = 0; i < mu.n; ++i) {
        p[i] += eta * h.y[i];
        q[i] -= eta * h.x[i];
    }
    return GroupElement::g(std::move(p), std::move(q), mu.r);
}

GroupElement dressing_gt(const ModelParams& params, const GroupElement& h, const GroupElement& mu) {
    require_kind(h, GroupKind::Htilde, "dressing_gt");
    require_kind(mu, GroupKind::Gtilde, "dressing_gt");
    const double eta = eta_lambda(params, mu.r);
    const double ed = std::exp(h.w), emd = std::exp(-h.w);
    VecN p(mu.n), q(mu.n);
    for (int i = 0; i < mu.n; ++i) {
        p[i] = emd * mu.p[i] + eta * h.y[i];
        q[i] = ed * mu.q[i] - eta * h.x[i];
    }
    const double s = mu.s + emd * dot(mu.p, h.x) - ed * dot(mu.q, h.y) + eta * dot(h.x, h.y);
    return GroupElement::gtilde(std::move(p), std::move(q), mu.r, s);
}

GroupElement dressing_via_double(const ModelParams& params, const GroupElement& h,
                                 const GroupElement& mu) {
    require_kind(h, GroupKind::Htilde, "dressing_via_double");
    require_kind(mu, GroupKind::Gtilde, "dressing_via_double");
    const GroupElement prod = mul(params, embed(mu), embed(inverse(params, h)));
    return factorize(prod).second;
}

TangentVector infinitesimal_dressing(const ModelParams& params, const GroupElement& X,
                                     const GroupElement& mu) {
    require_kind(X, GroupKind::Htilde, "infinitesimal_dressing");
    require_kind(mu, GroupKind::Gtilde, "infinitesimal_dressing");
    const double eta = eta_lambda(params, mu.r);
    TangentVector t;
    t.dp.resize(mu.n);
    t.dq.resize(mu.n);
    for (int i = 0; i < mu.n; ++i) {
        t.dp[i] = -X.w * mu.p[i] + eta * X.y[i];
        t.dq[i] = X.w * mu.q[i] - eta * X.x[i];
    }
    t.dr = 0.0;
    t.ds = dot(mu.p, X.x) - dot(mu.q, X.y);
    return t;
}

double poisson_bracket(const ModelParams& params, const GroupElement& mu,
                       const GroupElement& dphi, const GroupElement& dpsi) {
    const double eta = eta_lambda(params, mu.r);
    if (mu.kind == GroupKind::G) {
        require_kind(dphi, GroupKind::H, "poisson_bracket on G");
        require_kind(dpsi, GroupKind::H, "poisson_bracket on G");
        return eta * (dot(dphi.x, dpsi.y) - dot(dpsi.x, dphi.y));
    }
    require_kind(mu, GroupKind::Gtilde, "poisson_bracket");
    require_kind(dphi, GroupKind::Htilde, "poisson_bracket on Gtilde");
    require_kind(dpsi, GroupKind::Htilde, "poisson_bracket on Gtilde");
    double acc = eta * (dot(dphi.x, dpsi.y) - dot(dpsi.x, dphi.y));
    for (int i = 0; i < mu.n; ++i) {
        acc += mu.p[i] * (dphi.w * dpsi.x[i] - dpsi.w * dphi.x[i]);
        acc += mu.q[i] * (dpsi.w * dphi.y[i] - dphi.w * dpsi.y[i]);
    }
    return acc;
}

double omega_form(const ModelParams& params, const GroupElement& mu, const GroupElement& X,
                  const GroupElement& Y) {
    return poisson_bracket(params, mu, X, Y);
}

GroupElement d_alpha(const GroupElement& h, const GroupElement& X) {
    if (h.kind != GroupKind::Htilde || X.kind != GroupKind::Htilde || h.n != X.n)
        throw std::invalid_argument("d_alpha expects Htilde elements of equal n");
    const double ed = std::exp(h.w), emd = std::exp(-h.w);
    VecN x(h.n), y(h.n);
    for (int i = 0; i < h.n; ++i) {
        x[i] = ed * X.x[i] - X.w * h.x[i];
        y[i] = emd * X.y[i] + X.w * h.y[i];
    }
    const double z = X.z + emd * dot(h.x, X.y) - ed * dot(X.x, h.y) + X.w * dot(h.x, h.y);
    return GroupElement::htilde(std::move(x), std::move(y), z, X.w);
}

} // namespace qheis
