#include "qheis/schwartz.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qheis {

Interval intersect(const Interval& a, const Interval& b) {
    return Interval{std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

cplx SchwartzA::value(const ModelParams& params, const std::vector<double>& x,
                      const std::vector<double>& y, double r) const {
    std::vector<double> v;
    v.reserve(x.size() + y.size());
    v.insert(v.end(), x.begin(), x.end());
    v.insert(v.end(), y.begin(), y.end());
    return xy_slice(params, r).eval(v);
}

SchwartzALeaf::SchwartzALeaf(GaussianExpr xy, Bump chi, int n)
    : xy_(std::move(xy)), chi_(chi), n_(n) {
    if (xy_.nvars() != 2 * n) throw std::invalid_argument("SchwartzALeaf: expression must have 2n variables");
}

GaussianExpr SchwartzALeaf::xy_slice(const ModelParams&, double r) const {
    const double c = chi_(r);
    if (c == 0.0) return GaussianExpr::zero(xy_.nvars());
    return xy_.scaled(c);
}

namespace {

class SchwartzSum final : public SchwartzA {
public:
    explicit SchwartzSum(std::vector<std::pair<cplx, SchwartzAPtr>> parts)
        : parts_(std::move(parts)) {
        if (parts_.empty()) throw std::invalid_argument("schwartz_sum: empty");
    }
    int n() const override { return parts_.front().second->n(); }
    GaussianExpr xy_slice(const ModelParams& params, double r) const override {
        GaussianExpr acc = parts_.front().second->xy_slice(params, r).scaled(parts_.front().first);
        for (std::size_t i = 1; i < parts_.size(); ++i)
            acc = acc + parts_[i].second->xy_slice(params, r).scaled(parts_[i].first);
        return acc;
    }
    Interval r_support() const override {
        Interval u = parts_.front().second->r_support();
        for (std::size_t i = 1; i < parts_.size(); ++i) {
            const Interval s = parts_[i].second->r_support();
            u.lo = std::min(u.lo, s.lo);
            u.hi = std::max(u.hi, s.hi);
        }
        return u;
    }

private:
    std::vector<std::pair<cplx, SchwartzAPtr>> parts_;
};

} // namespace

SchwartzAPtr schwartz_sum(std::vector<std::pair<cplx, SchwartzAPtr>> parts) {
    return std::make_shared<SchwartzSum>(std::move(parts));
}

Bump default_chi() { return Bump(-2.0, -1.25, 1.25, 2.0); }
Bump offcenter_chi() { return Bump(0.4, 0.75, 1.5, 2.1); }
Bump default_rho() { return Bump(-1.75, -1.0, 1.0, 1.75); }
Bump narrow_rho() { return Bump(-0.75, -0.4, 0.4, 0.75); }

GaussianExpr gauss_poly_expr(int nvars, const std::vector<double>& widths,
                             const std::vector<int>& powers, cplx coeff,
                             const std::vector<double>& phase) {
    if (static_cast<int>(widths.size()) != nvars || static_cast<int>(powers.size()) != nvars)
        throw std::invalid_argument("gauss_poly_expr: bad widths/powers size");
    CMat quad = cmat_zero(nvars, nvars);
    CVec lin = cvec_zero(nvars);
    for (int i = 0; i < nvars; ++i) quad[i][i] = widths[static_cast<std::size_t>(i)];
    if (!phase.empty()) {
        if (static_cast<int>(phase.size()) != nvars)
            throw std::invalid_argument("gauss_poly_expr: bad phase size");
        for (int i = 0; i < nvars; ++i) lin[i] = cplx(0.0, 2.0 * std::numbers::pi * phase[static_cast<std::size_t>(i)]);
    }
    MultiPoly poly = MultiPoly::constant(nvars, coeff);
    for (int i = 0; i < nvars; ++i)
        for (int k = 0; k < powers[static_cast<std::size_t>(i)]; ++k)
            poly = poly * MultiPoly::variable(nvars, i);
    return GaussianExpr::term(std::move(poly), quad, lin);
}

GaussianExpr random_gauss_poly(std::mt19937_64& rng, int nvars, int max_degree) {
    std::uniform_real_distribution<double> width(0.7 * std::numbers::pi,
                                                 1.3 * std::numbers::pi);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::vector<double> widths, phase;
    std::vector<int> powers(static_cast<std::size_t>(nvars), 0);
    int budget = max_degree;
    for (int i = 0; i < nvars; ++i) {
        widths.push_back(width(rng));
        phase.push_back(0.3 * unit(rng));
        const int d = std::min(budget, deg(rng));
        powers[static_cast<std::size_t>(i)] = d;
        budget -= d;
    }
    const cplx coeff(0.25 + 0.75 * std::abs(unit(rng)), 0.5 * unit(rng));
    return gauss_poly_expr(nvars, widths, powers, coeff, phase);
}

SchwartzAPtr gaussian_schwartz_a(int n, Bump chi) {
    const double pi = std::numbers::pi;
    std::vector<double> widths(static_cast<std::size_t>(2 * n), pi);
    std::vector<int> powers(static_cast<std::size_t>(2 * n), 0);
    return std::make_shared<SchwartzALeaf>(gauss_poly_expr(2 * n, widths, powers, cplx(1.0)), chi, n);
}

SchwartzAPtr random_schwartz_a(std::mt19937_64& rng, int n, Bump chi) {
    return std::make_shared<SchwartzALeaf>(random_gauss_poly(rng, 2 * n), chi, n);
}

SchwartzAtilde::SchwartzAtilde(std::vector<GaussianExpr> terms, Bump chi, Bump rho, int n)
    : terms_(std::move(terms)), chi_(chi), rho_(rho), n_(n) {
    for (const auto& t : terms_)
        if (t.nvars() != 2 * n)
            throw std::invalid_argument("SchwartzAtilde: expressions must have 2n variables");
}

GaussianExpr SchwartzAtilde::xy_slice(const ModelParams&, double r, double w) const {
    const double c = chi_(r) * rho_(w);
    GaussianExpr acc = GaussianExpr::zero(2 * n_);
    if (c == 0.0) return acc;
    for (const auto& t : terms_) acc = acc + t.scaled(c);
    return acc;
}

QuadratureRule SchwartzAtilde::w_rule(int points_per_panel) const {
    return bump_rule(rho_, points_per_panel, 2);
}

cplx SchwartzAtilde::value(const ModelParams& params, const std::vector<double>& x,
                           const std::vector<double>& y, double r, double w) const {
    std::vector<double> v;
    v.reserve(x.size() + y.size());
    v.insert(v.end(), x.begin(), x.end());
    v.insert(v.end(), y.begin(), y.end());
    return xy_slice(params, r, w).eval(v);
}

SchwartzAtilde gaussian_schwartz_atilde(int n) {
    const double pi = std::numbers::pi;
    std::vector<double> widths(static_cast<std::size_t>(2 * n), pi);
    std::vector<int> powers(static_cast<std::size_t>(2 * n), 0);
    return SchwartzAtilde({gauss_poly_expr(2 * n, widths, powers, cplx(1.0))}, default_chi(),
                          default_rho(), n);
}

SchwartzAtilde random_schwartz_atilde(std::mt19937_64& rng, int n) {
    return SchwartzAtilde({random_gauss_poly(rng, 2 * n)}, default_chi(), default_rho(), n);
}

} // namespace qheis
