#include "qheis/rep_a.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qheis {

namespace {
constexpr cplx kTwoPiI{0.0, 2.0 * std::numbers::pi};
}

GaussianExpr partial_fourier_slice(const ModelParams& params, const SchwartzA& f, double r) {
    const int n = f.n();
    GaussianExpr slice = f.xy_slice(params, r);
    if (slice.is_zero()) return GaussianExpr::zero(2 * n);
    // Joint variables (p, q, x, y); the slice occupies (x, y).
    std::vector<int> shift_map(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < 2 * n; ++i) shift_map[static_cast<std::size_t>(i)] = 2 * n + i;
    GaussianExpr joint = slice.promoted(4 * n, shift_map);
    for (int i = 0; i < n; ++i) {
        joint = joint.times_bilinear_exp(i, 2 * n + i, -kTwoPiI);         // ebar(p.x)
        joint = joint.times_bilinear_exp(n + i, 3 * n + i, -kTwoPiI);     // ebar(q.y)
    }
    return joint.integrate_last(2 * n);
}

cplx pi_pq(const ModelParams& params, const SchwartzA& f, const std::vector<double>& p,
           const std::vector<double>& q) {
    const GaussianExpr fhat = partial_fourier_slice(params, f, 0.0);
    std::vector<double> v;
    v.insert(v.end(), p.begin(), p.end());
    v.insert(v.end(), q.begin(), q.end());
    return fhat.eval(v);
}

GridOperator kernel_from_orbit_symbol(const ModelParams& params, const GaussianExpr& phi_pq,
                                      double r, const Grid& grid) {
    if (phi_pq.nvars() != 2)
        throw std::invalid_argument("kernel_from_orbit_symbol: desk scale n = 1 expected");
    const double eta = eta_lambda(params, r);
    // Joint variables (u, xt, pt); substitute p = pt, q = eta u into phi.
    CMat map = cmat_zero(2, 3);
    map[0][2] = cplx(1.0);
    map[1][0] = cplx(eta);
    GaussianExpr joint = phi_pq.substituted(map, cvec_zero(2), 3);
    joint = joint.times_bilinear_exp(2, 1, kTwoPiI);   // e(pt xt)
    joint = joint.times_bilinear_exp(2, 0, -kTwoPiI);  // ebar(pt u)
    const GaussianExpr kernel = joint.integrate_last(1);
    return GridOperator::from_expr(kernel, grid, grid);
}

GridOperator pi_r(const ModelParams& params, const SchwartzA& f, double r, const Grid& grid) {
    if (r == 0.0) throw std::invalid_argument("pi_r: r must be nonzero");
    if (f.n() != 1) throw std::invalid_argument("pi_r: grid operators are built at n = 1");
    const GaussianExpr fhat = partial_fourier_slice(params, f, r);
    GridOperator op = kernel_from_orbit_symbol(params, fhat, r, grid);
    const double closed = pi_r_hs_sq_closed(params, f, r);
    if (closed > 0.0) op.set_coverage_defect(std::abs(op.hs_norm_sq() - closed) / closed);
    return op;
}

GridOperator pi_r_direct(const ModelParams& params, const SchwartzA& f, double r, const Grid& grid) {
    if (r == 0.0) throw std::invalid_argument("pi_r_direct: r must be nonzero");
    if (f.n() != 1) throw std::invalid_argument("pi_r_direct: grid operators are built at n = 1");
    const double eta = eta_lambda(params, r);
    const GaussianExpr slice = f.xy_slice(params, r);
    // Joint variables (u, v, y); x = v - u.
    CMat map = cmat_zero(2, 3);
    map[0][0] = cplx(-1.0);
    map[0][1] = cplx(1.0);
    map[1][2] = cplx(1.0);
    GaussianExpr joint = slice.substituted(map, cvec_zero(2), 3);
    joint = joint.times_bilinear_exp(0, 2, -kTwoPiI * eta); // ebar(eta u y)
    const GaussianExpr kernel = joint.integrate_last(1);
    return GridOperator::from_expr(kernel, grid, grid);
}

cplx pi_r_trace_closed(const ModelParams& params, const SchwartzA& f, double r) {
    if (r == 0.0) throw std::invalid_argument("pi_r_trace_closed: r must be nonzero");
    const double eta = eta_lambda(params, r);
    const GaussianExpr fhat = partial_fourier_slice(params, f, r);
    return fhat.integrate_all() / std::pow(std::abs(eta), f.n());
}

double pi_r_hs_sq_closed(const ModelParams& params, const SchwartzA& f, double r) {
    if (r == 0.0) throw std::invalid_argument("pi_r_hs_sq_closed: r must be nonzero");
    const double eta = eta_lambda(params, r);
    const GaussianExpr fhat = partial_fourier_slice(params, f, r);
    const cplx val = (fhat * fhat.conjugated()).integrate_all();
    return val.real() / std::pow(std::abs(eta), f.n());
}

double PairedValues::relative() const {
    const double scale = std::max({1e-300, std::abs(lhs), std::abs(rhs)});
    return std::abs(lhs - rhs) / scale;
}

double PairedComplex::relative() const {
    const double scale = std::max({1e-300, std::abs(lhs), std::abs(rhs)});
    return std::abs(lhs - rhs) / scale;
}

PairedComplex trace_formula_check(const ModelParams& params, const SchwartzA& f, double r,
                                  const Grid& grid) {
    const GridOperator op = pi_r(params, f, r, grid);
    return PairedComplex{op.trace(), pi_r_trace_closed(params, f, r)};
}

PairedValues hs_norm_check(const ModelParams& params, const SchwartzA& f, double r,
                           const Grid& grid) {
    const GridOperator op = pi_r(params, f, r, grid);
    return PairedValues{op.hs_norm_sq(), pi_r_hs_sq_closed(params, f, r)};
}

} // namespace qheis
