#include "qheis/rep_atilde.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace qheis {

namespace {

constexpr cplx kTwoPiI{0.0, 2.0 * std::numbers::pi};

cplx ebar(double t) { return std::exp(cplx(0.0, -2.0 * std::numbers::pi * t)); }

void require_n1(const SchwartzAtilde& f, const char* what) {
    if (f.n() != 1) throw std::invalid_argument(std::string(what) + ": grid operators are built at n = 1");
}

// Ratio of the largest kernel value on the boundary rows/cols to the overall
// peak; recorded on the operator so an undersized box is visible.
void record_edge_coverage(GridOperator& op) {
    double edge = 0.0, peak = 1e-300;
    const int nr = op.rows(), nc = op.cols();
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) {
            const double m = std::abs(op.at(i, j));
            peak = std::max(peak, m);
            if (i == 0 || j == 0 || i == nr - 1 || j == nc - 1) edge = std::max(edge, m);
        }
    op.set_coverage_defect(edge / peak);
}

/// Accumulates sum_w c(w) * expr_w(u, v) over a w-rule into a kernel matrix.
class WAccumulator {
public:
    WAccumulator(const Grid& row, const Grid& col) : op_(GridOperator::zero(row, col)) {}

    void add(const GaussianExpr& expr, cplx coeff) {
        const int nr = op_.rows(), nc = op_.cols();
        if (parallel_kernels_enabled()) {
#pragma omp parallel for schedule(static)
            for (int i = 0; i < nr; ++i) add_row(expr, coeff, i, nc);
        } else {
            for (int i = 0; i < nr; ++i) add_row(expr, coeff, i, nc);
        }
    }

    GridOperator take() { return std::move(op_); }

private:
    void add_row(const GaussianExpr& expr, cplx coeff, int i, int nc) {
        double pt[2] = {op_.row_grid().node(i), 0.0};
        for (int j = 0; j < nc; ++j) {
            pt[1] = op_.col_grid().node(j);
            op_.at(i, j) += coeff * expr.eval(std::span<const double>(pt, 2));
        }
    }

    GridOperator op_;
};

// K(u, v) accumulated over w for the generic series; r = 0 yields T.
GridOperator rs_kernel_any_r(const ModelParams& params, const SchwartzAtilde& f, double r,
                             double s, const Grid& ugrid, int w_points) {
    require_n1(f, "pi_tilde_rs");
    const double eta = eta_lambda(params, r);
    const QuadratureRule wr = f.w_rule(w_points);
    WAccumulator acc(ugrid, ugrid);
    for (std::size_t k = 0; k < wr.nodes.size(); ++k) {
        const double w = wr.nodes[k];
        GaussianExpr slice = f.xy_slice(params, r, w);
        if (slice.is_zero()) continue;
        // Joint (u, v, y); x = e^w v - u.
        CMat map = cmat_zero(2, 3);
        map[0][0] = cplx(-1.0);
        map[0][1] = cplx(std::exp(w));
        map[1][2] = cplx(1.0);
        GaussianExpr joint = slice.substituted(map, cvec_zero(2), 3);
        if (eta != 0.0) joint = joint.times_bilinear_exp(0, 2, -kTwoPiI * eta);
        const GaussianExpr kuv = joint.integrate_last(1);
        acc.add(kuv, wr.weights[k] * ebar(s * w) * std::exp(0.5 * w));
    }
    GridOperator out = acc.take();
    record_edge_coverage(out);
    return out;
}

} // namespace

cplx pi_tilde_s(const ModelParams& params, const SchwartzAtilde& f, double s) {
    const QuadratureRule wr = f.w_rule();
    cplx out(0.0);
    for (std::size_t k = 0; k < wr.nodes.size(); ++k) {
        const double w = wr.nodes[k];
        const GaussianExpr slice = f.xy_slice(params, 0.0, w);
        if (slice.is_zero()) continue;
        out += wr.weights[k] * ebar(s * w) * slice.integrate_all();
    }
    return out;
}

GridOperator pi_tilde_pq(const ModelParams& params, const SchwartzAtilde& f, double p, double q,
                         const Grid& dgrid) {
    require_n1(f, "pi_tilde_pq");
    const int N = dgrid.size();
    // The kernel depends on w = d' - d only through the slice; transform each
    // distinct difference once.
    std::map<long, GaussianExpr> fhat_by_diff;
    auto fhat_at = [&](long diff) -> const GaussianExpr& {
        auto it = fhat_by_diff.find(diff);
        if (it != fhat_by_diff.end()) return it->second;
        const double w = dgrid.wrap(diff * dgrid.spacing());
        GaussianExpr slice = f.xy_slice(params, 0.0, w);
        GaussianExpr fh = GaussianExpr::zero(2);
        if (!slice.is_zero()) {
            // (P, Q, x, y) joint, Fourier in (x, y).
            GaussianExpr joint = slice.promoted(4, {2, 3});
            joint = joint.times_bilinear_exp(0, 2, -kTwoPiI);
            joint = joint.times_bilinear_exp(1, 3, -kTwoPiI);
            fh = joint.integrate_last(2);
        }
        return fhat_by_diff.emplace(diff, std::move(fh)).first->second;
    };
    GridOperator op = GridOperator::zero(dgrid, dgrid);
    for (int i = 0; i < N; ++i) {
        const double d = dgrid.node(i);
        const double args[2] = {std::exp(d) * p, std::exp(-d) * q};
        for (int j = 0; j < N; ++j) {
            const GaussianExpr& fh = fhat_at(static_cast<long>(j) - i);
            op.at(i, j) = fh.is_zero() ? cplx(0.0) : fh.eval(std::span<const double>(args, 2));
        }
    }
    // The kernel is banded in d' - d; coverage is the band mass that would
    // wrap around the period (or fall off the box edge when non-periodic).
    double far = 0.0, peak = 1e-300;
    const double half = dgrid.periodic() ? 0.25 * dgrid.period()
                                         : 0.5 * (dgrid.nodes().back() - dgrid.nodes().front());
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            const double m = std::abs(op.at(i, j));
            peak = std::max(peak, m);
            if (std::abs(dgrid.wrap(dgrid.node(j) - dgrid.node(i))) >= half)
                far = std::max(far, m);
        }
    op.set_coverage_defect(far / peak);
    return op;
}

GridOperator pi_tilde_rs(const ModelParams& params, const SchwartzAtilde& f, double r, double s,
                         const Grid& ugrid, int w_points) {
    if (r == 0.0) throw std::invalid_argument("pi_tilde_rs: r must be nonzero");
    return rs_kernel_any_r(params, f, r, s, ugrid, w_points);
}

GridOperator op_T(const ModelParams& params, const SchwartzAtilde& f, double s, const Grid& ugrid,
                  int w_points) {
    return rs_kernel_any_r(params, f, 0.0, s, ugrid, w_points);
}

GridOperator q_rs_kernel(const ModelParams& params, const SchwartzAtilde& f, double r, double s,
                         const Grid& vgrid, int w_points) {
    require_n1(f, "q_rs_kernel");
    const double eta = eta_lambda(params, r);
    const QuadratureRule wr = f.w_rule(w_points);
    WAccumulator acc(vgrid, vgrid);
    for (std::size_t k = 0; k < wr.nodes.size(); ++k) {
        const double w = wr.nodes[k];
        GaussianExpr slice = f.xy_slice(params, r, w);
        if (slice.is_zero()) continue;
        // Joint (v, v', x); y = e^{-w} v' - v.
        const double emw = std::exp(-w);
        CMat map = cmat_zero(2, 3);
        map[0][2] = cplx(1.0);
        map[1][0] = cplx(-1.0);
        map[1][1] = cplx(emw);
        GaussianExpr joint = slice.substituted(map, cvec_zero(2), 3);
        if (eta != 0.0) joint = joint.times_bilinear_exp(1, 2, kTwoPiI * eta * emw);
        const GaussianExpr kvv = joint.integrate_last(1);
        acc.add(kvv, wr.weights[k] * ebar(s * w) * std::exp(-0.5 * w));
    }
    GridOperator out = acc.take();
    record_edge_coverage(out);
    return out;
}

std::pair<GridOperator, GridOperator> fourier_pair(const Grid& periodic) {
    if (!periodic.periodic()) throw std::invalid_argument("fourier_pair needs a periodic grid");
    const Grid dual = Grid::dft_dual(periodic);
    GridOperator fwd = GridOperator::from_fn(
        [](double sv, double dv) { return ebar(sv * dv); }, dual, periodic);
    GridOperator inv = GridOperator::from_fn(
        [](double dv, double sv) { return std::conj(ebar(sv * dv)); }, periodic, dual);
    return {std::move(fwd), std::move(inv)};
}

std::pair<GridOperator, GridOperator> f_r_transform(const ModelParams& params, double r,
                                                    const Grid& periodic) {
    if (r == 0.0) throw std::invalid_argument("f_r_transform: r must be nonzero");
    if (!periodic.periodic()) throw std::invalid_argument("f_r_transform needs a periodic grid");
    const double eta = eta_lambda(params, r);
    const double amp = std::sqrt(std::abs(eta));
    const Grid dual = Grid::scaled_dual(periodic, eta);
    GridOperator fwd = GridOperator::from_fn(
        [eta, amp](double v, double u) { return amp * ebar(eta * u * v); }, dual, periodic);
    GridOperator inv = GridOperator::from_fn(
        [eta, amp](double u, double v) { return amp * std::conj(ebar(eta * u * v)); }, periodic, dual);
    return {std::move(fwd), std::move(inv)};
}

LimitOperators limit_operators(const ModelParams& params, const SchwartzAtilde& f, double s,
                               const Grid& base, int w_points) {
    if (!base.periodic()) throw std::invalid_argument("limit_operators needs a periodic grid");
    LimitOperators out{
        pi_tilde_pq(params, f, 0.0, 0.0, base),
        GridOperator{},
        op_T(params, f, s, base, w_points),
        GridOperator{},
        q_rs_kernel(params, f, 0.0, s, base, w_points),
    };
    const auto [fwd, inv] = fourier_pair(base);
    out.S_tilde = fwd.compose(out.S).compose(inv);
    out.T_tilde = fwd.compose(out.T).compose(inv);
    return out;
}

} // namespace qheis
