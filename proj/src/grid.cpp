#include "qheis/grid.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>

#include "qheis/quadrature.hpp"

namespace qheis {

namespace {
std::atomic<bool> g_parallel{true};
}

void set_parallel_kernels(bool enabled) { g_parallel.store(enabled); }
bool parallel_kernels_enabled() { return g_parallel.load(); }

void GridSpec::validate() const {
    if (npoints < 8) throw std::invalid_argument("GridSpec: npoints must be >= 8");
    if (extent <= 0.0) throw std::invalid_argument("GridSpec: extent must be positive");
    if (dim != 1)
        throw std::invalid_argument("GridSpec: operator grids are built at desk scale (dim = 1)");
}

Grid Grid::from_spec(const GridSpec& spec) {
    spec.validate();
    if (spec.rule == GridSpec::Rule::GaussHermite) return gauss_hermite(spec.npoints, spec.extent / 4.0);
    return trapezoid(spec.npoints, spec.extent);
}

Grid Grid::trapezoid(int npoints, double extent) {
    if (npoints < 2) throw std::invalid_argument("Grid::trapezoid: npoints >= 2");
    Grid g;
    const double h = 2.0 * extent / (npoints - 1);
    g.nodes_.resize(npoints);
    g.weights_.assign(npoints, h);
    for (int i = 0; i < npoints; ++i) g.nodes_[i] = -extent + i * h;
    g.weights_.front() = 0.5 * h;
    g.weights_.back() = 0.5 * h;
    return g;
}

Grid Grid::periodic_uniform(int npoints, double extent) {
    if (npoints < 2) throw std::invalid_argument("Grid::periodic_uniform: npoints >= 2");
    Grid g;
    const double h = 2.0 * extent / npoints;
    g.nodes_.resize(npoints);
    g.weights_.assign(npoints, h);
    for (int i = 0; i < npoints; ++i) g.nodes_[i] = -extent + i * h;
    g.periodic_ = true;
    g.period_ = 2.0 * extent;
    return g;
}

Grid Grid::gauss_hermite(int npoints, double scale) {
    const QuadratureRule rule = qheis::gauss_hermite(npoints);
    Grid g;
    g.nodes_.resize(rule.nodes.size());
    g.weights_.resize(rule.nodes.size());
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        g.nodes_[i] = scale * rule.nodes[i];
        g.weights_[i] = scale * rule.weights[i];
    }
    return g;
}

Grid Grid::dft_dual(const Grid& primal) {
    if (!primal.periodic_) throw std::invalid_argument("dft_dual needs a periodic grid");
    const int n = primal.size();
    const double h = primal.spacing();
    Grid g;
    g.nodes_.resize(n);
    g.weights_.assign(n, 1.0 / (n * h));
    for (int i = 0; i < n; ++i) g.nodes_[i] = (i - n / 2) / (n * h);
    g.periodic_ = true;
    g.period_ = 1.0 / h;
    return g;
}

Grid Grid::scaled_dual(const Grid& primal, double eta) {
    if (eta == 0.0) throw std::invalid_argument("scaled_dual: eta must be nonzero");
    if (!primal.periodic_) throw std::invalid_argument("scaled_dual needs a periodic grid");
    const int n = primal.size();
    const double h = primal.spacing();
    const double hv = 1.0 / (n * h * std::abs(eta));
    Grid g;
    g.nodes_.resize(n);
    g.weights_.assign(n, hv);
    for (int i = 0; i < n; ++i) g.nodes_[i] = (i - n / 2) * hv;
    g.periodic_ = true;
    g.period_ = n * hv;
    return g;
}

double Grid::spacing() const {
    if (size() < 2) throw std::logic_error("Grid::spacing: too few nodes");
    return nodes_[1] - nodes_[0];
}

double Grid::wrap(double t) const {
    if (!periodic_) return t;
    double u = std::fmod(t + 0.5 * period_, period_);
    if (u < 0.0) u += period_;
    return u - 0.5 * period_;
}

bool Grid::same_nodes(const Grid& other, double tol) const {
    if (size() != other.size()) return false;
    for (int i = 0; i < size(); ++i)
        if (std::abs(node(i) - other.node(i)) > tol) return false;
    return true;
}

GridOperator::GridOperator(Grid row, Grid col) : row_(std::move(row)), col_(std::move(col)) {
    k_.assign(static_cast<std::size_t>(row_.size()) * col_.size(), cplx(0.0));
}

GridOperator GridOperator::zero(const Grid& row, const Grid& col) { return GridOperator(row, col); }

namespace detail {

void sample_expr_serial(const GaussianExpr& kernel, const Grid& row, const Grid& col,
                        std::vector<cplx>& out) {
    const int nr = row.size(), nc = col.size();
    for (int i = 0; i < nr; ++i) {
        double pt[2] = {row.node(i), 0.0};
        for (int j = 0; j < nc; ++j) {
            pt[1] = col.node(j);
            out[static_cast<std::size_t>(i) * nc + j] = kernel.eval(std::span<const double>(pt, 2));
        }
    }
}

void sample_expr_parallel(const GaussianExpr& kernel, const Grid& row, const Grid& col,
                          std::vector<cplx>& out) {
    const int nr = row.size(), nc = col.size();
#pragma omp parallel for schedule(static)
    for (int i = 0; i < nr; ++i) {
        double pt[2] = {row.node(i), 0.0};
        for (int j = 0; j < nc; ++j) {
            pt[1] = col.node(j);
            out[static_cast<std::size_t>(i) * nc + j] = kernel.eval(std::span<const double>(pt, 2));
        }
    }
}

void compose_serial(const GridOperator& a, const GridOperator& b, std::vector<cplx>& out) {
    const int nr = a.rows(), nm = a.cols(), nc = b.cols();
    const auto& w = a.col_grid().weights();
    for (int i = 0; i < nr; ++i) {
        for (int k = 0; k < nc; ++k) {
            cplx acc(0.0);
            for (int j = 0; j < nm; ++j) acc += a.at(i, j) * w[static_cast<std::size_t>(j)] * b.at(j, k);
            out[static_cast<std::size_t>(i) * nc + k] = acc;
        }
    }
}

void compose_parallel(const GridOperator& a, const GridOperator& b, std::vector<cplx>& out) {
    const int nr = a.rows(), nm = a.cols(), nc = b.cols();
    const auto& w = a.col_grid().weights();
#pragma omp parallel for schedule(static)
    for (int i = 0; i < nr; ++i) {
        for (int k = 0; k < nc; ++k) {
            cplx acc(0.0);
            for (int j = 0; j < nm; ++j) acc += a.at(i, j) * w[static_cast<std::size_t>(j)] * b.at(j, k);
            out[static_cast<std::size_t>(i) * nc + k] = acc;
        }
    }
}

} // namespace detail

GridOperator GridOperator::from_expr(const GaussianExpr& kernel, const Grid& row, const Grid& col) {
    if (kernel.nvars() != 2) throw std::invalid_argument("from_expr: kernel must have 2 variables");
    GridOperator op(row, col);
    if (parallel_kernels_enabled()) detail::sample_expr_parallel(kernel, row, col, op.k_);
    else detail::sample_expr_serial(kernel, row, col, op.k_);
    return op;
}

GridOperator GridOperator::from_fn(const std::function<cplx(double, double)>& kernel,
                                   const Grid& row, const Grid& col) {
    GridOperator op(row, col);
    for (int i = 0; i < op.rows(); ++i)
        for (int j = 0; j < op.cols(); ++j) op.at(i, j) = kernel(row.node(i), col.node(j));
    return op;
}

GridOperator GridOperator::compose(const GridOperator& other) const {
    if (!col_.same_nodes(other.row_))
        throw std::invalid_argument("compose: inner grids do not match");
    GridOperator out(row_, other.col_);
    if (parallel_kernels_enabled()) detail::compose_parallel(*this, other, out.k_);
    else detail::compose_serial(*this, other, out.k_);
    return out;
}

GridOperator GridOperator::adjoint() const {
    GridOperator out(col_, row_);
    for (int i = 0; i < out.rows(); ++i)
        for (int j = 0; j < out.cols(); ++j) out.at(i, j) = std::conj(at(j, i));
    return out;
}

GridOperator GridOperator::operator+(const GridOperator& other) const {
    if (!row_.same_nodes(other.row_) || !col_.same_nodes(other.col_))
        throw std::invalid_argument("operator+: grids do not match");
    GridOperator out = *this;
    for (std::size_t i = 0; i < k_.size(); ++i) out.k_[i] += other.k_[i];
    return out;
}

GridOperator GridOperator::operator-(const GridOperator& other) const {
    if (!row_.same_nodes(other.row_) || !col_.same_nodes(other.col_))
        throw std::invalid_argument("operator-: grids do not match");
    GridOperator out = *this;
    for (std::size_t i = 0; i < k_.size(); ++i) out.k_[i] -= other.k_[i];
    return out;
}

GridOperator GridOperator::scaled(cplx c) const {
    GridOperator out = *this;
    for (auto& v : out.k_) v *= c;
    return out;
}

std::vector<cplx> GridOperator::apply(const std::vector<cplx>& xi) const {
    if (static_cast<int>(xi.size()) != cols()) throw std::invalid_argument("apply: bad vector size");
    std::vector<cplx> out(static_cast<std::size_t>(rows()), cplx(0.0));
    for (int i = 0; i < rows(); ++i) {
        cplx acc(0.0);
        for (int j = 0; j < cols(); ++j) acc += at(i, j) * col_.weight(j) * xi[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

cplx GridOperator::trace() const {
    if (!row_.same_nodes(col_)) throw std::invalid_argument("trace: operator is not square");
    cplx acc(0.0);
    for (int i = 0; i < rows(); ++i) acc += row_.weight(i) * at(i, i);
    return acc;
}

double GridOperator::hs_norm_sq() const {
    double acc = 0.0;
    for (int i = 0; i < rows(); ++i) {
        double rowacc = 0.0;
        for (int j = 0; j < cols(); ++j) rowacc += col_.weight(j) * std::norm(at(i, j));
        acc += row_.weight(i) * rowacc;
    }
    return acc;
}

double GridOperator::hs_norm() const { return std::sqrt(hs_norm_sq()); }

std::pair<double, double> GridOperator::diagonal_split() const {
    if (rows() != cols()) throw std::invalid_argument("diagonal_split: operator is not square");
    double on = 0.0, off = 0.0;
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < cols(); ++j) {
            const double m = row_.weight(i) * col_.weight(j) * std::norm(at(i, j));
            (i == j ? on : off) += m;
        }
    return {on, off};
}

double hs_distance(const GridOperator& a, const GridOperator& b) { return (a - b).hs_norm(); }

double hs_relative_error(const GridOperator& got, const GridOperator& want) {
    const double denom = want.hs_norm();
    if (denom == 0.0) return got.hs_norm();
    return hs_distance(got, want) / denom;
}

} // namespace qheis
