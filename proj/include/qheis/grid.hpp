#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "qheis/gaussian_expr.hpp"

namespace qheis {

/// Global switch between the OpenMP kernels and the serial reference
/// implementations.  Both paths accumulate in the same order, so results are
/// bit-identical; the tests assert exactly that.
void set_parallel_kernels(bool enabled);
bool parallel_kernels_enabled();

struct GridSpec {
    double extent = 6.0;
    int npoints = 128;
    enum class Rule { Trapezoid, GaussHermite } rule = Rule::Trapezoid;
    int dim = 1;

    void validate() const;
};

/// 1-D quadrature grid on the line.  Operator kernels are sampled on pairs
/// of these; weights turn kernel matrices into integral operators.
class Grid {
public:
    Grid() = default;

    static Grid from_spec(const GridSpec& spec);
    /// Uniform nodes on [-L, L] with trapezoid weights.
    static Grid trapezoid(int npoints, double extent);
    /// Uniform nodes -L + k (2L/N), rectangle weight 2L/N; used where a
    /// discrete Fourier conjugation must be exactly unitary.
    static Grid periodic_uniform(int npoints, double extent);
    static Grid gauss_hermite(int npoints, double scale = 1.0);
    /// Frequency grid matched to a periodic grid: nodes j / (N h); the
    /// discrete Fourier map between the pair is unitary to roundoff.
    static Grid dft_dual(const Grid& primal);
    /// Frequency grid for the eta-scaled Fourier map on a periodic grid.
    static Grid scaled_dual(const Grid& primal, double eta);

    int size() const { return static_cast<int>(nodes_.size()); }
    double node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
    double weight(int i) const { return weights_[static_cast<std::size_t>(i)]; }
    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }
    bool periodic() const { return periodic_; }
    double period() const { return period_; }
    double spacing() const;
    /// Wraps t into the fundamental window of a periodic grid.
    double wrap(double t) const;
    bool same_nodes(const Grid& other, double tol = 0.0) const;

private:
    std::vector<double> nodes_, weights_;
    bool periodic_ = false;
    double period_ = 0.0;
};

/// Discretized integral operator: kernel values on (row, col) node pairs.
/// (A xi)(u_i) = sum_j K[i][j] w_j xi(v_j).
class GridOperator {
public:
    GridOperator() = default;
    GridOperator(Grid row, Grid col);

    static GridOperator zero(const Grid& row, const Grid& col);
    /// Samples a closed-form kernel expression in the variables (u, v).
    static GridOperator from_expr(const GaussianExpr& kernel, const Grid& row, const Grid& col);
    static GridOperator from_fn(const std::function<cplx(double, double)>& kernel, const Grid& row,
                                const Grid& col);

    int rows() const { return row_.size(); }
    int cols() const { return col_.size(); }
    const Grid& row_grid() const { return row_; }
    const Grid& col_grid() const { return col_; }
    cplx at(int i, int j) const { return k_[static_cast<std::size_t>(i) * cols() + j]; }
    cplx& at(int i, int j) { return k_[static_cast<std::size_t>(i) * cols() + j]; }
    const std::vector<cplx>& data() const { return k_; }

    GridOperator compose(const GridOperator& other) const;
    GridOperator adjoint() const;
    GridOperator operator+(const GridOperator& other) const;
    GridOperator operator-(const GridOperator& other) const;
    GridOperator scaled(cplx c) const;
    std::vector<cplx> apply(const std::vector<cplx>& xi) const;

    cplx trace() const;
    double hs_norm_sq() const;
    double hs_norm() const;
    /// Weighted Hilbert-Schmidt mass off the diagonal vs on it.
    std::pair<double, double> diagonal_split() const;

    std::optional<double> coverage_defect() const { return coverage_defect_; }
    void set_coverage_defect(double d) { coverage_defect_ = d; }

private:
    Grid row_, col_;
    std::vector<cplx> k_;
    std::optional<double> coverage_defect_;
};

double hs_distance(const GridOperator& a, const GridOperator& b);
double hs_relative_error(const GridOperator& got, const GridOperator& want);

namespace detail {
void compose_serial(const GridOperator& a, const GridOperator& b, std::vector<cplx>& out);
void compose_parallel(const GridOperator& a, const GridOperator& b, std::vector<cplx>& out);
void sample_expr_serial(const GaussianExpr& kernel, const Grid& row, const Grid& col,
                        std::vector<cplx>& out);
void sample_expr_parallel(const GaussianExpr& kernel, const Grid& row, const Grid& col,
                          std::vector<cplx>& out);
} // namespace detail

} // namespace qheis
