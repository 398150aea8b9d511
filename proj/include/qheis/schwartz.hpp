#pragma once

#include <memory>
#include <random>
#include <vector>

#include "qheis/bump.hpp"
#include "qheis/gaussian_expr.hpp"
#include "qheis/params.hpp"
#include "qheis/quadrature.hpp"

namespace qheis {

struct Interval {
    double lo = 0.0, hi = 0.0;
    bool empty() const { return hi <= lo; }
};

Interval intersect(const Interval& a, const Interval& b);

/// Analytic test function on (x, y, r): polynomial-times-Gaussian in the
/// vector slots, smooth compactly supported bump in r.  The twisted algebra
/// operations only ever need the fixed-r behaviour, so the interface is the
/// slice map r -> closed-form expression in (x_1..x_n, y_1..y_n).
class SchwartzA {
public:
    virtual ~SchwartzA() = default;
    virtual int n() const = 0;
    virtual GaussianExpr xy_slice(const ModelParams& params, double r) const = 0;
    virtual Interval r_support() const = 0;

    cplx value(const ModelParams& params, const std::vector<double>& x,
               const std::vector<double>& y, double r) const;
};

using SchwartzAPtr = std::shared_ptr<const SchwartzA>;

/// chi(r) * expr(x, y) with the expression independent of r.
class SchwartzALeaf final : public SchwartzA {
public:
    SchwartzALeaf(GaussianExpr xy, Bump chi, int n);

    int n() const override { return n_; }
    GaussianExpr xy_slice(const ModelParams& params, double r) const override;
    Interval r_support() const override { return {chi_.lo(), chi_.hi()}; }
    const Bump& chi() const { return chi_; }

private:
    GaussianExpr xy_;
    Bump chi_;
    int n_;
};

SchwartzAPtr schwartz_sum(std::vector<std::pair<cplx, SchwartzAPtr>> parts);

/// Default r-bump: plateau over [-5/4, 5/4] (so chi(0) = chi(1) = 1),
/// support (-2, 2).
Bump default_chi();
/// An r-bump supported away from r = 0, plateau around r = 1; used by the
/// checks that integrate representation kernels over r.
Bump offcenter_chi();

/// e^{-pi (|x|^2 + |y|^2)} chi(r)
SchwartzAPtr gaussian_schwartz_a(int n, Bump chi = default_chi());

/// Random member of the analytic family: complex coefficient, monomial of
/// degree <= 2, Gaussian widths near pi, small real centers.
SchwartzAPtr random_schwartz_a(std::mt19937_64& rng, int n, Bump chi = default_chi());

/// Analytic test function on (x, y, r, w): one chi(r) and one rho(w) bump
/// shared by all Gaussian-polynomial terms.
class SchwartzAtilde {
public:
    SchwartzAtilde(std::vector<GaussianExpr> terms, Bump chi, Bump rho, int n);

    int n() const { return n_; }
    GaussianExpr xy_slice(const ModelParams& params, double r, double w) const;
    const Bump& chi() const { return chi_; }
    const Bump& rho() const { return rho_; }
    Interval r_support() const { return {chi_.lo(), chi_.hi()}; }
    Interval w_support() const { return {rho_.lo(), rho_.hi()}; }
    /// Quadrature in w adapted to rho; points_per_panel controls accuracy.
    QuadratureRule w_rule(int points_per_panel = 24) const;

    cplx value(const ModelParams& params, const std::vector<double>& x,
               const std::vector<double>& y, double r, double w) const;

private:
    std::vector<GaussianExpr> terms_;
    Bump chi_, rho_;
    int n_;
};

Bump default_rho();
/// Narrow w-bump (support inside [-3/4, 3/4]); keeps the e^{|w|} dilation
/// spread of the generic kernels inside a moderate box.
Bump narrow_rho();

/// e^{-pi (|x|^2 + |y|^2)} chi(r) rho(w)
SchwartzAtilde gaussian_schwartz_atilde(int n);

SchwartzAtilde random_schwartz_atilde(std::mt19937_64& rng, int n);

/// Centered Gaussian-polynomial expression in `nvars` variables for direct
/// use in tests: coeff * monomial * exp(-sum a_i v_i^2 + i phase . v).
GaussianExpr gauss_poly_expr(int nvars, const std::vector<double>& widths,
                             const std::vector<int>& powers, cplx coeff,
                             const std::vector<double>& phase = {});

GaussianExpr random_gauss_poly(std::mt19937_64& rng, int nvars, int max_degree = 2);

} // namespace qheis
