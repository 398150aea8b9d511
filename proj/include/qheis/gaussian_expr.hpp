#pragma once

#include <complex>
#include <span>
#include <vector>

#include "qheis/polynomial.hpp"

namespace qheis {

using CMat = std::vector<std::vector<cplx>>;
using CVec = std::vector<cplx>;

/// One summand poly(v) * exp(-v^T quad v + lin . v).  quad is stored
/// symmetric; its real part must be positive definite along any variable
/// that gets integrated out.
struct GaussTerm {
    MultiPoly poly;
    CMat quad;
    CVec lin;
};

/// Finite sum of Gaussian terms in a fixed number of real variables.  This
/// is the closed-form backbone of the library: Fourier transforms, twisted
/// convolutions, operator kernels and Moyal products are all marginals of
/// such expressions, computed by integrating variables out one at a time.
///
/// The one-variable step is the classical formula
///   int u^m exp(-a u^2 + b u) du = sqrt(pi/a) exp(b^2 / 4a) P_m(b),
///   P_0 = 1,  P_m = P_{m-1}' + (b / 2a) P_{m-1},
/// valid for Re a > 0, with the principal square root.  When the exponent
/// couples u to the remaining variables, b is an affine form in them, so
/// exp(b^2 / 4a) folds into the remaining quadratic and P_m(b) into the
/// remaining polynomial.
class GaussianExpr {
public:
    explicit GaussianExpr(int nvars = 0) : nvars_(nvars) {}

    static GaussianExpr zero(int nvars) { return GaussianExpr(nvars); }
    static GaussianExpr term(MultiPoly poly, CMat quad, CVec lin);
    /// coeff * exp(-v^T quad v + lin . v)
    static GaussianExpr gaussian(int nvars, const CMat& quad, const CVec& lin, cplx coeff = 1.0);
    /// exp(sign * 2 pi i k . v)
    static GaussianExpr phase(int nvars, const std::vector<double>& k, int sign);

    int nvars() const { return nvars_; }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<GaussTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    GaussianExpr operator+(const GaussianExpr& other) const;
    GaussianExpr operator*(const GaussianExpr& other) const;
    GaussianExpr scaled(cplx c) const;
    /// Complex conjugate as a function of real arguments.
    GaussianExpr conjugated() const;
    /// Multiply by exp(coeff * v_i * v_j), i != j.
    GaussianExpr times_bilinear_exp(int i, int j, cplx coeff) const;
    /// Multiply by the monomial v_i.
    GaussianExpr times_variable(int i) const;

    cplx eval(std::span<const double> v) const;

    /// Integrate out the last k variables over R^k.
    GaussianExpr integrate_last(int k) const;
    /// Integrate out every variable.
    cplx integrate_all() const;

    /// v_old = map . v_new + shift (map is nvars x new_nvars).
    GaussianExpr substituted(const CMat& map, const CVec& shift, int new_nvars) const;
    /// Old variable i becomes new variable var_map[i]; others untouched.
    GaussianExpr promoted(int new_nvars, const std::vector<int>& var_map) const;

    void prune(double eps = 1e-300);
    void enforce_term_cap(std::size_t cap) const;

private:
    GaussianExpr integrate_last_one() const;

    int nvars_;
    std::vector<GaussTerm> terms_;
};

CMat cmat_zero(int rows, int cols);
CVec cvec_zero(int n);

} // namespace qheis
