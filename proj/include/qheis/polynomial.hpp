#pragma once

#include <complex>
#include <map>
#include <span>
#include <vector>

namespace qheis {

using cplx = std::complex<double>;

/// Sparse multivariate polynomial with complex coefficients.  Monomials are
/// exponent vectors of fixed length nvars; the map keeps terms in a
/// deterministic order.
class MultiPoly {
public:
    explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

    static MultiPoly constant(int nvars, cplx c);
    static MultiPoly variable(int nvars, int i);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly operator+(const MultiPoly& other) const;
    MultiPoly operator*(const MultiPoly& other) const;
    MultiPoly scaled(cplx c) const;
    MultiPoly conjugated() const;

    cplx eval(std::span<const cplx> v) const;
    cplx eval_real(std::span<const double> v) const;

    /// Splits into coefficients of powers of the last variable: returns
    /// polys[m] in (nvars-1) variables with poly = sum_m polys[m] * u^m.
    std::vector<MultiPoly> split_last_variable() const;

    /// Substitute each old variable i by the affine form
    /// sum_j map[i][j] * v_new[j] + shift[i]; result has new_nvars variables.
    MultiPoly substituted(const std::vector<std::vector<cplx>>& map,
                          const std::vector<cplx>& shift, int new_nvars) const;

    const std::map<std::vector<int>, cplx>& terms() const { return terms_; }
    void add_term(const std::vector<int>& mono, cplx coeff);
    void prune(double eps = 0.0);

private:
    int nvars_;
    std::map<std::vector<int>, cplx> terms_;
};

} // namespace qheis
