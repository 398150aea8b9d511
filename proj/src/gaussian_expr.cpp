#include "qheis/gaussian_expr.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qheis {

namespace {

constexpr double kPi = std::numbers::pi;

void require_square(const CMat& m, int n, const char* what) {
    if (static_cast<int>(m.size()) != n)
        throw std::invalid_argument(std::string("GaussianExpr: bad matrix rows in ") + what);
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument(std::string("GaussianExpr: bad matrix cols in ") + what);
}

CMat symmetrized(const CMat& m) {
    const int n = static_cast<int>(m.size());
    CMat out = cmat_zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out[i][j] = 0.5 * (m[i][j] + m[j][i]);
    return out;
}

} // namespace

CMat cmat_zero(int rows, int cols) {
    return CMat(static_cast<std::size_t>(rows), CVec(static_cast<std::size_t>(cols), cplx(0.0)));
}

CVec cvec_zero(int n) { return CVec(static_cast<std::size_t>(n), cplx(0.0)); }

GaussianExpr GaussianExpr::term(MultiPoly poly, CMat quad, CVec lin) {
    const int n = poly.nvars();
    require_square(quad, n, "term");
    if (static_cast<int>(lin.size()) != n) throw std::invalid_argument("GaussianExpr: bad lin size");
    GaussianExpr e(n);
    if (!poly.is_zero()) e.terms_.push_back(GaussTerm{std::move(poly), symmetrized(quad), std::move(lin)});
    return e;
}

GaussianExpr GaussianExpr::gaussian(int nvars, const CMat& quad, const CVec& lin, cplx coeff) {
    return term(MultiPoly::constant(nvars, coeff), quad, lin);
}

GaussianExpr GaussianExpr::phase(int nvars, const std::vector<double>& k, int sign) {
    if (static_cast<int>(k.size()) != nvars) throw std::invalid_argument("GaussianExpr::phase");
    CVec lin = cvec_zero(nvars);
    const cplx f = cplx(0.0, 2.0 * kPi * (sign >= 0 ? 1.0 : -1.0));
    for (int i = 0; i < nvars; ++i) lin[static_cast<std::size_t>(i)] = f * k[static_cast<std::size_t>(i)];
    return gaussian(nvars, cmat_zero(nvars, nvars), lin, cplx(1.0));
}

GaussianExpr GaussianExpr::operator+(const GaussianExpr& other) const {
    if (other.nvars_ != nvars_) throw std::invalid_argument("GaussianExpr: mixed variable counts");
    GaussianExpr out = *this;
    out.terms_.insert(out.terms_.end(), other.terms_.begin(), other.terms_.end());
    return out;
}

GaussianExpr GaussianExpr::operator*(const GaussianExpr& other) const {
    if (other.nvars_ != nvars_) throw std::invalid_argument("GaussianExpr: mixed variable counts");
    GaussianExpr out(nvars_);
    for (const auto& a : terms_) {
        for (const auto& b : other.terms_) {
            GaussTerm t;
            t.poly = a.poly * b.poly;
            t.quad = cmat_zero(nvars_, nvars_);
            for (int i = 0; i < nvars_; ++i)
                for (int j = 0; j < nvars_; ++j)
                    t.quad[i][j] = a.quad[i][j] + b.quad[i][j];
            t.lin = cvec_zero(nvars_);
            for (int i = 0; i < nvars_; ++i) t.lin[i] = a.lin[i] + b.lin[i];
            if (!t.poly.is_zero()) out.terms_.push_back(std::move(t));
        }
    }
    return out;
}

GaussianExpr GaussianExpr::scaled(cplx c) const {
    GaussianExpr out(nvars_);
    if (c == cplx(0.0)) return out;
    for (const auto& t : terms_) out.terms_.push_back(GaussTerm{t.poly.scaled(c), t.quad, t.lin});
    return out;
}

GaussianExpr GaussianExpr::conjugated() const {
    GaussianExpr out(nvars_);
    for (const auto& t : terms_) {
        GaussTerm c;
        c.poly = t.poly.conjugated();
        c.quad = cmat_zero(nvars_, nvars_);
        for (int i = 0; i < nvars_; ++i)
            for (int j = 0; j < nvars_; ++j) c.quad[i][j] = std::conj(t.quad[i][j]);
        c.lin = cvec_zero(nvars_);
        for (int i = 0; i < nvars_; ++i) c.lin[i] = std::conj(t.lin[i]);
        out.terms_.push_back(std::move(c));
    }
    return out;
}

GaussianExpr GaussianExpr::times_bilinear_exp(int i, int j, cplx coeff) const {
    if (i == j) throw std::invalid_argument("times_bilinear_exp: indices must differ");
    GaussianExpr out = *this;
    for (auto& t : out.terms_) {
        t.quad[i][j] -= 0.5 * coeff;
        t.quad[j][i] -= 0.5 * coeff;
    }
    return out;
}

GaussianExpr GaussianExpr::times_variable(int i) const {
    GaussianExpr out(nvars_);
    const MultiPoly v = MultiPoly::variable(nvars_, i);
    for (const auto& t : terms_) out.terms_.push_back(GaussTerm{t.poly * v, t.quad, t.lin});
    return out;
}

cplx GaussianExpr::eval(std::span<const double> v) const {
    if (static_cast<int>(v.size()) != nvars_) throw std::invalid_argument("GaussianExpr::eval");
    cplx acc(0.0);
    for (const auto& t : terms_) {
        cplx expo(0.0);
        for (int i = 0; i < nvars_; ++i) {
            cplx row(0.0);
            for (int j = 0; j < nvars_; ++j) row += t.quad[i][j] * v[static_cast<std::size_t>(j)];
            expo -= v[static_cast<std::size_t>(i)] * row;
            expo += t.lin[i] * v[static_cast<std::size_t>(i)];
        }
        acc += t.poly.eval_real(v) * std::exp(expo);
    }
    return acc;
}

GaussianExpr GaussianExpr::integrate_last_one() const {
    if (nvars_ == 0) throw std::logic_error("integrate_last_one on 0 variables");
    const int d = nvars_;
    const int m = d - 1;
    GaussianExpr out(m);
    for (const auto& t : terms_) {
        const cplx alpha = t.quad[m][m];
        if (alpha.real() <= 0.0)
            throw std::runtime_error("GaussianExpr: integral diverges (Re alpha <= 0)");

        // beta(w) = lin_u - 2 sum_j quad[u][j] w_j, affine in the survivors.
        MultiPoly beta = MultiPoly::constant(m, t.lin[m]);
        for (int j = 0; j < m; ++j) {
            const cplx c = -2.0 * t.quad[m][j];
            if (c != cplx(0.0)) beta += MultiPoly::variable(m, j).scaled(c);
        }

        // Survivor quadratic/linear data plus the exp(beta^2 / 4 alpha)
        // correction, split over quad (bcoef x bcoef), lin (bconst * bcoef)
        // and the scalar amplitude (bconst^2).
        CVec bcoef = cvec_zero(m);
        cplx bconst(0.0);
        for (const auto& [mono, c] : beta.terms()) {
            int which = -1;
            bool is_const = true;
            for (int j = 0; j < m; ++j) {
                if (mono[static_cast<std::size_t>(j)] == 1 && which < 0) {
                    which = j;
                    is_const = false;
                } else if (mono[static_cast<std::size_t>(j)] != 0) {
                    throw std::logic_error("beta must be affine");
                }
            }
            if (is_const) bconst = c;
            else bcoef[static_cast<std::size_t>(which)] = c;
        }

        GaussTerm nt;
        nt.quad = cmat_zero(m, m);
        nt.lin = cvec_zero(m);
        for (int i = 0; i < m; ++i) {
            nt.lin[i] = t.lin[i] + bconst * bcoef[static_cast<std::size_t>(i)] / (2.0 * alpha);
            for (int j = 0; j < m; ++j)
                nt.quad[i][j] = t.quad[i][j] - bcoef[static_cast<std::size_t>(i)] *
                                                   bcoef[static_cast<std::size_t>(j)] / (4.0 * alpha);
        }
        const cplx amp = std::sqrt(kPi / alpha) * std::exp(bconst * bconst / (4.0 * alpha));

        // Moment polynomials P_k(B): P_0 = 1, P_k = P_{k-1}' + B/(2 alpha) P_{k-1}.
        const auto by_power = t.poly.split_last_variable();
        std::vector<std::vector<cplx>> P; // P[k] = coefficients in B
        P.push_back({cplx(1.0)});
        for (std::size_t k = 1; k < by_power.size(); ++k) {
            const auto& prev = P.back();
            std::vector<cplx> cur(prev.size() + 1, cplx(0.0));
            for (std::size_t j = 0; j + 1 < prev.size() + 1 && j < prev.size(); ++j) {
                if (j + 1 < prev.size()) cur[j] += static_cast<double>(j + 1) * prev[j + 1];
                cur[j + 1] += prev[j] / (2.0 * alpha);
            }
            P.push_back(std::move(cur));
        }

        MultiPoly beta_centered = beta; // includes the constant part
        MultiPoly newpoly(m);
        for (std::size_t k = 0; k < by_power.size(); ++k) {
            if (by_power[k].is_zero()) continue;
            // Evaluate P_k at B = beta via Horner in MultiPoly arithmetic.
            MultiPoly pk = MultiPoly::constant(m, P[k].back());
            for (std::size_t j = P[k].size() - 1; j-- > 0;)
                pk = pk * beta_centered + MultiPoly::constant(m, P[k][j]);
            newpoly += by_power[k] * pk;
        }
        nt.poly = newpoly.scaled(amp);
        nt.poly.prune(0.0);
        if (!nt.poly.is_zero()) out.terms_.push_back(std::move(nt));
    }
    return out;
}

GaussianExpr GaussianExpr::integrate_last(int k) const {
    GaussianExpr cur = *this;
    for (int i = 0; i < k; ++i) cur = cur.integrate_last_one();
    return cur;
}

cplx GaussianExpr::integrate_all() const {
    const GaussianExpr reduced = integrate_last(nvars_);
    cplx acc(0.0);
    for (const auto& t : reduced.terms_) acc += t.poly.eval_real(std::span<const double>{});
    return acc;
}

GaussianExpr GaussianExpr::substituted(const CMat& map, const CVec& shift, int new_nvars) const {
    if (static_cast<int>(map.size()) != nvars_ || static_cast<int>(shift.size()) != nvars_)
        throw std::invalid_argument("GaussianExpr::substituted: bad map shape");
    for (const auto& row : map)
        if (static_cast<int>(row.size()) != new_nvars)
            throw std::invalid_argument("GaussianExpr::substituted: bad map shape");

    std::vector<std::vector<cplx>> poly_map(static_cast<std::size_t>(nvars_));
    for (int i = 0; i < nvars_; ++i) poly_map[static_cast<std::size_t>(i)] = map[static_cast<std::size_t>(i)];

    GaussianExpr out(new_nvars);
    for (const auto& t : terms_) {
        GaussTerm nt;
        // -(Mv+t)^T A (Mv+t) + b.(Mv+t)
        //   = -v^T (M^T A M) v + (M^T b - 2 M^T A t).v + (b.t - t^T A t)
        nt.quad = cmat_zero(new_nvars, new_nvars);
        nt.lin = cvec_zero(new_nvars);
        CVec At = cvec_zero(nvars_);
        for (int i = 0; i < nvars_; ++i)
            for (int j = 0; j < nvars_; ++j) At[i] += t.quad[i][j] * shift[static_cast<std::size_t>(j)];
        cplx c0(0.0);
        for (int i = 0; i < nvars_; ++i) c0 += t.lin[i] * shift[static_cast<std::size_t>(i)] -
                                               shift[static_cast<std::size_t>(i)] * At[i];
        for (int a = 0; a < new_nvars; ++a) {
            for (int i = 0; i < nvars_; ++i) {
                nt.lin[a] += map[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] *
                             (t.lin[i] - 2.0 * At[i]);
            }
            for (int b = 0; b < new_nvars; ++b) {
                cplx acc(0.0);
                for (int i = 0; i < nvars_; ++i) {
                    cplx row(0.0);
                    for (int j = 0; j < nvars_; ++j)
                        row += t.quad[i][j] * map[static_cast<std::size_t>(j)][static_cast<std::size_t>(b)];
                    acc += map[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] * row;
                }
                nt.quad[a][b] = acc;
            }
        }
        nt.quad = symmetrized(nt.quad);
        nt.poly = t.poly.substituted(poly_map, shift, new_nvars).scaled(std::exp(c0));
        if (!nt.poly.is_zero()) out.terms_.push_back(std::move(nt));
    }
    return out;
}

GaussianExpr GaussianExpr::promoted(int new_nvars, const std::vector<int>& var_map) const {
    if (static_cast<int>(var_map.size()) != nvars_)
        throw std::invalid_argument("GaussianExpr::promoted: bad var_map");
    CMat map = cmat_zero(nvars_, new_nvars);
    for (int i = 0; i < nvars_; ++i) {
        const int j = var_map[static_cast<std::size_t>(i)];
        if (j < 0 || j >= new_nvars) throw std::out_of_range("GaussianExpr::promoted");
        map[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = cplx(1.0);
    }
    return substituted(map, cvec_zero(nvars_), new_nvars);
}

void GaussianExpr::prune(double eps) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->poly.prune(eps);
        if (it->poly.is_zero()) it = terms_.erase(it);
        else ++it;
    }
}

void GaussianExpr::enforce_term_cap(std::size_t cap) const {
    if (terms_.size() > cap)
        throw std::runtime_error("GaussianExpr: term count exceeds the configured cap");
}

} // namespace qheis
