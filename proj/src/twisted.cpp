#include "qheis/twisted.hpp"

#include <numbers>
#include <stdexcept>

namespace qheis {

namespace {

constexpr cplx kTwoPiI{0.0, 2.0 * std::numbers::pi};

class TwistedProductA final : public SchwartzA {
public:
    TwistedProductA(SchwartzAPtr f, SchwartzAPtr g, bool classical)
        : f_(std::move(f)), g_(std::move(g)), classical_(classical) {
        if (f_->n() != g_->n())
            throw std::invalid_argument("twisted_multiply: dimension mismatch");
    }

    int n() const override { return f_->n(); }

    GaussianExpr xy_slice(const ModelParams& params, double r) const override {
        const int n = f_->n();
        const GaussianExpr fs = f_->xy_slice(params, r);
        const GaussianExpr gs = g_->xy_slice(params, r);
        if (fs.is_zero() || gs.is_zero()) return GaussianExpr::zero(2 * n);
        const double eta = classical_ ? 0.0 : eta_lambda(params, r);

        // Joint variables (X, Y, x, y).
        std::vector<int> inner(static_cast<std::size_t>(2 * n));
        for (int i = 0; i < 2 * n; ++i) inner[static_cast<std::size_t>(i)] = 2 * n + i;
        GaussianExpr joint = fs.promoted(4 * n, inner);

        CMat map = cmat_zero(2 * n, 4 * n); // g's (x, y) -> (X - x, Y - y)
        for (int i = 0; i < 2 * n; ++i) {
            map[i][i] = cplx(1.0);
            map[i][2 * n + i] = cplx(-1.0);
        }
        joint = joint * gs.substituted(map, cvec_zero(2 * n), 4 * n);

        if (eta != 0.0) {
            for (int i = 0; i < n; ++i) {
                joint = joint.times_bilinear_exp(2 * n + i, n + i, -kTwoPiI * eta); // ebar(eta x.Y)
                joint = joint.times_bilinear_exp(2 * n + i, 3 * n + i, kTwoPiI * eta); // e(eta x.y)
            }
        }
        GaussianExpr out = joint.integrate_last(2 * n);
        out.enforce_term_cap(kTwistedTermCap);
        return out;
    }

    Interval r_support() const override { return intersect(f_->r_support(), g_->r_support()); }

private:
    SchwartzAPtr f_, g_;
    bool classical_;
};

class InvolutionA final : public SchwartzA {
public:
    explicit InvolutionA(SchwartzAPtr f) : f_(std::move(f)) {}

    int n() const override { return f_->n(); }

    GaussianExpr xy_slice(const ModelParams& params, double r) const override {
        const int n = f_->n();
        const GaussianExpr fs = f_->xy_slice(params, r);
        if (fs.is_zero()) return fs;
        const double eta = eta_lambda(params, r);
        CMat neg = cmat_zero(2 * n, 2 * n);
        for (int i = 0; i < 2 * n; ++i) neg[i][i] = cplx(-1.0);
        GaussianExpr out = fs.substituted(neg, cvec_zero(2 * n), 2 * n).conjugated();
        if (eta != 0.0)
            for (int i = 0; i < n; ++i) out = out.times_bilinear_exp(i, n + i, -kTwoPiI * eta);
        return out;
    }

    Interval r_support() const override { return f_->r_support(); }

private:
    SchwartzAPtr f_;
};

} // namespace

SchwartzAPtr twisted_multiply(SchwartzAPtr f, SchwartzAPtr g, bool classical) {
    return std::make_shared<TwistedProductA>(std::move(f), std::move(g), classical);
}

SchwartzAPtr involution(SchwartzAPtr f) { return std::make_shared<InvolutionA>(std::move(f)); }

SchwartzAPtr regular_rep(SchwartzAPtr f, SchwartzAPtr xi) {
    return twisted_multiply(std::move(f), std::move(xi));
}

} // namespace qheis
