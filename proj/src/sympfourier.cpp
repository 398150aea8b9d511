#include "qheis/sympfourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qheis {

namespace {
constexpr cplx kTwoPiI{0.0, 2.0 * std::numbers::pi};
}

SymplecticFourier::SymplecticFourier(const ModelParams& params, const Orbit& orbit) {
    if (orbit.dim == 0)
        throw std::invalid_argument("SymplecticFourier: orbit must have positive dimension");
    k_ = orbit.dim;
    det_b_ = std::abs(det_small(b_matrix(params, orbit.base_point)));
    if (det_b_ == 0.0) throw std::runtime_error("SymplecticFourier: zero determinant");
}

double SymplecticFourier::dm_density() const { return std::sqrt(det_b_); }
double SymplecticFourier::dtheta_density() const { return 1.0 / std::sqrt(det_b_); }

GaussianExpr SymplecticFourier::transform(const GaussianExpr& f, int sign, double density) const {
    if (f.nvars() != k_) throw std::invalid_argument("SymplecticFourier: wrong variable count");
    std::vector<int> inner(static_cast<std::size_t>(k_));
    for (int i = 0; i < k_; ++i) inner[static_cast<std::size_t>(i)] = k_ + i;
    GaussianExpr joint = f.promoted(2 * k_, inner);
    const cplx c = (sign >= 0 ? kTwoPiI : -kTwoPiI);
    for (int i = 0; i < k_; ++i) joint = joint.times_bilinear_exp(i, k_ + i, c);
    return joint.integrate_last(k_).scaled(density);
}

GaussianExpr SymplecticFourier::forward(const GaussianExpr& f) const {
    return transform(f, -1, dm_density());
}

GaussianExpr SymplecticFourier::inverse(const GaussianExpr& g) const {
    return transform(g, +1, dtheta_density());
}

double SymplecticFourier::l2_norm_sq_v(const GaussianExpr& f) const {
    return dm_density() * (f * f.conjugated()).integrate_all().real();
}

double SymplecticFourier::l2_norm_sq_orbit(const GaussianExpr& g) const {
    return dtheta_density() * (g * g.conjugated()).integrate_all().real();
}

std::vector<cplx> sympl_fourier_grid(const SymplecticFourier& sf, const std::vector<cplx>& samples,
                                     int npoints, double extent,
                                     const std::vector<std::pair<double, double>>& out_points,
                                     double* tail_report) {
    if (sf.dim() != 2) throw std::invalid_argument("sympl_fourier_grid: implemented for dim 2");
    if (static_cast<int>(samples.size()) != npoints * npoints)
        throw std::invalid_argument("sympl_fourier_grid: bad sample count");
    const double h = 2.0 * extent / (npoints - 1);
    auto node = [&](int i) { return -extent + i * h; };
    auto wt = [&](int i) { return (i == 0 || i == npoints - 1) ? 0.5 * h : h; };

    if (tail_report) {
        double edge = 0.0, peak = 1e-300;
        for (int i = 0; i < npoints; ++i)
            for (int j = 0; j < npoints; ++j) {
                const double m = std::abs(samples[static_cast<std::size_t>(i) * npoints + j]);
                peak = std::max(peak, m);
                if (i == 0 || j == 0 || i == npoints - 1 || j == npoints - 1)
                    edge = std::max(edge, m);
            }
        *tail_report = edge / peak;
    }

    std::vector<cplx> out(out_points.size(), cplx(0.0));
    const double density = sf.dm_density();
    for (std::size_t o = 0; o < out_points.size(); ++o) {
        const double l1 = out_points[o].first, l2 = out_points[o].second;
        cplx acc(0.0);
        for (int i = 0; i < npoints; ++i) {
            const double xi = node(i);
            cplx rowacc(0.0);
            for (int j = 0; j < npoints; ++j) {
                const double xj = node(j);
                rowacc += wt(j) * samples[static_cast<std::size_t>(i) * npoints + j] *
                          std::exp(cplx(0.0, -2.0 * std::numbers::pi * (l1 * xi + l2 * xj)));
            }
            acc += wt(i) * rowacc;
        }
        out[o] = density * acc;
    }
    return out;
}

} // namespace qheis
