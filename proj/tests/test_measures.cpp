#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "qheis/schwartz.hpp"
#include "qheis/sympfourier.hpp"

using namespace qheis;

namespace {
constexpr double kPi = std::numbers::pi;
std::mt19937_64 rng(31);
double u(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
} // namespace

TEST_CASE("round trip and parseval on the generic orbits") {
    for (double lam : {0.0, 0.5}) {
        const ModelParams params(lam, 1);
        for (int trial = 0; trial < 20; ++trial) {
            const double r = (trial % 2 == 0 ? 1.0 : u(0.3, 2.0)) * (trial % 3 == 0 ? -1.0 : 1.0);
            const Orbit o = classify_orbit(params, GroupElement::gtilde1(0, 0, r, 0));
            const SymplecticFourier sf(params, o);
            const GaussianExpr f = random_gauss_poly(rng, 2);

            const GaussianExpr back = sf.inverse(sf.forward(f));
            for (int k = 0; k < 8; ++k) {
                const double pt[2] = {u(-2, 2), u(-2, 2)};
                const auto sp = std::span<const double>(pt, 2);
                CHECK(std::abs(back.eval(sp) - f.eval(sp)) <=
                      1e-6 * std::max(1.0, std::abs(f.eval(sp))));
            }

            const double nv = sf.l2_norm_sq_v(f);
            const double no = sf.l2_norm_sq_orbit(sf.forward(f));
            CHECK(std::abs(nv - no) <= 1e-6 * std::max(1.0, nv));
        }
    }
}

TEST_CASE("round trip on a 2-dimensional Gtilde orbit") {
    const ModelParams params(0.0, 1);
    const Orbit o = classify_orbit(params, GroupElement::gtilde1(1.7, 0.0, 0.0, 0.2));
    REQUIRE(o.kind == OrbitKind::Gt_2d);
    const SymplecticFourier sf(params, o);
    CHECK(sf.det_b() == doctest::Approx(o.pq_p[0] * o.pq_p[0]));
    const GaussianExpr f = random_gauss_poly(rng, 2);
    const GaussianExpr back = sf.inverse(sf.forward(f));
    for (int k = 0; k < 8; ++k) {
        const double pt[2] = {u(-2, 2), u(-2, 2)};
        const auto sp = std::span<const double>(pt, 2);
        CHECK(std::abs(back.eval(sp) - f.eval(sp)) <= 1e-8 * std::max(1.0, std::abs(f.eval(sp))));
    }
}

TEST_CASE("centered gaussian transforms to a reciprocal-width gaussian") {
    const ModelParams params(0.0, 1);
    const Orbit o = classify_orbit(params, GroupElement::gtilde1(0, 0, 1.0, 0));
    const SymplecticFourier sf(params, o);
    const double a = 2.3;
    const GaussianExpr f = gauss_poly_expr(2, {a * kPi, a * kPi}, {0, 0}, cplx(1.0));
    const GaussianExpr ft = sf.forward(f);
    for (int k = 0; k < 8; ++k) {
        const double pt[2] = {u(-1.5, 1.5), u(-1.5, 1.5)};
        const cplx want =
            sf.dm_density() / a * std::exp(-kPi / a * (pt[0] * pt[0] + pt[1] * pt[1]));
        CHECK(std::abs(ft.eval(std::span<const double>(pt, 2)) - want) <= 1e-12 * std::abs(want));
    }
}

TEST_CASE("grid-sampled route agrees with the analytic route and reports tails") {
    const ModelParams params(0.0, 1);
    const Orbit o = classify_orbit(params, GroupElement::gtilde1(0, 0, 1.0, 0));
    const SymplecticFourier sf(params, o);
    const GaussianExpr f = random_gauss_poly(rng, 2);

    const int N = 161;
    const double L = 7.0;
    std::vector<cplx> samples(static_cast<std::size_t>(N) * N);
    const double h = 2.0 * L / (N - 1);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            const double pt[2] = {-L + i * h, -L + j * h};
            samples[static_cast<std::size_t>(i) * N + j] = f.eval(std::span<const double>(pt, 2));
        }
    std::vector<std::pair<double, double>> outs = {{0.0, 0.0}, {0.4, -0.7}, {-1.1, 0.2}};
    double tail = 1.0;
    const auto got = sympl_fourier_grid(sf, samples, N, L, outs, &tail);
    CHECK(tail < 1e-10); // box large enough for the family
    const GaussianExpr want = sf.forward(f);
    for (std::size_t k = 0; k < outs.size(); ++k) {
        const double pt[2] = {outs[k].first, outs[k].second};
        CHECK(std::abs(got[k] - want.eval(std::span<const double>(pt, 2))) < 1e-7);
    }

    // a clearly undersized box is reported
    const int Ns = 41;
    const double Ls = 1.0;
    std::vector<cplx> small(static_cast<std::size_t>(Ns) * Ns);
    const double hs = 2.0 * Ls / (Ns - 1);
    for (int i = 0; i < Ns; ++i)
        for (int j = 0; j < Ns; ++j) {
            const double pt[2] = {-Ls + i * hs, -Ls + j * hs};
            small[static_cast<std::size_t>(i) * Ns + j] = f.eval(std::span<const double>(pt, 2));
        }
    (void)sympl_fourier_grid(sf, small, Ns, Ls, outs, &tail);
    CHECK(tail > 1e-3);
}
