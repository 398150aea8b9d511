#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "qheis/rep_atilde.hpp"

using namespace qheis;

namespace {

constexpr double kPi = std::numbers::pi;
std::mt19937_64 rng(99);
double u(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

cplx ebar(double t) { return std::exp(cplx(0.0, -2.0 * kPi * t)); }

} // namespace

TEST_CASE("pi_tilde_s") {
    const ModelParams params(0.5, 1);
    const SchwartzAtilde f = gaussian_schwartz_atilde(1);

    // s = 0: the plain integral over (x, y, w); the gaussian contributes 1,
    // the bump its own length.
    const QuadratureRule fine = gauss_legendre_on(-2.0, 2.0, 64, 8);
    cplx want(0.0);
    for (std::size_t i = 0; i < fine.nodes.size(); ++i)
        want += fine.weights[i] * f.rho()(fine.nodes[i]);
    CHECK(std::abs(pi_tilde_s(params, f, 0.0) - want) < 1e-9);

    // general s against an independent dense quadrature
    for (double s : {0.3, -1.1}) {
        cplx ws(0.0);
        for (std::size_t i = 0; i < fine.nodes.size(); ++i)
            ws += fine.weights[i] * f.rho()(fine.nodes[i]) * ebar(s * fine.nodes[i]);
        CHECK(std::abs(pi_tilde_s(params, f, s) - ws) < 1e-9);
    }

    // linearity
    SchwartzAtilde f2({random_gauss_poly(rng, 2), random_gauss_poly(rng, 2)}, default_chi(),
                      default_rho(), 1);
    SchwartzAtilde f2a({f2.xy_slice(params, 0.0, 0.0)}, default_chi(), default_rho(), 1);
    CHECK(std::abs(pi_tilde_s(params, f2, 0.7) - pi_tilde_s(params, f2a, 0.7)) < 1e-12);
}

TEST_CASE("pi_tilde_pq at the origin is the limit operator S") {
    const ModelParams params(0.0, 1);
    const SchwartzAtilde f = gaussian_schwartz_atilde(1);
    const Grid base = Grid::periodic_uniform(64, 6.0);
    const GridOperator S = pi_tilde_pq(params, f, 0.0, 0.0, base);
    // kernel is g(d' - d) with g(w) = rho(w) chi(0) * 1
    for (int i = 0; i < base.size(); i += 9)
        for (int j = 0; j < base.size(); j += 7) {
            const double w = base.wrap(base.node(j) - base.node(i));
            CHECK(std::abs(S.at(i, j) - cplx(f.rho()(w))) < 1e-12);
        }
}

TEST_CASE("pi_tilde_pq equivalence relabeling at the kernel level") {
    const ModelParams params(0.0, 1);
    const SchwartzAtilde f = gaussian_schwartz_atilde(1);
    // K_{p,q}(d + l, d' + l) = K_{e^l p, e^{-l} q}(d, d'): sample both matrices
    // on grids shifted against each other.
    const double p = 0.8, q = -0.5, l = 0.6;
    auto kernel = [&](double pp, double qq, double d, double dp) -> cplx {
        // closed form: rho(dp - d) * Ghat(e^d pp, e^{-d} qq)
        const double w = dp - d;
        return f.rho()(w) *
               std::exp(-kPi * (std::exp(2 * d) * pp * pp + std::exp(-2 * d) * qq * qq));
    };
    for (int k = 0; k < 40; ++k) {
        const double d = u(-2, 2), dp = d + u(-1.5, 1.5);
        const cplx a = kernel(p, q, d + l, dp + l);
        const cplx b = kernel(std::exp(l) * p, std::exp(-l) * q, d, dp);
        CHECK(std::abs(a - b) < 1e-9);
    }
    // and the grid kernel reproduces the closed form
    const Grid base = Grid::periodic_uniform(64, 6.0);
    const GridOperator op = pi_tilde_pq(params, f, p, q, base);
    for (int i = 0; i < base.size(); i += 11)
        for (int j = 0; j < base.size(); j += 5) {
            const double w = base.wrap(base.node(j) - base.node(i));
            const cplx want = f.rho()(w) * std::exp(-kPi * (std::exp(2 * base.node(i)) * p * p +
                                                            std::exp(-2 * base.node(i)) * q * q));
            CHECK(std::abs(op.at(i, j) - want) < 1e-12);
        }
}

TEST_CASE("pi_tilde_rs kernel against a brute-force oracle") {
    for (double lam : {0.0, 0.5}) {
        const ModelParams params(lam, 1);
        const SchwartzAtilde f = gaussian_schwartz_atilde(1);
        const double r = 1.0, s = 0.3;
        const Grid grid = Grid::trapezoid(96, 6.0);
        const GridOperator op = pi_tilde_rs(params, f, r, s, grid);

        // (pi f) xi(u0) = int f(x,y,r,w) ebar(sw) ebar(eta u0 y) e^{-w/2}
        //                     xi(e^{-w} u0 + e^{-w} x) dx dy dw
        const double eta = eta_lambda(params, r);
        std::vector<cplx> xi(static_cast<std::size_t>(grid.size()));
        for (int i = 0; i < grid.size(); ++i)
            xi[static_cast<std::size_t>(i)] = std::exp(-kPi * grid.node(i) * grid.node(i));
        const auto got = op.apply(xi);

        const int npts = 121;
        const double L = 5.0, h = 2.0 * L / (npts - 1);
        const QuadratureRule wr = gauss_legendre_on(-1.75, 1.75, 48, 4);
        for (int probe : {24, 48, 72}) {
            const double u0 = grid.node(probe);
            cplx want(0.0);
            for (std::size_t iw = 0; iw < wr.nodes.size(); ++iw) {
                const double w = wr.nodes[iw];
                const double rho = f.rho()(w);
                if (rho == 0.0) continue;
                cplx xyacc(0.0);
                for (int i = 0; i < npts; ++i) {
                    const double x = -L + i * h;
                    const double wi = (i == 0 || i == npts - 1) ? 0.5 * h : h;
                    cplx row(0.0);
                    for (int j = 0; j < npts; ++j) {
                        const double y = -L + j * h;
                        const double wj = (j == 0 || j == npts - 1) ? 0.5 * h : h;
                        const double arg = std::exp(-w) * u0 + std::exp(-w) * x;
                        row += wj * std::exp(-kPi * (x * x + y * y)) * ebar(eta * u0 * y) *
                               std::exp(-kPi * arg * arg);
                    }
                    xyacc += wi * row;
                }
                want += wr.weights[iw] * rho * ebar(s * w) * std::exp(-0.5 * w) * xyacc;
            }
            CHECK(std::abs(got[static_cast<std::size_t>(probe)] - want) < 1e-5);
        }
    }
}

TEST_CASE("pi_tilde_rs rejects r = 0 and refines in w") {
    const ModelParams params(0.0, 1);
    const SchwartzAtilde f = gaussian_schwartz_atilde(1);
    const Grid grid = Grid::trapezoid(64, 6.0);
    CHECK_THROWS_AS((void)pi_tilde_rs(params, f, 0.0, 0.3, grid), std::invalid_argument);

    // outside the r-support the operator vanishes identically
    CHECK(pi_tilde_rs(params, f, 3.1, 0.3, grid).hs_norm() == 0.0);

    const GridOperator coarse = pi_tilde_rs(params, f, 1.0, 0.3, grid, 16);
    const GridOperator fine = pi_tilde_rs(params, f, 1.0, 0.3, grid, 32);
    CHECK(hs_relative_error(coarse, fine) < 1e-8);
}

TEST_CASE("limit operators") {
    const ModelParams params(0.0, 1);
    const SchwartzAtilde f = gaussian_schwartz_atilde(1);
    const Grid base = Grid::periodic_uniform(128, 6.0);
    const LimitOperators lim = limit_operators(params, f, 0.4, base);

    SUBCASE("S tilde is diagonal with the expected symbol") {
        const auto [on, off] = lim.S_tilde.diagonal_split();
        CHECK(off / on < 1e-3);
        // diagonal symbol m(s) = int f(x,y,0,w) e(sw) dx dy dw
        const Grid dual = lim.S_tilde.row_grid();
        const QuadratureRule wr = f.w_rule();
        for (int j = 16; j < dual.size(); j += 32) {
            cplx want(0.0);
            for (std::size_t k = 0; k < wr.nodes.size(); ++k)
                want += wr.weights[k] * f.rho()(wr.nodes[k]) *
                        std::conj(ebar(dual.node(j) * wr.nodes[k]));
            const cplx got = lim.S_tilde.at(j, j) * dual.weight(j);
            CHECK(std::abs(got - want) < 1e-4 * std::max(1.0, std::abs(want)));
        }
    }

    SUBCASE("unitary conjugation preserves the HS norm") {
        CHECK(std::abs(lim.S_tilde.hs_norm_sq() - lim.S.hs_norm_sq()) <=
              1e-10 * lim.S.hs_norm_sq());
        CHECK(std::abs(lim.T_tilde.hs_norm_sq() - lim.T.hs_norm_sq()) <=
              1e-10 * lim.T.hs_norm_sq());
    }

    SUBCASE("dyadic convergence toward S and T") {
        double prevS = 1e300, firstS = -1, lastS = 0;
        for (int k = 1; k <= 10; ++k) {
            const double t = std::ldexp(1.0, -k);
            const double d = hs_distance(pi_tilde_pq(params, f, t, t, base), lim.S);
            if (firstS < 0) firstS = d;
            CHECK(d < prevS);
            prevS = d;
            lastS = d;
        }
        CHECK(lastS < firstS);

        double prevT = 1e300;
        for (int k = 1; k <= 8; ++k) {
            const double r = std::ldexp(1.0, -k);
            const double d = hs_distance(pi_tilde_rs(params, f, r, 0.4, base), lim.T);
            CHECK(d < prevT);
            prevT = d;
        }
    }

    SUBCASE("kernel sup-norm convergence along both dyadic signs") {
        for (double sign : {1.0, -1.0}) {
            double prev = 1e300;
            for (int k = 1; k <= 8; ++k) {
                const double r = sign * std::ldexp(1.0, -k);
                const GridOperator diff = pi_tilde_rs(params, f, r, 0.4, base) - lim.T;
                double sup = 0.0;
                for (int i = 0; i < diff.rows(); ++i)
                    for (int j = 0; j < diff.cols(); ++j)
                        sup = std::max(sup, std::abs(diff.at(i, j)));
                CHECK(sup < prev);
                prev = sup;
            }
        }
    }

    SUBCASE("Q_rs kernels approach Q") {
        double prev = 1e300;
        for (int k = 1; k <= 8; ++k) {
            const double r = std::ldexp(1.0, -k);
            const double d = hs_distance(q_rs_kernel(params, f, r, 0.4, base), lim.Q);
            CHECK(d < prev);
            prev = d;
        }
    }
}

TEST_CASE("scaled fourier transform") {
    for (double lam : {0.0, 0.5}) {
        const ModelParams params(lam, 1);
        const Grid base = Grid::periodic_uniform(128, 6.0);

        SUBCASE("round trip is the identity") {
            for (double r : {1.0, -0.6}) {
                const auto [fwd, inv] = f_r_transform(params, r, base);
                const GridOperator prod = fwd.compose(inv);
                GridOperator id = GridOperator::zero(prod.row_grid(), prod.col_grid());
                for (int i = 0; i < id.rows(); ++i) id.at(i, i) = 1.0 / id.row_grid().weight(i);
                CHECK(hs_distance(prod, id) / id.hs_norm() < 1e-8);
                const GridOperator prod2 = inv.compose(fwd);
                GridOperator id2 = GridOperator::zero(prod2.row_grid(), prod2.col_grid());
                for (int i = 0; i < id2.rows(); ++i)
                    id2.at(i, i) = 1.0 / id2.row_grid().weight(i);
                CHECK(hs_distance(prod2, id2) / id2.hs_norm() < 1e-8);
            }
        }

        SUBCASE("gaussian maps to an eta-scaled gaussian") {
            const double r = 0.8;
            const double eta = eta_lambda(params, r);
            const auto [fwd, inv] = f_r_transform(params, r, base);
            std::vector<cplx> xi(static_cast<std::size_t>(base.size()));
            for (int i = 0; i < base.size(); ++i)
                xi[static_cast<std::size_t>(i)] = std::exp(-kPi * base.node(i) * base.node(i));
            const auto got = fwd.apply(xi);
            const Grid vg = fwd.row_grid();
            for (int j = 0; j < vg.size(); j += 7) {
                const double v = vg.node(j);
                const cplx want = std::sqrt(std::abs(eta)) * std::exp(-kPi * eta * eta * v * v);
                CHECK(std::abs(got[static_cast<std::size_t>(j)] - want) < 1e-6);
            }
        }

        SUBCASE("conjugated generic operator matches the closed-form kernel") {
            // The generic kernel spreads by a factor e^{|w|}; a narrow w-bump
            // and a box sized to the spread keep both routes fully supported.
            const SchwartzAtilde f({gauss_poly_expr(2, {kPi, kPi}, {0, 0}, cplx(1.0))},
                                   default_chi(), narrow_rho(), 1);
            const Grid wide = Grid::periodic_uniform(256, 12.0);
            const double r = 1.0, s = 0.4;
            const auto [fwd, inv] = f_r_transform(params, r, wide);
            const GridOperator conj_route =
                fwd.compose(pi_tilde_rs(params, f, r, s, wide)).compose(inv);
            const GridOperator closed = q_rs_kernel(params, f, r, s, conj_route.row_grid());
            CHECK(hs_relative_error(conj_route, closed) < 1e-6);
        }
    }
}
