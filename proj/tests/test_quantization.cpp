#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "qheis/moyal.hpp"
#include "qheis/twisted.hpp"

using namespace qheis;

namespace {

constexpr double kPi = std::numbers::pi;
std::mt19937_64 rng(55);
double u(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

cplx value_at(const ModelParams& params, const SchwartzA& f, double x, double y, double r) {
    return f.value(params, {x}, {y}, r);
}

} // namespace

TEST_CASE("twisted product basics") {
    const ModelParams params(0.0, 1);
    const SchwartzAPtr f = random_schwartz_a(rng, 1);
    const SchwartzAPtr g = random_schwartz_a(rng, 1);

    SUBCASE("zero factor annihilates") {
        const SchwartzAPtr z = std::make_shared<SchwartzALeaf>(GaussianExpr::zero(2),
                                                               default_chi(), 1);
        const SchwartzAPtr fz = twisted_multiply(f, z);
        CHECK(std::abs(value_at(params, *fz, 0.3, -0.2, 0.5)) == 0.0);
    }

    SUBCASE("classical flag gives plain convolution") {
        const SchwartzAPtr conv = twisted_multiply(f, g, /*classical=*/true);
        // quadrature oracle of the convolution at probe points
        const double X = 0.4, Y = -0.3, r = 0.6;
        const int npts = 201;
        const double L = 5.0, h = 2.0 * L / (npts - 1);
        cplx want(0.0);
        for (int i = 0; i < npts; ++i) {
            const double x = -L + i * h;
            const double wi = (i == 0 || i == npts - 1) ? 0.5 * h : h;
            cplx row(0.0);
            for (int j = 0; j < npts; ++j) {
                const double y = -L + j * h;
                const double wj = (j == 0 || j == npts - 1) ? 0.5 * h : h;
                row += wj * value_at(params, *f, x, y, r) *
                       value_at(params, *g, X - x, Y - y, r);
            }
            want += wi * row;
        }
        CHECK(std::abs(value_at(params, *conv, X, Y, r) - want) < 1e-7);
    }

    SUBCASE("twisted product matches its oscillatory quadrature") {
        const ModelParams p5(0.5, 1);
        const SchwartzAPtr prod = twisted_multiply(f, g);
        const double X = 0.2, Y = 0.5, r = 1.0;
        const double eta = eta_lambda(p5, r);
        const int npts = 241;
        const double L = 5.0, h = 2.0 * L / (npts - 1);
        cplx want(0.0);
        for (int i = 0; i < npts; ++i) {
            const double x = -L + i * h;
            const double wi = (i == 0 || i == npts - 1) ? 0.5 * h : h;
            cplx row(0.0);
            for (int j = 0; j < npts; ++j) {
                const double y = -L + j * h;
                const double wj = (j == 0 || j == npts - 1) ? 0.5 * h : h;
                row += wj * value_at(p5, *f, x, y, r) * value_at(p5, *g, X - x, Y - y, r) *
                       std::exp(cplx(0.0, -2.0 * kPi * eta * x * (Y - y)));
            }
            want += wi * row;
        }
        CHECK(std::abs(value_at(p5, *prod, X, Y, r) - want) < 1e-7);
    }

    SUBCASE("associativity at probe points") {
        const ModelParams p5(0.5, 1);
        const SchwartzAPtr h = random_schwartz_a(rng, 1);
        const SchwartzAPtr lhs = twisted_multiply(twisted_multiply(f, g), h);
        const SchwartzAPtr rhs = twisted_multiply(f, twisted_multiply(g, h));
        for (int k = 0; k < 10; ++k) {
            const double X = u(-1.5, 1.5), Y = u(-1.5, 1.5), r = u(-1.5, 1.5);
            const cplx a = value_at(p5, *lhs, X, Y, r);
            const cplx b = value_at(p5, *rhs, X, Y, r);
            CHECK(std::abs(a - b) <= 1e-6 * std::max(1.0, std::abs(b)));
        }
    }
}

TEST_CASE("involution is a star structure") {
    const ModelParams params(0.5, 1);
    const SchwartzAPtr f = random_schwartz_a(rng, 1);
    const SchwartzAPtr g = random_schwartz_a(rng, 1);

    SUBCASE("involutive") {
        const SchwartzAPtr ff = involution(involution(f));
        for (int k = 0; k < 10; ++k) {
            const double x = u(-1.5, 1.5), y = u(-1.5, 1.5), r = u(-1.5, 1.5);
            CHECK(std::abs(value_at(params, *ff, x, y, r) - value_at(params, *f, x, y, r)) <
                  1e-12);
        }
    }

    SUBCASE("fixes real even functions where the twist vanishes") {
        // at eta(0) = 0 the phase drops and f* = conj(f(-x, -y, .)) = f
        const ModelParams p0(0.0, 1);
        const SchwartzAPtr even = gaussian_schwartz_a(1);
        const SchwartzAPtr star = involution(even);
        for (int k = 0; k < 6; ++k) {
            const double x = u(-1.5, 1.5), y = u(-1.5, 1.5);
            CHECK(std::abs(value_at(p0, *star, x, y, 0.0) - value_at(p0, *even, x, y, 0.0)) <
                  1e-14);
        }
    }

    SUBCASE("anti-multiplicative") {
        const SchwartzAPtr lhs = involution(twisted_multiply(f, g));
        const SchwartzAPtr rhs = twisted_multiply(involution(g), involution(f));
        for (int k = 0; k < 10; ++k) {
            const double x = u(-1.5, 1.5), y = u(-1.5, 1.5), r = u(-1.5, 1.5);
            const cplx a = value_at(params, *lhs, x, y, r);
            const cplx b = value_at(params, *rhs, x, y, r);
            CHECK(std::abs(a - b) <= 1e-6 * std::max(1.0, std::abs(b)));
        }
    }
}

TEST_CASE("representation oracles bind the product and involution") {
    const Grid grid = Grid::trapezoid(128, 6.0);
    for (double lam : {0.0, 0.5}) {
        const ModelParams params(lam, 1);
        const SchwartzAPtr f = random_schwartz_a(rng, 1);
        const SchwartzAPtr g = random_schwartz_a(rng, 1);

        const GridOperator lhs = pi_r(params, *twisted_multiply(f, g), 1.0, grid);
        const GridOperator rhs = pi_r(params, *f, 1.0, grid).compose(pi_r(params, *g, 1.0, grid));
        CHECK(hs_relative_error(lhs, rhs) < 1e-3);

        const GridOperator il = pi_r(params, *involution(f), 1.0, grid);
        const GridOperator ir = pi_r(params, *f, 1.0, grid).adjoint();
        CHECK(hs_relative_error(il, ir) < 1e-3);

        // multiplicativity of the 1-dimensional representations
        const cplx a = pi_pq(params, *twisted_multiply(f, g), {0.4}, {-0.8});
        const cplx b = pi_pq(params, *f, {0.4}, {-0.8}) * pi_pq(params, *g, {0.4}, {-0.8});
        CHECK(std::abs(a - b) <= 1e-6 * std::max(1.0, std::abs(b)));
    }
}

TEST_CASE("quantization map") {
    const Grid grid = Grid::trapezoid(128, 6.0);
    const ModelParams params(0.0, 1);
    const Orbit orbit = classify_orbit(params, GroupElement::g1(0, 0, 1.0));

    SUBCASE("symbol of pi_r round-trips") {
        const SchwartzAPtr f = random_schwartz_a(rng, 1);
        const OrbitFunction phi = orbit_function_from_schwartz(params, *f, orbit);
        CHECK(hs_relative_error(q_map(params, phi, grid), pi_r(params, *f, 1.0, grid)) < 1e-12);
    }

    SUBCASE("zero symbol gives the zero operator") {
        const OrbitFunction z = orbit_function(orbit, GaussianExpr::zero(2));
        CHECK(q_map(params, z, grid).hs_norm() == 0.0);
    }

    SUBCASE("isometry into Hilbert-Schmidt operators") {
        for (int i = 0; i < 4; ++i) {
            const OrbitFunction phi = orbit_function(orbit, random_gauss_poly(rng, 2));
            CHECK(std::abs(q_map(params, phi, grid).hs_norm_sq() -
                           orbit_l2_norm_sq(params, phi)) <=
                  1e-4 * orbit_l2_norm_sq(params, phi));
        }
    }

    SUBCASE("point orbits quantize to scalars") {
        const Orbit pt = classify_orbit(params, GroupElement::g1(0.7, -1.1, 0.0));
        const SchwartzAPtr f = gaussian_schwartz_a(1);
        const OrbitFunction phi = orbit_function_from_schwartz(params, *f, pt);
        CHECK(std::abs(q_map_point(phi) - std::exp(-kPi * (0.7 * 0.7 + 1.1 * 1.1))) < 1e-13);
        CHECK_THROWS_AS((void)q_map(params, phi, grid), std::invalid_argument);
    }
}

TEST_CASE("deformed product and involution on the orbits") {
    const Grid grid = Grid::trapezoid(128, 6.0);
    for (double lam : {0.0, 0.5}) {
        const ModelParams params(lam, 1);
        const Orbit orbit = classify_orbit(params, GroupElement::g1(0, 0, 1.0));
        auto rand_phi = [&] { return orbit_function(orbit, random_gauss_poly(rng, 2)); };

        SUBCASE("operator composition oracle") {
            const OrbitFunction phi = rand_phi(), psi = rand_phi();
            const GridOperator lhs = q_map(params, moyal_product(params, phi, psi), grid);
            const GridOperator rhs = q_map(params, phi, grid).compose(q_map(params, psi, grid));
            CHECK(hs_relative_error(lhs, rhs) < 1e-3);
        }

        SUBCASE("zero factor annihilates") {
            const OrbitFunction phi = rand_phi();
            const OrbitFunction zero = orbit_function(orbit, GaussianExpr::zero(2));
            const OrbitFunction prod = moyal_product(params, phi, zero);
            CHECK(prod.pq.is_zero());
        }

        SUBCASE("adjoint oracle") {
            const OrbitFunction psi = rand_phi();
            const GridOperator lhs = q_map(params, moyal_involution(params, psi), grid);
            const GridOperator rhs = q_map(params, psi, grid).adjoint();
            CHECK(hs_relative_error(lhs, rhs) < 1e-3);
        }

        SUBCASE("associativity through the operator route") {
            const OrbitFunction a = rand_phi(), b = rand_phi(), c = rand_phi();
            const GridOperator left = q_map(params, moyal_product(params, a, b), grid)
                                          .compose(q_map(params, c, grid));
            const GridOperator right = q_map(params, a, grid)
                                           .compose(q_map(params, moyal_product(params, b, c), grid));
            CHECK(hs_relative_error(left, right) < 1e-3);
        }

        SUBCASE("associativity in closed form") {
            const OrbitFunction a = rand_phi(), b = rand_phi(), c = rand_phi();
            const OrbitFunction lhs = moyal_product(params, moyal_product(params, a, b), c);
            const OrbitFunction rhs = moyal_product(params, a, moyal_product(params, b, c));
            for (int k = 0; k < 10; ++k) {
                const double p = u(-1.5, 1.5), q = u(-1.5, 1.5);
                const cplx x = orbit_function_value(lhs, p, q);
                const cplx y = orbit_function_value(rhs, p, q);
                CHECK(std::abs(x - y) <= 1e-6 * std::max(1.0, std::abs(y)));
            }
        }

        SUBCASE("star axioms in closed form") {
            const OrbitFunction a = rand_phi(), b = rand_phi();
            const OrbitFunction lhs =
                moyal_involution(params, moyal_product(params, a, b));
            const OrbitFunction rhs = moyal_product(params, moyal_involution(params, b),
                                                    moyal_involution(params, a));
            const OrbitFunction twice = moyal_involution(params, moyal_involution(params, a));
            for (int k = 0; k < 10; ++k) {
                const double p = u(-1.5, 1.5), q = u(-1.5, 1.5);
                CHECK(std::abs(orbit_function_value(lhs, p, q) -
                               orbit_function_value(rhs, p, q)) <= 1e-6);
                CHECK(std::abs(orbit_function_value(twice, p, q) -
                               orbit_function_value(a, p, q)) <= 1e-6);
            }
        }
    }
}

TEST_CASE("point orbit deformed product is the pointwise product") {
    const ModelParams params(0.5, 1);
    const Orbit pt = classify_orbit(params, GroupElement::g1(1.0, 2.0, 0.0));
    OrbitFunction phi, psi;
    phi.orbit = pt;
    psi.orbit = pt;
    phi.point_value = cplx(0.3, 0.9);
    psi.point_value = cplx(-1.1, 0.2);
    CHECK(moyal_product(params, phi, psi).point_value == phi.point_value * psi.point_value);
    CHECK(moyal_involution(params, psi).point_value == std::conj(psi.point_value));
}

TEST_CASE("hbar scaling recovers the pointwise product at first order") {
    const ModelParams params(0.0, 1);
    const Orbit orbit = classify_orbit(params, GroupElement::g1(0, 0, 1.0));
    const OrbitFunction phi =
        orbit_function(orbit, gauss_poly_expr(2, {kPi, kPi}, {0, 0}, cplx(1.0)));
    const OrbitFunction psi = orbit_function(
        orbit, gauss_poly_expr(2, {1.3 * kPi, 0.9 * kPi}, {1, 0}, cplx(1.0), {0.2, -0.1}));

    std::vector<double> sup;
    for (double hb : {0.5, 0.25, 0.125, 0.0625}) {
        const OrbitFunction prod = moyal_product(params, phi, psi, hb);
        double m = 0.0;
        for (int i = -6; i <= 6; ++i)
            for (int j = -6; j <= 6; ++j) {
                const double p = 0.3 * i, q = 0.3 * j;
                const cplx pw = orbit_function_value(phi, p, q) * orbit_function_value(psi, p, q);
                m = std::max(m, std::abs(orbit_function_value(prod, p, q) - pw));
            }
        sup.push_back(m);
    }
    // each halving of hbar should roughly halve the sup error
    for (std::size_t i = 1; i < sup.size(); ++i) CHECK(sup[i] < 0.75 * sup[i - 1]);
    const double slope = std::log(sup.front() / sup.back()) /
                         std::log((0.5) / (0.0625));
    CHECK(slope >= 0.9);
}

TEST_CASE("hbar out of range is rejected") {
    const ModelParams params(0.0, 1);
    const Orbit orbit = classify_orbit(params, GroupElement::g1(0, 0, 1.0));
    const OrbitFunction phi = orbit_function(orbit, random_gauss_poly(rng, 2));
    CHECK_THROWS_AS((void)moyal_product(params, phi, phi, 0.0), std::invalid_argument);
    CHECK_THROWS_AS((void)moyal_product(params, phi, phi, 1.5), std::invalid_argument);
}
