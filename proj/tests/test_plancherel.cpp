#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "qheis/plancherel.hpp"

using namespace qheis;

namespace {
std::mt19937_64 rng(13);
}

TEST_CASE("plancherel identity, closed-form and grid routes") {
    const Grid grid = Grid::trapezoid(128, 6.0);
    const Bump chi = offcenter_chi();
    const QuadratureRule r_rule = bump_rule(chi, 16, 2);
    for (double lam : {0.0, 0.5}) {
        const ModelParams params(lam, 1);
        for (int trial = 0; trial < 3; ++trial) {
            const SchwartzAPtr f =
                std::make_shared<SchwartzALeaf>(random_gauss_poly(rng, 2), chi, 1);
            const PlancherelCheckResult res = plancherel_check(params, *f, r_rule, grid);
            CHECK(res.lhs_closed > 0.0);
            CHECK(res.rel_closed() < 1e-6);
            CHECK(res.rel_grid() < 1e-3);
        }
    }
}

TEST_CASE("zero function gives zeros") {
    const ModelParams params(0.0, 1);
    const Bump chi = offcenter_chi();
    const SchwartzAPtr z = std::make_shared<SchwartzALeaf>(GaussianExpr::zero(2), chi, 1);
    const PlancherelCheckResult res =
        plancherel_check(params, *z, bump_rule(chi, 8, 1), Grid::trapezoid(32, 6.0));
    CHECK(res.lhs_closed == 0.0);
    CHECK(res.rhs_closed == 0.0);
    CHECK(res.rhs_grid == 0.0);
}

TEST_CASE("refining the r-quadrature does not worsen the residual") {
    const ModelParams params(0.5, 1);
    const Bump chi = offcenter_chi();
    const SchwartzAPtr f = std::make_shared<SchwartzALeaf>(random_gauss_poly(rng, 2), chi, 1);
    const Grid grid = Grid::trapezoid(96, 6.0);
    const double coarse = plancherel_check(params, *f, bump_rule(chi, 8, 1), grid).rel_closed();
    const double fine = plancherel_check(params, *f, bump_rule(chi, 24, 2), grid).rel_closed();
    CHECK(fine <= std::max(coarse, 1e-12));
}

TEST_CASE("a node at r = 0 is rejected for the grid route") {
    const ModelParams params(0.0, 1);
    const SchwartzAPtr f =
        std::make_shared<SchwartzALeaf>(random_gauss_poly(rng, 2), default_chi(), 1);
    QuadratureRule bad;
    bad.nodes = {0.0};
    bad.weights = {1.0};
    CHECK_THROWS_AS((void)plancherel_check(params, *f, bad, Grid::trapezoid(32, 6.0)),
                    std::invalid_argument);
}

TEST_CASE("intertwining residual across r samples") {
    const Grid grid = Grid::trapezoid(128, 6.0);
    std::vector<double> samples;
    for (int i = 0; i < 8; ++i) samples.push_back(0.5 + 0.9 * i / 7.0);
    for (double lam : {0.0, 0.5}) {
        const ModelParams params(lam, 1);
        const Bump chi = offcenter_chi();
        const SchwartzAPtr f = std::make_shared<SchwartzALeaf>(random_gauss_poly(rng, 2), chi, 1);
        const SchwartzAPtr xi = std::make_shared<SchwartzALeaf>(random_gauss_poly(rng, 2), chi, 1);
        CHECK(intertwining_check(params, f, xi, samples, grid) < 1e-3);

        // the zero function intertwines trivially
        const SchwartzAPtr z = std::make_shared<SchwartzALeaf>(GaussianExpr::zero(2), chi, 1);
        CHECK(intertwining_check(params, z, xi, samples, grid) == 0.0);
    }
}

TEST_CASE("intertwining residual falls under grid refinement") {
    const ModelParams params(0.0, 1);
    const Bump chi = offcenter_chi();
    const SchwartzAPtr f = std::make_shared<SchwartzALeaf>(random_gauss_poly(rng, 2), chi, 1);
    const SchwartzAPtr xi = std::make_shared<SchwartzALeaf>(random_gauss_poly(rng, 2), chi, 1);
    const std::vector<double> samples = {1.0};
    double prev = -1.0;
    for (int npoints : {16, 32, 64}) {
        const double res = intertwining_check(params, f, xi, samples, Grid::trapezoid(npoints, 3.0));
        if (prev >= 0.0) CHECK((res <= prev / 4.0 || res <= 1e-8));
        prev = res;
    }
}

TEST_CASE("plancherel measure density") {
    const PlancherelMeasure mu{QuadratureRule{}, ModelParams(0.5, 1)};
    CHECK(mu.density(0.0) == 0.0);
    CHECK(mu.density(1.0) == doctest::Approx(std::exp(1.0) - 1.0));
    const PlancherelMeasure mu2{QuadratureRule{}, ModelParams(0.0, 2)};
    CHECK(mu2.density(-1.5) == doctest::Approx(2.25));
}
