#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "qheis/group.hpp"

using namespace qheis;

namespace {

GroupElement random_element(std::mt19937_64& rng, GroupKind kind, int n) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    auto vec = [&] {
        VecN v(static_cast<std::size_t>(n));
        for (double& t : v) t = u(rng);
        return v;
    };
    switch (kind) {
        case GroupKind::H: return GroupElement::h(vec(), vec(), u(rng));
        case GroupKind::Htilde: return GroupElement::htilde(vec(), vec(), u(rng), u(rng));
        case GroupKind::G: return GroupElement::g(vec(), vec(), u(rng));
        case GroupKind::Gtilde: return GroupElement::gtilde(vec(), vec(), u(rng), u(rng));
        case GroupKind::Double:
            return GroupElement::double_of(random_element(rng, GroupKind::Htilde, n),
                                           random_element(rng, GroupKind::Gtilde, n));
    }
    throw std::logic_error("unreachable");
}

const GroupKind kAllKinds[] = {GroupKind::H, GroupKind::Htilde, GroupKind::G, GroupKind::Gtilde,
                               GroupKind::Double};

} // namespace

TEST_CASE("eta_lambda closed form and limits") {
    CHECK(eta_lambda(ModelParams(0.0, 1), 3.5) == 3.5);
    CHECK(eta_lambda(ModelParams(2.7, 1), 0.0) == 0.0);
    CHECK(eta_lambda(ModelParams(0.5, 1), 1.0) == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-12));

    // Series oracle: eta(r) = sum_{k>=1} (2 lambda r)^k / (k! 2 lambda).
    const double lam = 0.3, r = 0.9;
    double term = 1.0, sum = 0.0;
    for (int k = 1; k < 30; ++k) {
        term *= 2.0 * lam * r / k;
        sum += term;
    }
    sum /= 2.0 * lam;
    CHECK(eta_lambda(ModelParams(lam, 1), r) == doctest::Approx(sum).epsilon(1e-14));

    // Continuity across lambda -> 0.
    CHECK(eta_lambda(ModelParams(1e-9, 1), 1.3) == doctest::Approx(1.3).epsilon(1e-8));
}

TEST_CASE("hand-computed products") {
    const ModelParams p0(0.0, 1);
    const GroupElement ha = mul(p0, GroupElement::h1(1, 2, 0), GroupElement::h1(3, -1, 5));
    CHECK(ha.x[0] == 4.0);
    CHECK(ha.y[0] == 1.0);
    CHECK(ha.z == 4.0);

    const ModelParams p1(1.0, 1);
    const GroupElement gb = mul(p1, GroupElement::g1(1, 0, 0), GroupElement::g1(0, 1, std::log(2.0)));
    CHECK(gb.p[0] == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(gb.q[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(gb.r == doctest::Approx(std::log(2.0)));
}

TEST_CASE("hand-computed inverses") {
    const ModelParams p0(0.0, 1);
    const GroupElement hi = inverse(p0, GroupElement::h1(1, 2, 0));
    CHECK(hi.x[0] == -1.0);
    CHECK(hi.y[0] == -2.0);
    CHECK(hi.z == 2.0);

    const GroupElement hti = inverse(p0, GroupElement::htilde1(1, 1, 0, std::log(2.0)));
    CHECK(hti.x[0] == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(hti.y[0] == doctest::Approx(-2.0).epsilon(1e-15));
    CHECK(hti.z == doctest::Approx(1.0));
    CHECK(hti.w == doctest::Approx(-std::log(2.0)));

    CHECK(sup_dist(inverse(p0, GroupElement::identity(GroupKind::Gtilde, 1)),
                   GroupElement::identity(GroupKind::Gtilde, 1)) == 0.0);
}

TEST_CASE("group axioms across kinds, lambdas and dimensions") {
    std::mt19937_64 rng(123);
    for (double lam : {0.0, 0.5, -0.5, 1.0}) {
        for (int n : {1, 3}) {
            const ModelParams params(lam, n);
            for (GroupKind kind : kAllKinds) {
                const GroupElement e = GroupElement::identity(kind, n);
                for (int i = 0; i < 250; ++i) {
                    const GroupElement a = random_element(rng, kind, n);
                    const GroupElement b = random_element(rng, kind, n);
                    const GroupElement c = random_element(rng, kind, n);
                    const GroupElement lhs = mul(params, mul(params, a, b), c);
                    const GroupElement rhs = mul(params, a, mul(params, b, c));
                    const double scale = std::max({1.0, sup_norm(lhs), sup_norm(rhs)});
                    CHECK(sup_dist(lhs, rhs) <= 1e-12 * scale);

                    CHECK(sup_dist(mul(params, e, a), a) == 0.0);
                    CHECK(sup_dist(mul(params, a, e), a) <= 1e-15 * std::max(1.0, sup_norm(a)));

                    const GroupElement ai = inverse(params, a);
                    const double iscale = std::max({1.0, sup_norm(a), sup_norm(ai)});
                    CHECK(sup_dist(mul(params, a, ai), e) <= 1e-12 * iscale);
                    CHECK(sup_dist(mul(params, ai, a), e) <= 1e-12 * iscale);
                }
            }
        }
    }
}

TEST_CASE("embedding and factorization") {
    const ModelParams params(0.5, 1);
    const GroupElement ht = GroupElement::htilde1(1, 2, 3, 4);
    const GroupElement gt = GroupElement::gtilde1(5, 6, 7, 8);

    const GroupElement eh = embed(ht);
    CHECK(eh.x[0] == 1.0);
    CHECK(eh.p[0] == 0.0);
    CHECK(eh.s == 0.0);
    const GroupElement eg = embed(gt);
    CHECK(eg.p[0] == 5.0);
    CHECK(eg.x[0] == 0.0);

    const GroupElement d = GroupElement::double_of(ht, gt);
    const auto [h2, g2] = factorize(d);
    CHECK(sup_dist(h2, ht) == 0.0);
    CHECK(sup_dist(g2, gt) == 0.0);
    // Normal form: d = embed(h) embed(g).
    CHECK(sup_dist(mul(params, embed(h2), embed(g2)), d) == 0.0);

    CHECK(sup_dist(embed(GroupElement::identity(GroupKind::Htilde, 1)),
                   GroupElement::identity(GroupKind::Double, 1)) == 0.0);
}

TEST_CASE("factorize after swapping the embedding order") {
    std::mt19937_64 rng(5);
    const ModelParams params(0.5, 2);
    for (int i = 0; i < 100; ++i) {
        const GroupElement g0 = random_element(rng, GroupKind::Gtilde, 2);
        const GroupElement h0 = random_element(rng, GroupKind::Htilde, 2);
        const GroupElement prod = mul(params, embed(g0), embed(h0));
        const auto [h1, g1] = factorize(prod);
        const GroupElement back = mul(params, embed(h1), embed(g1));
        CHECK(sup_dist(back, prod) <= 1e-12 * std::max(1.0, sup_norm(prod)));
    }
}

TEST_CASE("subgroup closure and normality") {
    std::mt19937_64 rng(9);
    const ModelParams params(0.5, 1);
    for (int i = 0; i < 100; ++i) {
        const GroupElement a = embed(random_element(rng, GroupKind::Htilde, 1));
        const GroupElement b = embed(random_element(rng, GroupKind::Htilde, 1));
        const GroupElement ab = mul(params, a, b);
        CHECK(ab.p[0] == 0.0);
        CHECK(ab.q[0] == 0.0);
        CHECK(ab.r == 0.0);
        CHECK(ab.s == 0.0);

        GroupElement h = random_element(rng, GroupKind::Htilde, 1);
        h.w = 0.0;
        const GroupElement g = random_element(rng, GroupKind::Htilde, 1);
        CHECK(conjugate(params, g, h).w == 0.0);
    }
}

TEST_CASE("kind and dimension mismatches are rejected") {
    const ModelParams params(0.0, 1);
    CHECK_THROWS_AS((void)mul(params, GroupElement::h1(1, 2, 3), GroupElement::g1(1, 2, 3)),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)mul(params, GroupElement::h1(1, 2, 3),
                              GroupElement::h({1, 0}, {0, 1}, 0.0)),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)embed(GroupElement::identity(GroupKind::Double, 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)factorize(GroupElement::h1(0, 0, 0)), std::invalid_argument);
}
