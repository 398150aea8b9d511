#include "qheis/moyal.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qheis {

namespace {

constexpr cplx kTwoPiI{0.0, 2.0 * std::numbers::pi};

void require_generic(const OrbitFunction& phi, const char* what) {
    if (phi.is_point()) throw std::invalid_argument(std::string(what) + ": expects a 2n-dimensional orbit");
    if (phi.orbit.kind != OrbitKind::G_generic)
        throw std::invalid_argument(std::string(what) + ": expects an orbit of G");
}

void require_same_orbit(const OrbitFunction& a, const OrbitFunction& b, const char* what) {
    if (!same_orbit(a.orbit, b.orbit))
        throw std::invalid_argument(std::string(what) + ": orbit mismatch");
}

} // namespace

OrbitFunction orbit_function_from_schwartz(const ModelParams& params, const SchwartzA& f,
                                           const Orbit& orbit) {
    OrbitFunction phi;
    phi.orbit = orbit;
    if (orbit.kind == OrbitKind::G_generic) {
        phi.pq = partial_fourier_slice(params, f, orbit.r);
        return phi;
    }
    if (orbit.kind == OrbitKind::G_point) {
        const GaussianExpr fhat = partial_fourier_slice(params, f, 0.0);
        std::vector<double> v;
        v.insert(v.end(), orbit.pq_p.begin(), orbit.pq_p.end());
        v.insert(v.end(), orbit.pq_q.begin(), orbit.pq_q.end());
        phi.point_value = fhat.eval(v);
        return phi;
    }
    throw std::invalid_argument("orbit_function_from_schwartz: expects an orbit of G");
}

OrbitFunction orbit_function(const Orbit& orbit, GaussianExpr pq) {
    OrbitFunction phi;
    phi.orbit = orbit;
    phi.pq = std::move(pq);
    if (orbit.dim > 0 && phi.pq.nvars() != 2 * orbit.n)
        throw std::invalid_argument("orbit_function: expression must have 2n variables");
    return phi;
}

GridOperator q_map(const ModelParams& params, const OrbitFunction& phi, const Grid& grid) {
    require_generic(phi, "q_map");
    return kernel_from_orbit_symbol(params, phi.pq, phi.orbit.r, grid);
}

cplx q_map_point(const OrbitFunction& phi) {
    if (!phi.is_point()) throw std::invalid_argument("q_map_point: expects a point orbit");
    return phi.point_value;
}

double orbit_l2_norm_sq(const ModelParams& params, const OrbitFunction& phi) {
    if (phi.is_point()) return std::norm(phi.point_value);
    const double eta = eta_lambda(params, phi.orbit.r);
    const cplx v = (phi.pq * phi.pq.conjugated()).integrate_all();
    return v.real() / std::pow(std::abs(eta), phi.orbit.n);
}

OrbitFunction moyal_product(const ModelParams& params, const OrbitFunction& phi,
                            const OrbitFunction& psi, double hbar) {
    require_same_orbit(phi, psi, "moyal_product");
    if (!(hbar > 0.0 && hbar <= 1.0)) throw std::invalid_argument("moyal_product: hbar in (0, 1]");
    if (phi.is_point()) {
        OrbitFunction out;
        out.orbit = phi.orbit;
        out.point_value = phi.point_value * psi.point_value;
        return out;
    }
    require_generic(phi, "moyal_product");
    if (phi.orbit.n != 1) throw std::invalid_argument("moyal_product: desk scale n = 1");
    // Scaling the skew form by hbar turns the kernel into
    //   int phi(pt, b) psi(a, b + hbar eta xt) e[(pt - a) xt] dpt dxt.
    // Substituting u = pt - a and expanding psi around b shows the hbar^0
    // term is phi(a, b) psi(a, b) by Fourier inversion, and the remainder is
    // O(hbar eta): the pointwise product is recovered linearly as hbar -> 0.
    const double eta = hbar * eta_lambda(params, phi.orbit.r);

    // Joint variables (a, b, xt, pt).
    CMat mphi = cmat_zero(2, 4); // phi(pt, b)
    mphi[0][3] = cplx(1.0);
    mphi[1][1] = cplx(1.0);
    CMat mpsi = cmat_zero(2, 4); // psi(a, b + eta xt)
    mpsi[0][0] = cplx(1.0);
    mpsi[1][1] = cplx(1.0);
    mpsi[1][2] = cplx(eta);
    GaussianExpr joint = phi.pq.substituted(mphi, cvec_zero(2), 4) *
                         psi.pq.substituted(mpsi, cvec_zero(2), 4);
    joint = joint.times_bilinear_exp(3, 2, kTwoPiI);  // e(pt xt)
    joint = joint.times_bilinear_exp(0, 2, -kTwoPiI); // ebar(a xt)

    OrbitFunction out;
    out.orbit = phi.orbit;
    out.pq = joint.integrate_last(2);
    out.pq.enforce_term_cap(4096);
    return out;
}

OrbitFunction moyal_involution(const ModelParams& params, const OrbitFunction& psi) {
    if (psi.is_point()) {
        OrbitFunction out;
        out.orbit = psi.orbit;
        out.point_value = std::conj(psi.point_value);
        return out;
    }
    require_generic(psi, "moyal_involution");
    if (psi.orbit.n != 1) throw std::invalid_argument("moyal_involution: desk scale n = 1");
    const double eta = eta_lambda(params, psi.orbit.r);

    // Joint variables (a, b, x, y, pt, qt); integrate qt, pt, y, x.
    CMat m = cmat_zero(2, 6);
    m[0][4] = cplx(1.0);
    m[1][5] = cplx(1.0);
    GaussianExpr joint = psi.pq.conjugated().substituted(m, cvec_zero(2), 6);
    joint = joint.times_bilinear_exp(0, 2, -kTwoPiI);       // ebar(a x)
    joint = joint.times_bilinear_exp(4, 2, kTwoPiI);        // e(pt x)
    joint = joint.times_bilinear_exp(1, 3, -kTwoPiI);       // ebar(b y)
    joint = joint.times_bilinear_exp(5, 3, kTwoPiI);        // e(qt y)
    joint = joint.times_bilinear_exp(2, 3, -kTwoPiI * eta); // ebar(eta x y)

    OrbitFunction out;
    out.orbit = psi.orbit;
    out.pq = joint.integrate_last(4);
    out.pq.enforce_term_cap(4096);
    return out;
}

cplx orbit_function_value(const OrbitFunction& phi, double p, double q) {
    if (phi.is_point()) return phi.point_value;
    const double v[2] = {p, q};
    return phi.pq.eval(std::span<const double>(v, 2));
}

} // namespace qheis
