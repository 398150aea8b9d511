#include "qheis/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qheis {

std::string to_string(OrbitKind kind) {
    switch (kind) {
        case OrbitKind::G_point: return "G_point";
        case OrbitKind::G_generic: return "G_generic";
        case OrbitKind::Gt_point: return "Gt_point";
        case OrbitKind::Gt_2d: return "Gt_2d";
        case OrbitKind::Gt_generic: return "Gt_generic";
    }
    return "?";
}

namespace {

double norm2(const VecN& v) { return std::sqrt(dot(v, v)); }

bool is_zero_vec(const VecN& v, double tol) {
    for (double t : v)
        if (std::abs(t) > tol) return false;
    return true;
}

} // namespace

Orbit classify_orbit(const ModelParams& params, const GroupElement& mu, double zero_tol) {
    Orbit o;
    o.n = mu.n;
    if (mu.kind == GroupKind::G) {
        if (std::abs(mu.r) > zero_tol) {
            o.kind = OrbitKind::G_generic;
            o.r = mu.r;
            o.dim = 2 * mu.n;
            o.base_point = GroupElement::g(zeros(mu.n), zeros(mu.n), mu.r);
        } else {
            o.kind = OrbitKind::G_point;
            o.pq_p = mu.p;
            o.pq_q = mu.q;
            o.dim = 0;
            o.base_point = GroupElement::g(mu.p, mu.q, 0.0);
        }
        return o;
    }
    if (mu.kind != GroupKind::Gtilde)
        throw std::invalid_argument("classify_orbit expects a G or Gtilde element");

    if (std::abs(mu.r) > zero_tol) {
        o.kind = OrbitKind::Gt_generic;
        o.r = mu.r;
        o.c = mu.s + dot(mu.p, mu.q) / eta_lambda(params, mu.r);
        o.dim = 2 * mu.n;
        o.base_point = GroupElement::gtilde(zeros(mu.n), zeros(mu.n), mu.r, o.c);
        return o;
    }
    const bool pz = is_zero_vec(mu.p, zero_tol), qz = is_zero_vec(mu.q, zero_tol);
    if (pz && qz) {
        o.kind = OrbitKind::Gt_point;
        o.s = mu.s;
        o.dim = 0;
        o.base_point = GroupElement::gtilde(zeros(mu.n), zeros(mu.n), 0.0, mu.s);
        return o;
    }
    // 2-dimensional orbit: fix the scaling ambiguity of the (p, q) labels by
    // scaling to equal norms (or to unit norm when one side vanishes).
    o.kind = OrbitKind::Gt_2d;
    o.dim = 2;
    VecN pc = mu.p, qc = mu.q;
    if (!pz && !qz) {
        const double alpha = std::sqrt(norm2(mu.q) / norm2(mu.p));
        for (double& t : pc) t *= alpha;
        for (double& t : qc) t /= alpha;
    } else if (!pz) {
        const double np = norm2(mu.p);
        for (double& t : pc) t /= np;
    } else {
        const double nq = norm2(mu.q);
        for (double& t : qc) t /= nq;
    }
    o.pq_p = pc;
    o.pq_q = qc;
    o.base_point = GroupElement::gtilde(pc, qc, 0.0, 0.0);
    return o;
}

bool same_orbit(const Orbit& a, const Orbit& b, double rel_tol) {
    if (a.kind != b.kind || a.n != b.n) return false;
    auto close = [&](double u, double v) {
        return std::abs(u - v) <= rel_tol * std::max({1.0, std::abs(u), std::abs(v)});
    };
    auto close_vec = [&](const VecN& u, const VecN& v) {
        if (u.size() != v.size()) return false;
        for (std::size_t i = 0; i < u.size(); ++i)
            if (!close(u[i], v[i])) return false;
        return true;
    };
    switch (a.kind) {
        case OrbitKind::G_point: return close_vec(a.pq_p, b.pq_p) && close_vec(a.pq_q, b.pq_q);
        case OrbitKind::G_generic: return close(a.r, b.r);
        case OrbitKind::Gt_point: return close(a.s, b.s);
        case OrbitKind::Gt_2d: return close_vec(a.pq_p, b.pq_p) && close_vec(a.pq_q, b.pq_q);
        case OrbitKind::Gt_generic: return close(a.r, b.r) && close(a.c, b.c);
    }
    return false;
}

std::vector<GroupElement> stabilizer_basis(const ModelParams& params, const GroupElement& mu) {
    const int n = mu.n;
    std::vector<GroupElement> basis;
    if (mu.kind == GroupKind::G) {
        // Infinitesimal action (eta b, -eta a, 0); c is always free.
        const double eta = eta_lambda(params, mu.r);
        if (eta != 0.0) {
            basis.push_back(GroupElement::h(zeros(n), zeros(n), 1.0));
        } else {
            for (int i = 0; i <= 2 * n; ++i) basis.push_back(lie_coordinate_vector(GroupKind::H, n, i));
        }
        return basis;
    }
    if (mu.kind != GroupKind::Gtilde)
        throw std::invalid_argument("stabilizer_basis expects a G or Gtilde element");

    const double eta = eta_lambda(params, mu.r);
    if (eta != 0.0) {
        // d p = eta b, d q = eta a, p.a = q.b; solved by a = (d/eta) q,
        // b = (d/eta) p with c, d free.
        basis.push_back(GroupElement::htilde(zeros(n), zeros(n), 1.0, 0.0));
        VecN a(n), b(n);
        for (int i = 0; i < n; ++i) {
            a[i] = mu.q[i] / eta;
            b[i] = mu.p[i] / eta;
        }
        basis.push_back(GroupElement::htilde(std::move(a), std::move(b), 0.0, 1.0));
        return basis;
    }
    const bool pz = is_zero_vec(mu.p, 0.0), qz = is_zero_vec(mu.q, 0.0);
    if (pz && qz) {
        for (int i = 0; i < 2 * n + 2; ++i)
            basis.push_back(lie_coordinate_vector(GroupKind::Htilde, n, i));
        return basis;
    }
    // r = 0, (p,q) != 0: d = 0 and one linear constraint p.a - q.b = 0 on
    // (a, b); c stays free.  Null space of the row (p, -q).
    VecN row(2 * n);
    for (int i = 0; i < n; ++i) {
        row[i] = mu.p[i];
        row[n + i] = -mu.q[i];
    }
    int piv = 0;
    for (int i = 1; i < 2 * n; ++i)
        if (std::abs(row[i]) > std::abs(row[piv])) piv = i;
    for (int k = 0; k < 2 * n; ++k) {
        if (k == piv) continue;
        VecN a(n, 0.0), b(n, 0.0);
        auto set_ab = [&](int idx, double val) {
            if (idx < n) a[idx] = val;
            else b[idx - n] = val;
        };
        set_ab(k, 1.0);
        set_ab(piv, -row[k] / row[piv]);
        basis.push_back(GroupElement::htilde(std::move(a), std::move(b), 0.0, 0.0));
    }
    basis.push_back(GroupElement::htilde(zeros(n), zeros(n), 1.0, 0.0));
    return basis;
}

GroupElement lie_coordinate_vector(GroupKind kind, int n, int index) {
    const int dim = (kind == GroupKind::H) ? 2 * n + 1 : 2 * n + 2;
    if (index < 0 || index >= dim) throw std::out_of_range("lie_coordinate_vector index");
    VecN x = zeros(n), y = zeros(n);
    double z = 0.0, w = 0.0;
    if (index < n) x[index] = 1.0;
    else if (index < 2 * n) y[index - n] = 1.0;
    else if (index == 2 * n) z = 1.0;
    else w = 1.0;
    if (kind == GroupKind::H) return GroupElement::h(std::move(x), std::move(y), z);
    return GroupElement::htilde(std::move(x), std::move(y), z, w);
}

namespace {

// Row-reduce the stabilizer vectors to find their pivot coordinates; the
// complementary coordinates represent V = h-tilde / r_mu.
std::vector<int> pivot_columns(std::vector<std::vector<double>> rows, int ncols) {
    std::vector<int> pivots;
    int lead = 0;
    for (std::size_t rr = 0; rr < rows.size() && lead < ncols; ++rr) {
        int prow = -1;
        while (lead < ncols) {
            prow = -1;
            double best = 1e-10;
            for (std::size_t i = rr; i < rows.size(); ++i) {
                if (std::abs(rows[i][lead]) > best) {
                    best = std::abs(rows[i][lead]);
                    prow = static_cast<int>(i);
                }
            }
            if (prow >= 0) break;
            ++lead;
        }
        if (lead >= ncols) break;
        std::swap(rows[rr], rows[static_cast<std::size_t>(prow)]);
        pivots.push_back(lead);
        const double d = rows[rr][lead];
        for (double& t : rows[rr]) t /= d;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rr) continue;
            const double f = rows[i][lead];
            if (f == 0.0) continue;
            for (int j = 0; j < ncols; ++j) rows[i][j] -= f * rows[rr][j];
        }
        ++lead;
    }
    return pivots;
}

std::vector<double> lie_coords(const GroupElement& v) {
    std::vector<double> out;
    out.insert(out.end(), v.x.begin(), v.x.end());
    out.insert(out.end(), v.y.begin(), v.y.end());
    out.push_back(v.z);
    if (v.kind == GroupKind::Htilde) out.push_back(v.w);
    return out;
}

} // namespace

std::vector<int> complement_coordinates(const ModelParams& params, const GroupElement& mu) {
    const auto stab = stabilizer_basis(params, mu);
    const int dim = (mu.kind == GroupKind::G) ? 2 * mu.n + 1 : 2 * mu.n + 2;
    std::vector<std::vector<double>> rows;
    rows.reserve(stab.size());
    for (const auto& v : stab) rows.push_back(lie_coords(v));
    const auto pivots = pivot_columns(std::move(rows), dim);
    std::vector<int> complement;
    for (int j = 0; j < dim; ++j)
        if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) complement.push_back(j);
    return complement;
}

std::vector<std::vector<double>> b_matrix(const ModelParams& params, const GroupElement& mu) {
    const auto idx = complement_coordinates(params, mu);
    const int k = static_cast<int>(idx.size());
    if (k == 0) throw std::invalid_argument("b_matrix: orbit through mu is 0-dimensional");
    const GroupKind lie_kind = (mu.kind == GroupKind::G) ? GroupKind::H : GroupKind::Htilde;
    std::vector<std::vector<double>> B(k, std::vector<double>(k, 0.0));
    for (int i = 0; i < k; ++i) {
        const GroupElement Xi = lie_coordinate_vector(lie_kind, mu.n, idx[i]);
        for (int j = 0; j < k; ++j) {
            const GroupElement Xj = lie_coordinate_vector(lie_kind, mu.n, idx[j]);
            B[i][j] = poisson_bracket(params, mu, Xi, Xj);
        }
    }
    if (std::abs(det_small(B)) < 1e-12)
        throw std::runtime_error("b_matrix: degenerate form on a positive-dimensional orbit");
    return B;
}

double det_small(const std::vector<std::vector<double>>& m) {
    auto a = m;
    const int k = static_cast<int>(a.size());
    double det = 1.0;
    for (int col = 0; col < k; ++col) {
        int piv = col;
        for (int i = col + 1; i < k; ++i)
            if (std::abs(a[i][col]) > std::abs(a[piv][col])) piv = i;
        if (a[piv][col] == 0.0) return 0.0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (int i = col + 1; i < k; ++i) {
            const double f = a[i][col] / a[col][col];
            for (int j = col; j < k; ++j) a[i][j] -= f * a[col][j];
        }
    }
    return det;
}

CanonicalMeasures canonical_measures(const ModelParams& params, const Orbit& orbit) {
    if (orbit.dim == 0)
        throw std::invalid_argument("canonical_measures: orbit must have positive dimension");
    const auto B = b_matrix(params, orbit.base_point);
    const double d = std::abs(det_small(B));
    if (d == 0.0) throw std::runtime_error("canonical_measures: zero determinant");
    const double root = std::sqrt(d);
    return CanonicalMeasures{root, 1.0 / root};
}

std::vector<std::pair<double, double>> orbit_trace(const ModelParams& params,
                                                   const GroupElement& mu, int samples,
                                                   double zero_tol) {
    const Orbit o = classify_orbit(params, mu, zero_tol);
    std::vector<std::pair<double, double>> pts;
    if (o.kind == OrbitKind::Gt_point || o.kind == OrbitKind::G_point) {
        pts.emplace_back(o.pq_p.empty() ? 0.0 : o.pq_p[0], o.pq_q.empty() ? 0.0 : o.pq_q[0]);
        return pts;
    }
    if (o.kind != OrbitKind::Gt_2d)
        throw std::invalid_argument("orbit_trace supports point orbits and 2-dimensional Gtilde orbits");
    // (alpha p, q / alpha) over a log-spaced range of alpha > 0.
    const double lo = -3.0, hi = 3.0;
    for (int i = 0; i < samples; ++i) {
        const double alpha = std::exp(lo + (hi - lo) * i / (samples - 1.0));
        pts.emplace_back(alpha * o.pq_p[0], o.pq_q[0] / alpha);
    }
    return pts;
}

} // namespace qheis
