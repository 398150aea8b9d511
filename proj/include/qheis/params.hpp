#pragma once

#include <cmath>
#include <stdexcept>

namespace qheis {

/// Global model context: the deformation constant lambda and the vector
/// dimension n.  Every group/orbit/representation routine takes its params
/// from here rather than from individual elements.
struct ModelParams {
    double lambda = 0.0;
    int n = 1;

    ModelParams() = default;
    ModelParams(double lambda_, int n_) : lambda(lambda_), n(n_) {
        if (n < 1) throw std::invalid_argument("ModelParams: n must be >= 1");
    }
};

/// eta_lambda(r) = (e^{2 lambda r} - 1) / (2 lambda), with the lambda = 0
/// convention eta_0(r) = r.  expm1 keeps the quotient accurate for small
/// |2 lambda r|.
inline double eta_lambda(const ModelParams& params, double r) {
    if (params.lambda == 0.0) return r;
    const double t = 2.0 * params.lambda * r;
    return std::expm1(t) / (2.0 * params.lambda);
}

} // namespace qheis
