#pragma once

#include <cmath>
#include <stdexcept>

namespace qheis {

/// C-infinity plateau bump: exactly 1 on [plateau_lo, plateau_hi], exactly 0
/// outside (lo, hi), glued with the standard exp(-1/t) smoothstep.
class Bump {
public:
    Bump() : lo_(-2.0), plo_(-1.0), phi_(1.0), hi_(2.0) {}
    Bump(double lo, double plateau_lo, double plateau_hi, double hi)
        : lo_(lo), plo_(plateau_lo), phi_(plateau_hi), hi_(hi) {
        if (!(lo < plateau_lo && plateau_lo <= plateau_hi && plateau_hi < hi))
            throw std::invalid_argument("Bump: need lo < plateau_lo <= plateau_hi < hi");
    }

    double operator()(double t) const {
        if (t <= lo_ || t >= hi_) return 0.0;
        if (t >= plo_ && t <= phi_) return 1.0;
        if (t < plo_) return step((t - lo_) / (plo_ - lo_));
        return step((hi_ - t) / (hi_ - phi_));
    }

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    double plateau_lo() const { return plo_; }
    double plateau_hi() const { return phi_; }

private:
    static double side(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }
    static double step(double t) {
        const double a = side(t), b = side(1.0 - t);
        return a / (a + b);
    }

    double lo_, plo_, phi_, hi_;
};

} // namespace qheis
