#include "qheis/polynomial.hpp"

#include <cmath>
#include <stdexcept>

namespace qheis {

MultiPoly MultiPoly::constant(int nvars, cplx c) {
    MultiPoly p(nvars);
    if (c != cplx(0.0)) p.terms_[std::vector<int>(static_cast<std::size_t>(nvars), 0)] = c;
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw std::out_of_range("MultiPoly::variable");
    MultiPoly p(nvars);
    std::vector<int> mono(static_cast<std::size_t>(nvars), 0);
    mono[static_cast<std::size_t>(i)] = 1;
    p.terms_[mono] = cplx(1.0);
    return p;
}

void MultiPoly::add_term(const std::vector<int>& mono, cplx coeff) {
    if (static_cast<int>(mono.size()) != nvars_) throw std::invalid_argument("MultiPoly::add_term");
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        if (coeff != cplx(0.0)) terms_[mono] = coeff;
    } else {
        it->second += coeff;
        if (it->second == cplx(0.0)) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
    if (other.nvars_ != nvars_) throw std::invalid_argument("MultiPoly: mixed variable counts");
    for (const auto& [mono, c] : other.terms_) add_term(mono, c);
    return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& other) const {
    MultiPoly out = *this;
    out += other;
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
    if (other.nvars_ != nvars_) throw std::invalid_argument("MultiPoly: mixed variable counts");
    MultiPoly out(nvars_);
    std::vector<int> mono(static_cast<std::size_t>(nvars_));
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : other.terms_) {
            for (int i = 0; i < nvars_; ++i)
                mono[static_cast<std::size_t>(i)] =
                    ma[static_cast<std::size_t>(i)] + mb[static_cast<std::size_t>(i)];
            out.add_term(mono, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::scaled(cplx c) const {
    MultiPoly out(nvars_);
    if (c == cplx(0.0)) return out;
    for (const auto& [mono, coeff] : terms_) out.terms_[mono] = coeff * c;
    return out;
}

MultiPoly MultiPoly::conjugated() const {
    MultiPoly out(nvars_);
    for (const auto& [mono, coeff] : terms_) out.terms_[mono] = std::conj(coeff);
    return out;
}

cplx MultiPoly::eval(std::span<const cplx> v) const {
    cplx acc(0.0);
    for (const auto& [mono, coeff] : terms_) {
        cplx t = coeff;
        for (int i = 0; i < nvars_; ++i) {
            const int e = mono[static_cast<std::size_t>(i)];
            for (int k = 0; k < e; ++k) t *= v[static_cast<std::size_t>(i)];
        }
        acc += t;
    }
    return acc;
}

cplx MultiPoly::eval_real(std::span<const double> v) const {
    cplx acc(0.0);
    for (const auto& [mono, coeff] : terms_) {
        double t = 1.0;
        for (int i = 0; i < nvars_; ++i) {
            const int e = mono[static_cast<std::size_t>(i)];
            for (int k = 0; k < e; ++k) t *= v[static_cast<std::size_t>(i)];
        }
        acc += coeff * t;
    }
    return acc;
}

std::vector<MultiPoly> MultiPoly::split_last_variable() const {
    if (nvars_ == 0) throw std::logic_error("split_last_variable on 0 variables");
    int max_deg = 0;
    for (const auto& [mono, c] : terms_)
        max_deg = std::max(max_deg, mono[static_cast<std::size_t>(nvars_ - 1)]);
    std::vector<MultiPoly> out(static_cast<std::size_t>(max_deg) + 1, MultiPoly(nvars_ - 1));
    for (const auto& [mono, c] : terms_) {
        std::vector<int> rest(mono.begin(), mono.end() - 1);
        out[static_cast<std::size_t>(mono[static_cast<std::size_t>(nvars_ - 1)])].add_term(rest, c);
    }
    return out;
}

MultiPoly MultiPoly::substituted(const std::vector<std::vector<cplx>>& map,
                                 const std::vector<cplx>& shift, int new_nvars) const {
    if (static_cast<int>(map.size()) != nvars_ || static_cast<int>(shift.size()) != nvars_)
        throw std::invalid_argument("MultiPoly::substituted: bad map shape");
    // Affine image of each old variable as a degree-1 polynomial.
    std::vector<MultiPoly> image;
    image.reserve(static_cast<std::size_t>(nvars_));
    for (int i = 0; i < nvars_; ++i) {
        MultiPoly lin = MultiPoly::constant(new_nvars, shift[static_cast<std::size_t>(i)]);
        for (int j = 0; j < new_nvars; ++j) {
            const cplx m = map[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (m != cplx(0.0)) lin += MultiPoly::variable(new_nvars, j).scaled(m);
        }
        image.push_back(std::move(lin));
    }
    MultiPoly out(new_nvars);
    for (const auto& [mono, coeff] : terms_) {
        MultiPoly prod = MultiPoly::constant(new_nvars, coeff);
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < mono[static_cast<std::size_t>(i)]; ++k)
                prod = prod * image[static_cast<std::size_t>(i)];
        out += prod;
    }
    return out;
}

void MultiPoly::prune(double eps) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (std::abs(it->second) <= eps) it = terms_.erase(it);
        else ++it;
    }
}

} // namespace qheis
