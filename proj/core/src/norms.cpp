#include "strichartz/norms.hpp"

#include <cmath>
#include <stdexcept>

namespace strichartz {

double sup_norm(const SpatialField& f) {
    double sup = 0;
    for (const auto& v : f.values) sup = std::max(sup, std::abs(v));
    return sup;
}

double lebesgue_norm(const SpatialField& f, double inv_r) {
    if (inv_r < 0 || inv_r > 1)
        throw std::invalid_argument("1/r must lie in [0, 1]");
    if (inv_r == 0) return sup_norm(f);
    const double r = 1.0 / inv_r;
    const double v = f.spec.cell_volume();
    double sum = 0;
    if (r == 2.0) {
        for (const auto& z : f.values) sum += std::norm(z);
    } else if (r == 1.0) {
        for (const auto& z : f.values) sum += std::abs(z);
    } else {
        for (const auto& z : f.values) {
            const double abs_sq = std::norm(z);
            if (abs_sq > 0) sum += std::pow(abs_sq, 0.5 * r);
        }
    }
    return std::pow(sum * v, inv_r);
}

double lebesgue_norm(const SpatialField& f, const Rational& inv_r) {
    return lebesgue_norm(f, inv_r.get_d());
}

double mixed_norm(const SpaceTimeField& u, double inv_q, double inv_r) {
    if (inv_q < 0 || inv_q > 1)
        throw std::invalid_argument("1/q must lie in [0, 1]");
    if (inv_q == 0) {
        double sup = 0;
        for (const auto& slice : u.slices)
            sup = std::max(sup, lebesgue_norm(slice, inv_r));
        return sup;
    }
    const double q = 1.0 / inv_q;
    double sum = 0;
    for (const auto& slice : u.slices) {
        const double norm = lebesgue_norm(slice, inv_r);
        if (norm > 0) sum += std::pow(norm, q);
    }
    return std::pow(sum * u.spec.dt, inv_q);
}

double mixed_norm(const SpaceTimeField& u, const Rational& inv_q,
                  const Rational& inv_r) {
    return mixed_norm(u, inv_q.get_d(), inv_r.get_d());
}

Complex inner_product(const SpatialField& f, const SpatialField& g) {
    if (f.values.size() != g.values.size())
        throw std::invalid_argument("inner product on mismatched grids");
    Complex sum(0);
    for (std::size_t i = 0; i < f.values.size(); ++i)
        sum += f.values[i] * std::conj(g.values[i]);
    return sum * f.spec.cell_volume();
}

}  // namespace strichartz
