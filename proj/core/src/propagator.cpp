#include "strichartz/propagator.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "strichartz/dft.hpp"
#include "strichartz/norms.hpp"

namespace strichartz {

double cutoff_value(double xi_abs) {
    if (xi_abs <= 1.0) return 1.0;
    if (xi_abs > 2.0) return 0.0;
    const double c = std::cos(0.5 * std::numbers::pi * (xi_abs - 1.0));
    return c * c;
}

double cutoff_value_from_sq(double xi_sq) {
    return cutoff_value(std::sqrt(xi_sq));
}

Complex composed_localized_multiplier(double xi_sq, double t_minus_s) {
    const double phi = cutoff_value_from_sq(xi_sq);
    const double phase = -t_minus_s * xi_sq;
    return phi * phi * Complex(std::cos(phase), std::sin(phase));
}

SpatialField free_propagate(const SpatialField& f, double t) {
    return apply_radial_multiplier(f, [t](double xi_sq) {
        const double phase = -t * xi_sq;
        return Complex(std::cos(phase), std::sin(phase));
    });
}

SpatialField localized_propagate(const SpatialField& f, double t,
                                 bool conjugate) {
    const double sign = conjugate ? 1.0 : -1.0;
    return apply_radial_multiplier(f, [t, sign](double xi_sq) {
        const double phase = sign * t * xi_sq;
        return cutoff_value_from_sq(xi_sq) *
               Complex(std::cos(phase), std::sin(phase));
    });
}

double dispersive_t_max(const GridSpec& spec) { return spec.extent / 8.0; }

double dispersive_ratio(const SpatialField& f, double t) {
    const double t_max = dispersive_t_max(f.spec);
    if (std::abs(t) > t_max)
        throw std::invalid_argument(
            "dispersive_ratio: |t| exceeds the wrap-around guard L/8");
    const double l1 = lebesgue_norm(f, 1.0);
    if (l1 == 0) throw std::invalid_argument("dispersive_ratio of zero field");
    const SpatialField propagated = localized_propagate(f, t);
    return sup_norm(propagated) *
           std::pow(1.0 + std::abs(t), 0.5 * f.spec.n) / l1;
}

}  // namespace strichartz
