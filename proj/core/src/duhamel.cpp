#include "strichartz/duhamel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "strichartz/dft.hpp"
#include "strichartz/norms.hpp"
#include "strichartz/propagator.hpp"

namespace strichartz {

namespace {

constexpr double kPi = std::numbers::pi;

// Shared spectral accumulation: J_hat(m+1) = e^{-i dt |xi|^2} (J_hat(m)
// + dt F_hat(m)), so J_hat(m) holds sum_{l<m} e^{-i(t_m - s_l)|xi|^2}
// F_hat(l) dt exactly. The phi^2 localization is applied once at readout
// since it does not participate in the per-step propagation.
SpaceTimeField duhamel_sum(const SpaceTimeField& F, bool localized) {
    const GridSpec& spec = F.spec;
    const std::size_t cells = spec.cells();
    const auto& xi_sq = mode_frequency_sq_table(spec);

    std::vector<Complex> step(cells);
    for (std::size_t i = 0; i < cells; ++i) {
        const double phase = -spec.dt * xi_sq[i];
        step[i] = Complex(std::cos(phase), std::sin(phase));
    }
    std::vector<double> phi_sq;
    if (localized) {
        phi_sq.resize(cells);
        for (std::size_t i = 0; i < cells; ++i) {
            const double phi = cutoff_value_from_sq(xi_sq[i]);
            phi_sq[i] = phi * phi;
        }
    }

    SpaceTimeField out;
    out.spec = spec;
    out.slices.reserve(F.slices.size());

    std::vector<Complex> acc(cells, Complex(0));
    std::vector<Complex> hat(cells);
    std::vector<Complex> readout(cells);
    const double inv_cells = 1.0 / static_cast<double>(cells);

    for (std::size_t m = 0; m < F.slices.size(); ++m) {
        SpatialField slice(spec);
        if (m > 0) {
            if (localized) {
                for (std::size_t i = 0; i < cells; ++i)
                    readout[i] = acc[i] * phi_sq[i];
                dft_backward_raw(spec, readout.data(), slice.values.data());
            } else {
                dft_backward_raw(spec, acc.data(), slice.values.data());
            }
            for (auto& v : slice.values) v *= inv_cells;
        }
        out.slices.push_back(std::move(slice));

        if (m + 1 < F.slices.size()) {
            dft_forward_raw(spec, F.slices[m].values.data(), hat.data());
            for (std::size_t i = 0; i < cells; ++i)
                acc[i] = step[i] * (acc[i] + spec.dt * hat[i]);
        }
    }
    return out;
}

}  // namespace

SpaceTimeField retarded(const SpaceTimeField& F, bool localized) {
    if (F.slices.empty())
        throw std::invalid_argument("retarded: empty space-time field");
    return duhamel_sum(F, localized);
}

SpaceTimeField full_line_retarded(const SpaceTimeField& F) {
    if (F.slices.empty())
        throw std::invalid_argument(
            "full_line_retarded: empty space-time field");
    if (sup_norm(F.slices.front()) != 0)
        throw std::invalid_argument(
            "full_line_retarded: F must vanish at the window start");
    return duhamel_sum(F, false);
}

PhaseSplit phase_split(std::span<const double> x, std::span<const double> y,
                       double s, double t) {
    if (x.size() != y.size())
        throw std::invalid_argument("phase_split: dimension mismatch");
    if (t == 0.0 || t == s)
        throw std::invalid_argument("phase_split requires t != 0 and t != s");
    double x_sq = 0, diff_sq = 0;
    for (std::size_t d = 0; d < x.size(); ++d) {
        x_sq += x[d] * x[d];
        const double diff = x[d] - y[d];
        diff_sq += diff * diff;
    }
    PhaseSplit out;
    out.main = x_sq / (4.0 * t);
    out.remainder =
        (t * (diff_sq - x_sq) + s * x_sq) / (4.0 * t * (t - s));
    return out;
}

double unit_ball_volume(int n) {
    switch (n) {
        case 1: return 2.0;
        case 2: return kPi;
        case 3: return 4.0 * kPi / 3.0;
    }
    throw std::invalid_argument("unit_ball_volume: n must be 1, 2 or 3");
}

double unit_sphere_area(int n) {
    switch (n) {
        case 1: return 2.0;  // S^0 = two points
        case 2: return 2.0 * kPi;
        case 3: return 4.0 * kPi;
    }
    throw std::invalid_argument("unit_sphere_area: n must be 1, 2 or 3");
}

namespace {

// One midpoint tensor rule at a fixed resolution. The phase factorizes per
// axis for fixed s, so each s-node costs n small exp tables plus one pass
// over the ball mask.
Complex kernel_rule(std::span<const double> x, double t, double eps, int n,
                    int m_y, int m_s) {
    const double dy = 2.0 * eps / m_y;
    const double ds = eps * eps / m_s;
    const double eps_sq = eps * eps;

    std::vector<double> y_nodes(m_y);
    for (int i = 0; i < m_y; ++i) y_nodes[i] = -eps + (i + 0.5) * dy;

    // Ball indicator on cell midpoints, flattened row-major.
    std::size_t cells = 1;
    for (int d = 0; d < n; ++d) cells *= static_cast<std::size_t>(m_y);
    std::vector<bool> mask(cells);
    std::vector<double> y_sq(m_y);
    for (int i = 0; i < m_y; ++i) y_sq[i] = y_nodes[i] * y_nodes[i];
    for (std::size_t flat = 0; flat < cells; ++flat) {
        auto idx = flat;
        double r_sq = 0;
        for (int d = 0; d < n; ++d) {
            r_sq += y_sq[idx % m_y];
            idx /= m_y;
        }
        mask[flat] = r_sq < eps_sq;
    }

    std::vector<Complex> axis_table(static_cast<std::size_t>(n) * m_y);
    Complex total(0);
    for (int is = 0; is < m_s; ++is) {
        const double s = (is + 0.5) * ds;
        const double u = t - s;
        const double c = 1.0 / (4.0 * u);
        for (int d = 0; d < n; ++d)
            for (int i = 0; i < m_y; ++i) {
                const double diff = x[d] - y_nodes[i];
                const double phase = c * diff * diff;
                axis_table[static_cast<std::size_t>(d) * m_y + i] =
                    Complex(std::cos(phase), std::sin(phase));
            }
        Complex slab(0);
        for (std::size_t flat = 0; flat < cells; ++flat) {
            if (!mask[flat]) continue;
            auto idx = flat;
            Complex prod(1);
            for (int d = 0; d < n; ++d) {
                prod *= axis_table[static_cast<std::size_t>(d) * m_y +
                                   (idx % m_y)];
                idx /= m_y;
            }
            slab += prod;
        }
        total += slab * std::pow(u, -0.5 * n);
    }

    double volume_element = ds;
    for (int d = 0; d < n; ++d) volume_element *= dy;
    return total * volume_element * std::pow(4.0 * kPi, -0.5 * n);
}

}  // namespace

KernelValue kernel_duhamel(std::span<const double> x, double t, double eps,
                           int n, const KernelQuadrature& quad) {
    if (n < 1 || n > 3)
        throw std::invalid_argument("kernel_duhamel: n must be 1, 2 or 3");
    if (x.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("kernel_duhamel: x has wrong dimension");
    if (!(eps > 0.0 && eps < 0.5))
        throw std::invalid_argument("kernel_duhamel requires 0 < eps < 1/2");
    if (!(t > eps * eps))
        throw std::invalid_argument(
            "kernel_duhamel requires t > eps^2 (kernel singularity)");
    if (quad.y_points < 4 || quad.s_points < 2)
        throw std::invalid_argument("kernel_duhamel: resolution too coarse");

    const Complex fine = kernel_rule(x, t, eps, n, quad.y_points,
                                     quad.s_points);
    const Complex coarse =
        kernel_rule(x, t, eps, n, std::max(2, quad.y_points / 2),
                    std::max(1, quad.s_points / 2));
    KernelValue out;
    out.value = fine;
    out.error_estimate = 1.25 * std::abs(fine - coarse) +
                         1e-14 * std::abs(fine);
    return out;
}

double shell_lebesgue_norm(double t, double eps, int n, double inv_r,
                           int radial_samples, const KernelQuadrature& quad) {
    if (inv_r < 0 || inv_r > 1)
        throw std::invalid_argument("shell norm: 1/r must lie in [0, 1]");
    if (radial_samples < 2)
        throw std::invalid_argument("shell norm: need >= 2 radial samples");
    const double rho_lo = 1.0 / eps - eps;
    const double rho_hi = 1.0 / eps + eps;
    const double d_rho = (rho_hi - rho_lo) / radial_samples;
    const double area = unit_sphere_area(n);

    double sup = 0;
    double sum = 0;
    const double r = inv_r > 0 ? 1.0 / inv_r : 0.0;
    for (int i = 0; i < radial_samples; ++i) {
        const double rho = rho_lo + (i + 0.5) * d_rho;
        double x[3] = {rho, 0, 0};
        const double magnitude =
            std::abs(kernel_duhamel(std::span<const double>(x, n), t, eps, n,
                                    quad)
                         .value);
        if (inv_r == 0) {
            sup = std::max(sup, magnitude);
        } else {
            sum += std::pow(magnitude, r) * area * std::pow(rho, n - 1) *
                   d_rho;
        }
    }
    return inv_r == 0 ? sup : std::pow(sum, inv_r);
}

double shell_volume(double eps, int n) {
    const double rho_lo = 1.0 / eps - eps;
    const double rho_hi = 1.0 / eps + eps;
    return unit_ball_volume(n) *
           (std::pow(rho_hi, n) - std::pow(rho_lo, n));
}

}  // namespace strichartz
