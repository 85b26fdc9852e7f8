#include "strichartz/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "strichartz/random.hpp"

namespace strichartz {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

}  // namespace

GridSpec GridSpec::make(int n, int points_per_axis, double extent, double dt,
                        double t0, double t1) {
    if (n < 1 || n > 3)
        throw std::invalid_argument("spatial dimension must be 1, 2 or 3");
    if (!is_power_of_two(points_per_axis))
        throw std::invalid_argument("points_per_axis must be a power of two");
    if (!(extent > 0)) throw std::invalid_argument("extent must be positive");
    GridSpec spec{n, points_per_axis, extent, dt, t0, t1};
    if (spec.mode_spacing() > 0.25)
        throw std::invalid_argument(
            "frequency spacing 2*pi/L exceeds 1/4; the cutoff annulus would "
            "be under-resolved (need L >= 8*pi)");
    if (spec.nyquist_frequency() < 4.0)
        throw std::invalid_argument(
            "Nyquist frequency pi*N/L below 4; band |xi| <= 2 needs 2x "
            "margin");
    if (!(dt > 0)) throw std::invalid_argument("dt must be positive");
    if (!(t1 > t0)) throw std::invalid_argument("empty time window");
    const double steps = (t1 - t0) / dt;
    if (std::abs(steps - std::round(steps)) > 1e-9 * std::max(1.0, steps))
        throw std::invalid_argument(
            "time window length must be an integer multiple of dt");
    return spec;
}

GridSpec GridSpec::spatial(int n, int points_per_axis, double extent) {
    return make(n, points_per_axis, extent, 1.0, 0.0, 1.0);
}

GridSpec GridSpec::desk_scale(int n) {
    const double extent = 16.0 * kPi;
    const int points = n == 1 ? 1024 : (n == 2 ? 256 : 64);
    const double dt = 0.125;
    // Largest whole-step window inside the wrap-around guard [0, L/8).
    const double t1 = std::floor(extent / 8.0 / dt) * dt;
    return make(n, points, extent, dt, 0.0, t1);
}

std::size_t GridSpec::cells() const {
    std::size_t c = 1;
    for (int d = 0; d < n; ++d) c *= static_cast<std::size_t>(points_per_axis);
    return c;
}

double GridSpec::cell_volume() const {
    double v = 1;
    for (int d = 0; d < n; ++d) v *= cell_width();
    return v;
}

double GridSpec::mode_spacing() const { return 2.0 * kPi / extent; }

double GridSpec::nyquist_frequency() const {
    return kPi * points_per_axis / extent;
}

int GridSpec::time_steps() const {
    return static_cast<int>(std::llround((t1 - t0) / dt));
}

int GridSpec::signed_index(int i) const {
    return i < points_per_axis / 2 ? i : i - points_per_axis;
}

std::array<double, 3> GridSpec::mode_frequency(std::size_t flat) const {
    std::array<double, 3> xi{0, 0, 0};
    const double spacing = mode_spacing();
    auto idx = flat;
    for (int d = n - 1; d >= 0; --d) {
        const int i = static_cast<int>(idx % points_per_axis);
        idx /= points_per_axis;
        xi[d] = spacing * signed_index(i);
    }
    return xi;
}

double GridSpec::mode_frequency_sq(std::size_t flat) const {
    const auto xi = mode_frequency(flat);
    return xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2];
}

std::array<double, 3> GridSpec::position(std::size_t flat) const {
    std::array<double, 3> x{0, 0, 0};
    const double h = cell_width();
    auto idx = flat;
    for (int d = n - 1; d >= 0; --d) {
        const int i = static_cast<int>(idx % points_per_axis);
        idx /= points_per_axis;
        x[d] = h * i;
    }
    return x;
}

SpatialField::SpatialField(GridSpec s, std::vector<Complex> v)
    : spec(s), values(std::move(v)) {
    if (values.size() != spec.cells())
        throw std::invalid_argument(
            "field value count does not match the grid (" +
            std::to_string(values.size()) + " vs " +
            std::to_string(spec.cells()) + ")");
}

SpaceTimeField::SpaceTimeField(GridSpec s) : spec(s) {
    slices.reserve(static_cast<std::size_t>(spec.time_steps()));
    for (int i = 0; i < spec.time_steps(); ++i) slices.emplace_back(spec);
}

SpatialField constant_field(const GridSpec& spec, Complex value) {
    SpatialField f(spec);
    for (auto& v : f.values) v = value;
    return f;
}

SpatialField harmonic_field(const GridSpec& spec, std::array<int, 3> k) {
    SpatialField f(spec);
    const double spacing = spec.mode_spacing();
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        const auto x = spec.position(i);
        double phase = 0;
        for (int d = 0; d < spec.n; ++d) phase += spacing * k[d] * x[d];
        f.values[i] = Complex(std::cos(phase), std::sin(phase));
    }
    return f;
}

SpatialField gaussian_bump(const GridSpec& spec, std::array<double, 3> center,
                           double sigma) {
    SpatialField f(spec);
    const double L = spec.extent;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        const auto x = spec.position(i);
        double dist_sq = 0;
        for (int d = 0; d < spec.n; ++d) {
            // Nearest periodic image.
            double dx = std::fmod(x[d] - center[d] + 1.5 * L, L) - 0.5 * L;
            dist_sq += dx * dx;
        }
        f.values[i] = std::exp(-dist_sq / (2.0 * sigma * sigma));
    }
    return f;
}

SpatialField random_field(const GridSpec& spec, Rng& rng) {
    SpatialField f(spec);
    for (auto& v : f.values) v = rng.complex_gaussian();
    return f;
}

}  // namespace strichartz
