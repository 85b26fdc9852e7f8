#pragma once

// Periodic spatial grids and sampled complex fields: the measurement
// substrate for every numerical experiment in this project. Fields are plain
// value types; all operations on them are pure.

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace strichartz {

class Rng;

using Complex = std::complex<double>;

// Torus [0, L)^n sampled with points_per_axis cells per axis, plus the time
// discretization shared by space-time fields. The frequency lattice has
// spacing 2*pi/L; construction enforces
//   2*pi/L <= 1/4            (the unit cutoff annulus is resolved), and
//   pi*points_per_axis/L >= 4 (band |xi| <= 2 sits inside Nyquist with 2x
//                              margin).
struct GridSpec {
    int n = 1;               // spatial dimension, 1..3
    int points_per_axis = 0; // power of two
    double extent = 0;       // torus side length L
    double dt = 0;
    double t0 = 0;           // half-open time window [t0, t1)
    double t1 = 0;

    static GridSpec make(int n, int points_per_axis, double extent, double dt,
                         double t0, double t1);
    // Spatial-only grid with a trivial one-step window.
    static GridSpec spatial(int n, int points_per_axis, double extent);
    // Desk-scale defaults: 1024 / 256^2 / 64^3 points, L = 16*pi, dt = 1/8,
    // window [0, L/8).
    static GridSpec desk_scale(int n);

    std::size_t cells() const;
    double cell_width() const { return extent / points_per_axis; }
    double cell_volume() const;
    double mode_spacing() const;           // 2*pi / L
    double nyquist_frequency() const;      // pi * points_per_axis / L
    int time_steps() const;                // slices in [t0, t1)
    double time_at(int i) const { return t0 + i * dt; }

    // Signed lattice coordinate of axis index i: i for i < N/2, i - N after.
    int signed_index(int i) const;
    // Frequency vector of the row-major flat mode index (unused axes 0).
    std::array<double, 3> mode_frequency(std::size_t flat) const;
    double mode_frequency_sq(std::size_t flat) const;
    // Position of the row-major flat cell index.
    std::array<double, 3> position(std::size_t flat) const;

    bool operator==(const GridSpec&) const = default;
};

struct SpatialField {
    GridSpec spec;
    std::vector<Complex> values;  // row-major, spec.cells() entries

    SpatialField() = default;
    explicit SpatialField(GridSpec s)
        : spec(s), values(s.cells(), Complex(0)) {}
    SpatialField(GridSpec s, std::vector<Complex> v);
};

// Time-indexed stack of spatial slices; slice i sits at spec.time_at(i) and
// the stamps are uniform by construction.
struct SpaceTimeField {
    GridSpec spec;
    std::vector<SpatialField> slices;

    SpaceTimeField() = default;
    explicit SpaceTimeField(GridSpec s);
    double time_at(int i) const { return spec.time_at(i); }
};

// --- field constructors used across experiments and tests ---

SpatialField constant_field(const GridSpec& spec, Complex value);
// e^{i x . xi} for the lattice mode with signed integer coordinates k.
SpatialField harmonic_field(const GridSpec& spec, std::array<int, 3> k);
// Periodized Gaussian exp(-|x - center|^2 / (2 sigma^2)).
SpatialField gaussian_bump(const GridSpec& spec, std::array<double, 3> center,
                           double sigma);
// Independent complex Gaussian values per cell.
SpatialField random_field(const GridSpec& spec, Rng& rng);

}  // namespace strichartz
