#pragma once

// Discrete Fourier transforms on the periodic grid, unitary with respect to
// the Riemann-sum L2 norm: the plain l2 norm of the coefficient array equals
// lebesgue_norm(f, 1/2) exactly (up to rounding). Mode xi ranges over
// (2*pi/L) Z^n restricted to the Nyquist box, in the same row-major layout
// as the spatial values (GridSpec::mode_frequency gives the mode of a flat
// index).

#include <functional>

#include "strichartz/grid.hpp"

namespace strichartz {

struct SpectralField {
    GridSpec spec;
    std::vector<Complex> coeffs;
};

SpectralField dft_forward(const SpatialField& f);
SpatialField dft_inverse(const SpectralField& c);

// F^{-1}[ m(|xi|^2) F[f] ] for a radial frequency multiplier. All propagator
// and Duhamel multipliers in this project are radial.
using RadialMultiplier = std::function<Complex(double xi_sq)>;
SpatialField apply_radial_multiplier(const SpatialField& f,
                                     const RadialMultiplier& multiplier);

// Unnormalized FFTW transforms (exp(-i x.xi) forward). Plans are cached per
// grid shape behind a mutex; execution on distinct buffers is safe to run
// concurrently. in and out must be distinct arrays of spec.cells() entries.
void dft_forward_raw(const GridSpec& spec, const Complex* in, Complex* out);
void dft_backward_raw(const GridSpec& spec, const Complex* in, Complex* out);

// Cached table of |xi|^2 per flat mode index for a grid shape.
const std::vector<double>& mode_frequency_sq_table(const GridSpec& spec);

}  // namespace strichartz
