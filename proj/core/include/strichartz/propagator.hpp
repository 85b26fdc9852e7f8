#pragma once

// The free Schrodinger group and its frequency-localized variants as exact
// spectral multipliers on the periodic grid:
//
//   free:        e^{it Laplacian} f  =  F^{-1}[ e^{-it|xi|^2} F f ]
//   localized:   T_t f              =  F^{-1}[ phi(xi) e^{-it|xi|^2} F f ]
//   adjoint:     T_t* f             =  F^{-1}[ phi(xi) e^{+it|xi|^2} F f ]
//
// Multipliers act on Fourier-series coefficients, so a single harmonic
// e^{i x.xi0} maps to m(xi0) e^{i x.xi0} with no volume constant. The
// classical integral form of the localized operator (no (2*pi)^{-n}
// prefactor in front of the frequency integral) differs from this mode-wise
// convention by the constant (2*pi)^n per application; every quantity
// reported here is either a ratio or a slope, where that constant cancels.

#include "strichartz/grid.hpp"

namespace strichartz {

// Radial frequency cutoff: 1 for |xi| <= 1, 0 for |xi| > 2, raised cosine
// cos^2(pi(|xi|-1)/2) in between. Continuous, values in [0,1].
double cutoff_value(double xi_abs);
double cutoff_value_from_sq(double xi_sq);

// phi(xi)^2 e^{-i(t-s)|xi|^2}: the multiplier of the composition T_t T_s*.
Complex composed_localized_multiplier(double xi_sq, double t_minus_s);

SpatialField free_propagate(const SpatialField& f, double t);

// conjugate = false gives T_t, conjugate = true gives the adjoint T_t*
// (phi is real, so conjugating the cutoff is a no-op). Output is band
// limited to |xi| <= 2.
SpatialField localized_propagate(const SpatialField& f, double t,
                                 bool conjugate = false);

// Largest |t| for which wrap-around stays below test tolerances: the band
// limit |xi| <= 2 gives group speed <= 4, so packets need time about L/4 to
// traverse the torus; L/8 keeps the contamination negligible.
double dispersive_t_max(const GridSpec& spec);

// ||T_t f||_inf (1+|t|)^{n/2} / ||f||_1, the normalized dispersive-decay
// diagnostic. Rejects |t| > dispersive_t_max(f.spec).
double dispersive_ratio(const SpatialField& f, double t);

}  // namespace strichartz
