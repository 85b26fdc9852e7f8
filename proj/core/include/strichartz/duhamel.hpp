#pragma once

// Retarded Duhamel operators. Two forms live here:
//
//  * the periodic-spectral form  I(F)(., t) = sum_{s < t} U(t-s) F(., s) dt
//    with the exact per-step spectral propagator (left-endpoint rule on the
//    half-open window), used for estimate testing on the torus, and
//  * the free-space oscillatory-kernel form
//      I(F)(x, t) = (4 pi)^{-n/2} int_0^t int |t-s|^{-n/2}
//                    e^{i|x-y|^2 / (4|t-s|)} F(y, s) dy ds
//    evaluated by direct quadrature for the concentration data family
//      F_eps = chi_{0 < s < eps^2, |y| < eps},
//    which drives the necessary-condition blow-up experiment.
//
// Duhamel's formula carries a unimodular factor -i in front of the integral;
// it is dropped throughout since only magnitudes are measured.

#include <span>

#include "strichartz/grid.hpp"
#include "strichartz/rational.hpp"

namespace strichartz {

// Periodic-spectral retarded integral. localized = true replaces the free
// per-term propagator with the phi^2-localized multiplier. The input's
// slices are anchored at the window origin; the sum for slice m runs over
// slices strictly before it, so slice 0 of the output is zero.
SpaceTimeField retarded(const SpaceTimeField& F, bool localized = false);

// Same quadrature read as int_{-infty}^t: requires the first slice of F to
// vanish (F compactly supported inside the window), and then agrees with
// retarded() bit for bit on inputs supported in s >= t0.
SpaceTimeField full_line_retarded(const SpaceTimeField& F);

// |x-y|^2/(4(t-s)) = main + remainder with main = |x|^2/(4t) independent of
// (y, s). In the concentration regime (s < eps^2, |y| < eps, 10 < t < 11,
// ||x| - 1/eps| < eps) the remainder stays below 1/2, so the kernel phase
// cannot cancel. Rejects t = 0 and t = s.
struct PhaseSplit {
    double main;
    double remainder;
};
PhaseSplit phase_split(std::span<const double> x, std::span<const double> y,
                       double s, double t);

double unit_ball_volume(int n);
double unit_sphere_area(int n);  // surface measure of S^{n-1}

struct KernelQuadrature {
    int y_points = 24;  // per axis on [-eps, eps]
    int s_points = 24;  // on [0, eps^2]
};

// Midpoint tensor quadrature of the oscillatory kernel integral against the
// indicator data; the error estimate comes from comparing with the
// half-resolution rule. Requires 0 < eps < 1/2 and t > eps^2.
struct KernelValue {
    Complex value;
    double error_estimate;
};
KernelValue kernel_duhamel(std::span<const double> x, double t, double eps,
                           int n, const KernelQuadrature& quad = {});

// L^r norm of |I(F_eps)(., t)| over the shell ||x| - 1/eps| < eps, computed
// in radial coordinates (the kernel output is radial in x): |x| sampled at
// radial_samples midpoints with surface weight omega_{n-1} |x|^{n-1}. A
// Cartesian grid covering |x| ~ 1/eps would be infeasible for small eps.
double shell_lebesgue_norm(double t, double eps, int n, double inv_r,
                           int radial_samples = 64,
                           const KernelQuadrature& quad = {});

// Exact measure of the same shell (used to cross-check the radial rule).
double shell_volume(double eps, int n);

}  // namespace strichartz
