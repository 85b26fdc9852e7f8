#pragma once

// Orchestrated numerical experiments:
//
//  * strichartz_ratio_sweep  - empirical constants for the localized-
//    propagator mixed-norm estimate against L2 data,
//  * dyadic_bilinear / bilinear_decay_sweep - the dyadic time-separated
//    bilinear form and its 2^{j beta} decay (or boundedness) profile,
//  * counterexample_sweep    - the concentration-family blow-up that forces
//    the fourth necessary condition, with log-log slope regression,
//  * dispersive_decay_sweep  - the (1+|t|)^{-n/2} sup-norm diagnostic,
//  * atoms_audit_sweep       - randomized audit of the atomic-decomposition
//    constants.
//
// Randomized inputs draw complex Gaussian mode coefficients on a band shell
// with a fixed smooth bump time envelope; seeds are forked per trial so
// results are independent of thread count and recorded in every CSV.

#include <complex>
#include <cstdint>
#include <vector>

#include "strichartz/csv.hpp"
#include "strichartz/duhamel.hpp"
#include "strichartz/exponents.hpp"
#include "strichartz/fit.hpp"
#include "strichartz/grid.hpp"
#include "strichartz/random.hpp"

namespace strichartz {

// Lattice modes with min_radius <= |xi| <= max_radius, in flat-index order.
// This is also the coefficient draw order of the randomized families below
// (F draws from fork(2 trial), G from fork(2 trial + 1), one complex
// Gaussian per mode in this order).
struct ShellMode {
    std::size_t flat;
    double omega;  // |xi|^2
    double phi;    // cutoff value at the mode
};
std::vector<ShellMode> band_shell_modes(const GridSpec& spec,
                                        double min_radius, double max_radius);

// Independent complex Gaussian coefficients on the lattice modes with
// min_radius <= |xi| <= max_radius.
SpatialField random_band_limited_field(const GridSpec& spec, Rng& rng,
                                       double min_radius = 0.0,
                                       double max_radius = 2.0,
                                       bool unit_l2 = false);

// Smooth bump sin^2(pi s / width) on [0, width), zero outside.
double bump_envelope(double s, double width);

// ---------------------------------------------------------------------------
// Localized-propagator ratio sweep
// ---------------------------------------------------------------------------

struct StrichartzConfig {
    GridSpec grid = GridSpec::desk_scale(2);
    Rational inv_q = rat(1, 4);
    Rational inv_r = rat(1, 4);
    int trials = 50;
    std::uint64_t seed = 1;
    int threads = 1;
};

struct StrichartzResult {
    std::vector<SweepRecord> records;  // per trial: ratio
    double max_ratio = 0;
};

// max over trials of mixed_norm(t -> T_t f, q, r) / ||f||_2 for random
// band-limited unit-L2 data. Rejects pairs with r or q below 2 or with
// n/r + 2/q > n/2, naming the violated inequality.
StrichartzResult strichartz_ratio_sweep(const StrichartzConfig& config);

// ---------------------------------------------------------------------------
// Dyadic bilinear form
// ---------------------------------------------------------------------------

// B_j(F, G): double Riemann sum over the slab t - 2^{j+1} <= s < t - 2^j of
// <T_s* F_s, T_t* G_t>_{L^2_x}. Requires 2^j >= dt and 2^{j+1} <= window.
std::complex<double> dyadic_bilinear(const SpaceTimeField& F,
                                     const SpaceTimeField& G, int j);

// Input family for the decay sweep. Coherent draws one spatial coefficient
// vector per trial shared by all slices (probes boundedness of the
// normalized form); SliceWhite draws fresh coefficients per slice (probes
// the growth rate of |B_j| itself, which the slab measure makes 2^{j/2}
// for this family).
enum class BilinearFamily { Coherent, SliceWhite };

struct BilinearConfig {
    ExponentTuple tuple = make_tuple(rat(1, 4), rat(1, 12), rat(1, 4),
                                     rat(3, 4), 3);
    GridSpec grid = GridSpec::desk_scale(2);
    int j_min = -2;
    int j_max = 6;
    int trials = 5;
    std::uint64_t seed = 1;
    BilinearFamily family = BilinearFamily::Coherent;
    double spectrum_min = 1.0;
    double spectrum_max = 2.0;
    // Unimodular time carrier e^{i carrier s} on both inputs. It leaves
    // every norm unchanged but shifts the pairing frequency from |xi|^2 to
    // |xi|^2 + carrier, which keeps even the shortest slabs oscillatory so
    // the coherent family's normalized profile is flat down to j < 0.
    double time_carrier = 0.0;
    int threads = 1;
};

struct BilinearResult {
    std::vector<SweepRecord> records;  // per j: sup |B_j|, sup rho_j
    Rational beta;
    DecayRegime regime = DecayRegime::I;
    SlopeFit log2_abs_fit;  // log2 sup|B_j| against j
    double rho_spread = 0;  // max_j sup rho_j / min_j sup rho_j
};

// rho_j = |B_j| / (2^{j beta} ||F||_{L^{qt'}L^{rt'}} ||G||_{L^{q'}L^{r'}}),
// maximized over trials per j. Rejects tuples whose regime side conditions
// fail, naming the violated one.
BilinearResult bilinear_decay_sweep(const BilinearConfig& config);

// ---------------------------------------------------------------------------
// Concentration counterexample
// ---------------------------------------------------------------------------

// (eps^2)^{1/qt'} (V_n eps^n)^{1/rt'}, the exact data-norm power law
// (a zero reciprocal drops its factor).
double rhs_norm_analytic(double eps, const Rational& inv_qt_prime,
                         const Rational& inv_rt_prime, int n);

struct CounterexampleConfig {
    ExponentTuple tuple = make_tuple(rat(1, 2), rat(0), rat(1, 2), rat(0), 3);
    std::vector<double> eps_list = {0.25, 0.125, 0.0625, 0.03125};
    int radial_samples = 64;
    int time_samples = 16;
    double t_lo = 10.0;
    double t_hi = 11.0;
    KernelQuadrature quad{};
    int threads = 1;
};

struct CounterexampleResult {
    std::vector<SweepRecord> records;  // per eps: lhs, rhs, ratio
    SlopeFit lhs_fit;    // log lhs vs log eps
    SlopeFit rhs_fit;    // exact power law, residual ~ 0
    SlopeFit ratio_fit;  // lhs/rhs; negative slope = blow-up as eps -> 0
    Rational predicted_lhs_slope;
    Rational predicted_rhs_slope;
};

// LHS per eps: L^q_t over (t_lo, t_hi) of the shell-restricted L^r_x norm of
// the oscillatory-kernel output; RHS from rhs_norm_analytic. eps values must
// be decreasing in (0, 1/2).
CounterexampleResult counterexample_sweep(const CounterexampleConfig& config);

// ---------------------------------------------------------------------------
// Dispersive decay sweep
// ---------------------------------------------------------------------------

struct DispersiveConfig {
    GridSpec grid = GridSpec::desk_scale(2);
    int time_samples = 100;  // uniform on [0, L/8]
    double bump_sigma = 0.75;
    int threads = 1;
};

struct DispersiveResult {
    std::vector<SweepRecord> records;  // per t: ratio
    double ratio_at_zero = 0;
    double max_ratio = 0;
};

DispersiveResult dispersive_decay_sweep(const DispersiveConfig& config);

// ---------------------------------------------------------------------------
// Atomic decomposition audit
// ---------------------------------------------------------------------------

struct AtomsAuditConfig {
    GridSpec grid = GridSpec::spatial(2, 64, 8.0 * 3.14159265358979323846);
    int fields = 200;
    std::vector<double> p_list = {1.0, 1.5, 2.0, 4.0};
    std::uint64_t seed = 1;
    int threads = 1;
};

struct AtomsAuditResult {
    std::vector<SweepRecord> records;  // per (field, p)
    double max_reconstruction_error = 0;
    double max_height_ratio = 0;       // against the pinned bound 2
    double max_support_ratio = 0;      // against the pinned bound 2
    double max_coefficient_ratio = 0;  // against the pinned bound 4
};

AtomsAuditResult atoms_audit_sweep(const AtomsAuditConfig& config);

}  // namespace strichartz
