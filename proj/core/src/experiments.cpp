#include "strichartz/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "strichartz/atoms.hpp"
#include "strichartz/dft.hpp"
#include "strichartz/norms.hpp"
#include "strichartz/parallel.hpp"
#include "strichartz/propagator.hpp"

namespace strichartz {

namespace {

constexpr double kPi = std::numbers::pi;

// (sum v_i^q dt)^{1/q}, or max for inv_q = 0; the time half of a mixed norm.
double time_norm(const std::vector<double>& values, double inv_q, double dt) {
    if (inv_q == 0) {
        double sup = 0;
        for (double v : values) sup = std::max(sup, v);
        return sup;
    }
    const double q = 1.0 / inv_q;
    double sum = 0;
    for (double v : values)
        if (v > 0) sum += std::pow(v, q);
    return std::pow(sum * dt, inv_q);
}

// Half-open slab of s-indices pairing with output index m:
// t_m - 2^{j+1} <= s_l < t_m - 2^j.
struct SlabBounds {
    long lo;
    long hi;  // exclusive
};

SlabBounds slab_bounds(long m, double w1, double w2, long steps) {
    long lo = static_cast<long>(std::ceil(static_cast<double>(m) - w2));
    long hi = static_cast<long>(std::ceil(static_cast<double>(m) - w1));
    lo = std::clamp(lo, 0L, steps);
    hi = std::clamp(hi, lo, steps);
    return {lo, hi};
}

void check_slab_resolvable(const GridSpec& spec, int j) {
    const double width = std::exp2(j);
    if (width < spec.dt)
        throw std::invalid_argument(
            "slab 2^j below dt; unresolvable (j = " + std::to_string(j) +
            ")");
    if (2.0 * width > spec.t1 - spec.t0)
        throw std::invalid_argument(
            "slab 2^{j+1} exceeds the time window (j = " + std::to_string(j) +
            ")");
}

SpatialField field_from_shell_coefficients(const GridSpec& spec,
                                           const std::vector<ShellMode>& modes,
                                           const std::vector<Complex>& coeffs) {
    std::vector<Complex> scatter(spec.cells(), Complex(0));
    for (std::size_t i = 0; i < modes.size(); ++i)
        scatter[modes[i].flat] = coeffs[i];
    SpatialField f(spec);
    dft_backward_raw(spec, scatter.data(), f.values.data());
    return f;
}

}  // namespace

std::vector<ShellMode> band_shell_modes(const GridSpec& spec,
                                        double min_radius, double max_radius) {
    const auto& xi_sq = mode_frequency_sq_table(spec);
    const double lo_sq = min_radius * min_radius;
    const double hi_sq = max_radius * max_radius;
    std::vector<ShellMode> modes;
    for (std::size_t i = 0; i < xi_sq.size(); ++i)
        if (xi_sq[i] >= lo_sq && xi_sq[i] <= hi_sq)
            modes.push_back({i, xi_sq[i], cutoff_value_from_sq(xi_sq[i])});
    return modes;
}

SpatialField random_band_limited_field(const GridSpec& spec, Rng& rng,
                                       double min_radius, double max_radius,
                                       bool unit_l2) {
    const auto modes = band_shell_modes(spec, min_radius, max_radius);
    std::vector<Complex> coeffs(modes.size());
    for (auto& c : coeffs) c = rng.complex_gaussian();
    SpatialField f = field_from_shell_coefficients(spec, modes, coeffs);
    if (unit_l2) {
        const double norm = lebesgue_norm(f, 0.5);
        if (norm > 0)
            for (auto& v : f.values) v /= norm;
    }
    return f;
}

double bump_envelope(double s, double width) {
    if (s <= 0 || s >= width) return 0;
    const double c = std::sin(kPi * s / width);
    return c * c;
}

// ---------------------------------------------------------------------------
// Localized-propagator ratio sweep
// ---------------------------------------------------------------------------

StrichartzResult strichartz_ratio_sweep(const StrichartzConfig& config) {
    const GridSpec& grid = config.grid;
    const Rational half = rat(1, 2);
    if (config.inv_r > half)
        throw std::invalid_argument("strichartz sweep: r >= 2 violated");
    if (config.inv_q > half)
        throw std::invalid_argument("strichartz sweep: q >= 2 violated");
    if (grid.n * config.inv_r + 2 * config.inv_q > rat(grid.n, 2))
        throw std::invalid_argument(
            "strichartz sweep: n/r + 2/q <= n/2 violated");
    const double t_max = dispersive_t_max(grid);
    if (grid.t0 < -t_max - 1e-12 || grid.t1 > t_max + 1e-12)
        throw std::invalid_argument(
            "strichartz sweep: time window exceeds the wrap-around guard");
    if (config.trials < 1)
        throw std::invalid_argument("strichartz sweep: trials >= 1");

    const double inv_q = config.inv_q.get_d();
    const double inv_r = config.inv_r.get_d();
    const Rng base(config.seed);
    std::vector<double> ratios(static_cast<std::size_t>(config.trials));

    parallel_for(ratios.size(), config.threads, [&](std::size_t trial) {
        Rng rng = base.fork(trial);
        const SpatialField f =
            random_band_limited_field(grid, rng, 0.0, 2.0, true);
        const double l2 = lebesgue_norm(f, 0.5);
        std::vector<double> slice_norms(
            static_cast<std::size_t>(grid.time_steps()));
        for (int i = 0; i < grid.time_steps(); ++i)
            slice_norms[static_cast<std::size_t>(i)] = lebesgue_norm(
                localized_propagate(f, grid.time_at(i)), inv_r);
        ratios[trial] = time_norm(slice_norms, inv_q, grid.dt) / l2;
    });

    StrichartzResult result;
    for (std::size_t i = 0; i < ratios.size(); ++i) {
        result.records.push_back(
            {static_cast<double>(i), {{"ratio", ratios[i]}}});
        result.max_ratio = std::max(result.max_ratio, ratios[i]);
    }
    return result;
}

// ---------------------------------------------------------------------------
// Dyadic bilinear form on explicit space-time fields
// ---------------------------------------------------------------------------

std::complex<double> dyadic_bilinear(const SpaceTimeField& F,
                                     const SpaceTimeField& G, int j) {
    const GridSpec& spec = F.spec;
    if (G.spec != spec)
        throw std::invalid_argument("dyadic_bilinear: mismatched grids");
    if (F.slices.size() != G.slices.size() ||
        F.slices.size() != static_cast<std::size_t>(spec.time_steps()))
        throw std::invalid_argument("dyadic_bilinear: bad slice count");
    check_slab_resolvable(spec, j);

    const long steps = spec.time_steps();
    const std::size_t cells = spec.cells();
    const auto& xi_sq = mode_frequency_sq_table(spec);
    std::vector<double> phi(cells);
    for (std::size_t i = 0; i < cells; ++i)
        phi[i] = cutoff_value_from_sq(xi_sq[i]);

    // Coefficients of T_s* applied to a slice: phi e^{+i s |xi|^2} F_hat.
    std::vector<Complex> scratch(cells);
    auto adjoint_coeffs = [&](const SpatialField& slice, double s,
                              std::vector<Complex>& out) {
        dft_forward_raw(spec, slice.values.data(), scratch.data());
        out.resize(cells);
        for (std::size_t i = 0; i < cells; ++i) {
            const double phase = s * xi_sq[i];
            out[i] = scratch[i] * phi[i] *
                     Complex(std::cos(phase), std::sin(phase));
        }
    };

    const double w1 = std::exp2(j) / spec.dt;
    const double w2 = std::exp2(j + 1) / spec.dt;

    std::vector<Complex> window(cells, Complex(0));
    std::vector<Complex> term(cells);
    std::vector<Complex> v(cells);
    long enter = 0, exit = 0;
    Complex total(0);

    for (long m = 0; m < steps; ++m) {
        const auto slab = slab_bounds(m, w1, w2, steps);
        while (enter < slab.hi) {
            adjoint_coeffs(F.slices[static_cast<std::size_t>(enter)],
                           spec.time_at(static_cast<int>(enter)), term);
            for (std::size_t i = 0; i < cells; ++i) window[i] += term[i];
            ++enter;
        }
        while (exit < slab.lo) {
            adjoint_coeffs(F.slices[static_cast<std::size_t>(exit)],
                           spec.time_at(static_cast<int>(exit)), term);
            for (std::size_t i = 0; i < cells; ++i) window[i] -= term[i];
            ++exit;
        }
        if (slab.lo >= slab.hi) continue;
        adjoint_coeffs(G.slices[static_cast<std::size_t>(m)],
                       spec.time_at(static_cast<int>(m)), v);
        Complex pairing(0);
        for (std::size_t i = 0; i < cells; ++i)
            pairing += window[i] * std::conj(v[i]);
        total += pairing;
    }

    const double cells_d = static_cast<double>(cells);
    const double scale = spec.dt * spec.dt *
                         std::pow(spec.extent, spec.n) / (cells_d * cells_d);
    return total * scale;
}

// ---------------------------------------------------------------------------
// Bilinear decay sweep on synthesized shell-mode inputs
// ---------------------------------------------------------------------------

namespace {

struct SweepData {
    // Per trial, per j-index: |B_j| and the rho denominator norms.
    std::vector<std::vector<double>> abs_b;  // [trial][j]
    std::vector<double> norm_product;        // [trial]
};

// Shared sliding-slab contraction. The per-slice shell coefficients of F
// and G are env(s) * coeff(l, i); phase registers advance incrementally, so
// the inner loops are pure complex multiply-adds.
class SlabAccumulator {
  public:
    SlabAccumulator(const GridSpec& spec, const std::vector<ShellMode>& modes,
                    const std::vector<double>& env, double carrier)
        : spec_(spec), modes_(modes), env_(env), carrier_(carrier) {}

    // coeff_f(l, i), coeff_g(m, i): slice-l shell coefficients (without the
    // envelope). Returns sum over modes of phi^2 * contraction.
    template <typename CoeffF, typename CoeffG>
    Complex run(int j, CoeffF&& coeff_f, CoeffG&& coeff_g) const {
        const long steps = spec_.time_steps();
        const std::size_t count = modes_.size();
        const double w1 = std::exp2(j) / spec_.dt;
        const double w2 = std::exp2(j + 1) / spec_.dt;

        std::vector<Complex> step(count), enter_phase(count),
            exit_phase(count), out_phase(count), window(count, Complex(0)),
            acc(count, Complex(0));
        for (std::size_t i = 0; i < count; ++i) {
            const double w = modes_[i].omega + carrier_;
            step[i] = Complex(std::cos(spec_.dt * w), std::sin(spec_.dt * w));
            const double p0 = spec_.t0 * w;
            enter_phase[i] = exit_phase[i] =
                Complex(std::cos(p0), std::sin(p0));
            out_phase[i] = std::conj(enter_phase[i]);
        }

        long enter = 0, exit = 0;
        for (long m = 0; m < steps; ++m) {
            const auto slab = slab_bounds(m, w1, w2, steps);
            while (enter < slab.hi) {
                const double e = env_[static_cast<std::size_t>(enter)];
                if (e != 0)
                    for (std::size_t i = 0; i < count; ++i)
                        window[i] += e * enter_phase[i] * coeff_f(enter, i);
                for (std::size_t i = 0; i < count; ++i)
                    enter_phase[i] *= step[i];
                ++enter;
            }
            while (exit < slab.lo) {
                const double e = env_[static_cast<std::size_t>(exit)];
                if (e != 0)
                    for (std::size_t i = 0; i < count; ++i)
                        window[i] -= e * exit_phase[i] * coeff_f(exit, i);
                for (std::size_t i = 0; i < count; ++i)
                    exit_phase[i] *= step[i];
                ++exit;
            }
            const double e = env_[static_cast<std::size_t>(m)];
            if (e != 0 && slab.lo < slab.hi)
                for (std::size_t i = 0; i < count; ++i)
                    acc[i] += e * out_phase[i] * std::conj(coeff_g(m, i)) *
                              window[i];
            for (std::size_t i = 0; i < count; ++i)
                out_phase[i] *= std::conj(step[i]);
        }

        Complex total(0);
        for (std::size_t i = 0; i < count; ++i)
            total += modes_[i].phi * modes_[i].phi * acc[i];
        return total * (spec_.dt * spec_.dt *
                        std::pow(spec_.extent, spec_.n));
    }

  private:
    const GridSpec& spec_;
    const std::vector<ShellMode>& modes_;
    const std::vector<double>& env_;
    double carrier_;
};

}  // namespace

BilinearResult bilinear_decay_sweep(const BilinearConfig& config) {
    const GridSpec& grid = config.grid;
    const ExponentTuple& tuple = config.tuple;
    if (tuple.n != grid.n)
        throw std::invalid_argument(
            "bilinear sweep: tuple dimension differs from the grid");
    const DecayExponent decay = decay_exponent(tuple);
    if (!decay.window_ok)
        throw std::invalid_argument(
            "bilinear sweep: regime side condition failed: " + decay.violated);
    for (int j = config.j_min; j <= config.j_max; ++j)
        check_slab_resolvable(grid, j);
    if (config.trials < 1)
        throw std::invalid_argument("bilinear sweep: trials >= 1");

    const auto modes =
        band_shell_modes(grid, config.spectrum_min, config.spectrum_max);
    if (modes.empty())
        throw std::invalid_argument(
            "bilinear sweep: spectrum shell contains no lattice modes");

    const long steps = grid.time_steps();
    const double width = grid.t1 - grid.t0;
    std::vector<double> env(static_cast<std::size_t>(steps));
    for (long l = 0; l < steps; ++l)
        env[static_cast<std::size_t>(l)] =
            bump_envelope(grid.time_at(static_cast<int>(l)) - grid.t0, width);

    const double inv_qt_prime = tuple.inv_qt_prime().get_d();
    const double inv_rt_prime = tuple.inv_rt_prime().get_d();
    const double inv_q_prime = tuple.inv_q_prime().get_d();
    const double inv_r_prime = tuple.inv_r_prime().get_d();

    const int j_count = config.j_max - config.j_min + 1;
    SweepData data;
    data.abs_b.assign(static_cast<std::size_t>(config.trials),
                      std::vector<double>(static_cast<std::size_t>(j_count)));
    data.norm_product.assign(static_cast<std::size_t>(config.trials), 0.0);

    const Rng base(config.seed);
    const SlabAccumulator accumulator(grid, modes, env, config.time_carrier);
    const std::size_t mode_count = modes.size();

    parallel_for(
        static_cast<std::size_t>(config.trials), config.threads,
        [&](std::size_t trial) {
            Rng rng_f = base.fork(2 * trial);
            Rng rng_g = base.fork(2 * trial + 1);

            if (config.family == BilinearFamily::Coherent) {
                std::vector<Complex> a(mode_count), b(mode_count);
                for (auto& c : a) c = rng_f.complex_gaussian();
                for (auto& c : b) c = rng_g.complex_gaussian();

                const SpatialField f =
                    field_from_shell_coefficients(grid, modes, a);
                const SpatialField g =
                    field_from_shell_coefficients(grid, modes, b);
                std::vector<double> env_slices(env);
                double env_norm_f = 0, env_norm_g = 0;
                env_norm_f = time_norm(env_slices, inv_qt_prime, grid.dt);
                env_norm_g = time_norm(env_slices, inv_q_prime, grid.dt);
                data.norm_product[trial] =
                    env_norm_f * lebesgue_norm(f, inv_rt_prime) *
                    env_norm_g * lebesgue_norm(g, inv_r_prime);

                for (int j = config.j_min; j <= config.j_max; ++j) {
                    const Complex bj = accumulator.run(
                        j,
                        [&a](long, std::size_t i) { return a[i]; },
                        [&b](long, std::size_t i) { return b[i]; });
                    data.abs_b[trial][static_cast<std::size_t>(
                        j - config.j_min)] = std::abs(bj);
                }
                return;
            }

            // SliceWhite: fresh coefficients per slice.
            std::vector<Complex> g_coeffs(
                static_cast<std::size_t>(steps) * mode_count);
            std::vector<Complex> h_coeffs(
                static_cast<std::size_t>(steps) * mode_count);
            for (auto& c : g_coeffs) c = rng_f.complex_gaussian();
            for (auto& c : h_coeffs) c = rng_g.complex_gaussian();

            auto slice_norms = [&](const std::vector<Complex>& coeffs,
                                   double inv_r) {
                std::vector<double> norms(static_cast<std::size_t>(steps));
                std::vector<Complex> slice_coeffs(mode_count);
                for (long l = 0; l < steps; ++l) {
                    const double e = env[static_cast<std::size_t>(l)];
                    for (std::size_t i = 0; i < mode_count; ++i)
                        slice_coeffs[i] =
                            e *
                            coeffs[static_cast<std::size_t>(l) * mode_count +
                                   i];
                    norms[static_cast<std::size_t>(l)] = lebesgue_norm(
                        field_from_shell_coefficients(grid, modes,
                                                      slice_coeffs),
                        inv_r);
                }
                return norms;
            };
            data.norm_product[trial] =
                time_norm(slice_norms(g_coeffs, inv_rt_prime), inv_qt_prime,
                          grid.dt) *
                time_norm(slice_norms(h_coeffs, inv_q_prime), inv_q_prime,
                          grid.dt);

            for (int j = config.j_min; j <= config.j_max; ++j) {
                const Complex bj = accumulator.run(
                    j,
                    [&g_coeffs, mode_count](long l, std::size_t i) {
                        return g_coeffs[static_cast<std::size_t>(l) *
                                            mode_count +
                                        i];
                    },
                    [&h_coeffs, mode_count](long m, std::size_t i) {
                        return h_coeffs[static_cast<std::size_t>(m) *
                                            mode_count +
                                        i];
                    });
                data.abs_b[trial][static_cast<std::size_t>(j - config.j_min)] =
                    std::abs(bj);
            }
        });

    BilinearResult result;
    result.beta = decay.beta;
    result.regime = decay.regime;
    const double beta_d = decay.beta.get_d();

    std::vector<std::pair<double, double>> log_points;
    double rho_min = 0, rho_max = 0;
    for (int j = config.j_min; j <= config.j_max; ++j) {
        const auto idx = static_cast<std::size_t>(j - config.j_min);
        double sup_abs = 0, sup_rho = 0;
        for (int trial = 0; trial < config.trials; ++trial) {
            const double abs_b =
                data.abs_b[static_cast<std::size_t>(trial)][idx];
            sup_abs = std::max(sup_abs, abs_b);
            const double denom =
                std::exp2(j * beta_d) *
                data.norm_product[static_cast<std::size_t>(trial)];
            if (denom > 0) sup_rho = std::max(sup_rho, abs_b / denom);
        }
        result.records.push_back({static_cast<double>(j),
                                  {{"sup_abs_B", sup_abs},
                                   {"sup_rho", sup_rho}}});
        if (sup_abs > 0)
            log_points.emplace_back(static_cast<double>(j),
                                    std::log2(sup_abs));
        if (sup_rho > 0) {
            rho_min = rho_min == 0 ? sup_rho : std::min(rho_min, sup_rho);
            rho_max = std::max(rho_max, sup_rho);
        }
    }
    if (log_points.size() >= 2) result.log2_abs_fit = fit_linear(log_points);
    result.rho_spread = rho_min > 0 ? rho_max / rho_min : 0.0;
    return result;
}

// ---------------------------------------------------------------------------
// Concentration counterexample
// ---------------------------------------------------------------------------

double rhs_norm_analytic(double eps, const Rational& inv_qt_prime,
                         const Rational& inv_rt_prime, int n) {
    if (!(eps > 0 && eps < 0.5))
        throw std::invalid_argument("rhs_norm_analytic requires 0 < eps < 1/2");
    const double iqtp = inv_qt_prime.get_d();
    const double irtp = inv_rt_prime.get_d();
    const double time_factor =
        iqtp == 0 ? 1.0 : std::pow(eps * eps, iqtp);
    const double space_factor =
        irtp == 0 ? 1.0
                  : std::pow(unit_ball_volume(n) * std::pow(eps, n), irtp);
    return time_factor * space_factor;
}

CounterexampleResult counterexample_sweep(const CounterexampleConfig& config) {
    const ExponentTuple& tuple = config.tuple;
    const int n = tuple.n;
    if (n < 1 || n > 3)
        throw std::invalid_argument(
            "counterexample sweep: dimension must be 1, 2 or 3");
    if (config.eps_list.empty())
        throw std::invalid_argument("counterexample sweep: empty eps list");
    for (std::size_t i = 0; i < config.eps_list.size(); ++i) {
        const double eps = config.eps_list[i];
        if (!(eps > 0 && eps < 0.5))
            throw std::invalid_argument(
                "counterexample sweep: eps must lie in (0, 1/2)");
        if (i > 0 && eps >= config.eps_list[i - 1])
            throw std::invalid_argument(
                "counterexample sweep: eps values must decrease");
    }
    if (config.time_samples < 1 || config.radial_samples < 2)
        throw std::invalid_argument("counterexample sweep: bad sampling");

    const double inv_q = tuple.inv_q.get_d();
    const double inv_r = tuple.inv_r.get_d();
    const double dt =
        (config.t_hi - config.t_lo) / config.time_samples;

    const std::size_t eps_count = config.eps_list.size();
    const auto samples = static_cast<std::size_t>(config.time_samples);
    std::vector<double> shell_norms(eps_count * samples);

    parallel_for(eps_count * samples, config.threads, [&](std::size_t task) {
        const std::size_t ie = task / samples;
        const std::size_t it = task % samples;
        const double eps = config.eps_list[ie];
        const double t = config.t_lo + (static_cast<double>(it) + 0.5) * dt;
        shell_norms[task] = shell_lebesgue_norm(
            t, eps, n, inv_r, config.radial_samples, config.quad);
    });

    CounterexampleResult result;
    result.predicted_lhs_slope = concentration_lhs_slope(tuple);
    result.predicted_rhs_slope = concentration_rhs_slope(tuple);

    std::vector<std::pair<double, double>> lhs_pts, rhs_pts, ratio_pts;
    for (std::size_t ie = 0; ie < eps_count; ++ie) {
        const double eps = config.eps_list[ie];
        std::vector<double> per_t(shell_norms.begin() +
                                      static_cast<long>(ie * samples),
                                  shell_norms.begin() +
                                      static_cast<long>((ie + 1) * samples));
        const double lhs = time_norm(per_t, inv_q, dt);
        const double rhs = rhs_norm_analytic(eps, tuple.inv_qt_prime(),
                                             tuple.inv_rt_prime(), n);
        const double ratio = rhs > 0 ? lhs / rhs : 0.0;
        result.records.push_back(
            {eps, {{"lhs", lhs}, {"rhs", rhs}, {"ratio", ratio}}});
        if (lhs > 0) lhs_pts.emplace_back(eps, lhs);
        if (rhs > 0) rhs_pts.emplace_back(eps, rhs);
        if (ratio > 0) ratio_pts.emplace_back(eps, ratio);
    }
    if (lhs_pts.size() >= 3) result.lhs_fit = fit_loglog(lhs_pts);
    if (rhs_pts.size() >= 3) result.rhs_fit = fit_loglog(rhs_pts);
    if (ratio_pts.size() >= 3) result.ratio_fit = fit_loglog(ratio_pts);
    return result;
}

// ---------------------------------------------------------------------------
// Dispersive decay sweep
// ---------------------------------------------------------------------------

DispersiveResult dispersive_decay_sweep(const DispersiveConfig& config) {
    const GridSpec& grid = config.grid;
    if (config.time_samples < 2)
        throw std::invalid_argument("dispersive sweep: need >= 2 samples");
    const double t_max = dispersive_t_max(grid);
    const double center = 0.5 * grid.extent;
    const SpatialField f =
        gaussian_bump(grid, {center, center, center}, config.bump_sigma);

    std::vector<double> ratios(static_cast<std::size_t>(config.time_samples));
    parallel_for(ratios.size(), config.threads, [&](std::size_t i) {
        const double t = t_max * static_cast<double>(i) /
                         (config.time_samples - 1);
        ratios[i] = dispersive_ratio(f, t);
    });

    DispersiveResult result;
    for (std::size_t i = 0; i < ratios.size(); ++i) {
        const double t =
            t_max * static_cast<double>(i) / (config.time_samples - 1);
        result.records.push_back({t, {{"ratio", ratios[i]}}});
        result.max_ratio = std::max(result.max_ratio, ratios[i]);
    }
    result.ratio_at_zero = ratios.front();
    return result;
}

// ---------------------------------------------------------------------------
// Atomic decomposition audit
// ---------------------------------------------------------------------------

AtomsAuditResult atoms_audit_sweep(const AtomsAuditConfig& config) {
    if (config.fields < 1 || config.p_list.empty())
        throw std::invalid_argument("atoms audit: bad configuration");
    const Rng base(config.seed);
    const std::size_t per_field = config.p_list.size();
    std::vector<AtomAudit> audits(
        static_cast<std::size_t>(config.fields) * per_field);

    parallel_for(static_cast<std::size_t>(config.fields), config.threads,
                 [&](std::size_t field_idx) {
                     Rng rng = base.fork(field_idx);
                     const SpatialField f = random_field(config.grid, rng);
                     for (std::size_t ip = 0; ip < per_field; ++ip) {
                         const AtomDecomposition d =
                             decompose(f, config.p_list[ip]);
                         audits[field_idx * per_field + ip] = audit(f, d);
                     }
                 });

    AtomsAuditResult result;
    for (std::size_t idx = 0; idx < audits.size(); ++idx) {
        const AtomAudit& a = audits[idx];
        const std::size_t field_idx = idx / per_field;
        result.records.push_back(
            {static_cast<double>(field_idx),
             {{"p", config.p_list[idx % per_field]},
              {"reconstruction_error", a.reconstruction_error},
              {"height_ratio", a.max_height_ratio},
              {"support_ratio", a.max_support_ratio},
              {"coefficient_ratio", a.coefficient_ratio}}});
        result.max_reconstruction_error = std::max(
            result.max_reconstruction_error, a.reconstruction_error);
        result.max_height_ratio =
            std::max(result.max_height_ratio, a.max_height_ratio);
        result.max_support_ratio =
            std::max(result.max_support_ratio, a.max_support_ratio);
        result.max_coefficient_ratio =
            std::max(result.max_coefficient_ratio, a.coefficient_ratio);
    }
    return result;
}

}  // namespace strichartz
