#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "strichartz/experiments.hpp"
#include "strichartz/norms.hpp"
#include "strichartz/propagator.hpp"

using namespace strichartz;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("log-log fitting") {
    SUBCASE("exact power law") {
        std::vector<std::pair<double, double>> pts = {
            {1.0, 3.0}, {2.0, 12.0}, {4.0, 48.0}};
        const auto fit = fit_loglog(pts);
        CHECK(fit.slope == doctest::Approx(2.0).epsilon(1e-13));
        CHECK(fit.max_residual < 1e-12);
        CHECK(fit.count == 3);
    }
    SUBCASE("constant data has slope zero") {
        std::vector<std::pair<double, double>> pts = {
            {0.5, 7.0}, {1.0, 7.0}, {2.0, 7.0}, {4.0, 7.0}};
        CHECK(fit_loglog(pts).slope == doctest::Approx(0.0));
    }
    SUBCASE("multiplicative noise moves the slope only slightly") {
        Rng rng(101);
        std::vector<std::pair<double, double>> pts;
        for (int i = 0; i < 30; ++i) {
            const double x = std::pow(1.3, i);
            pts.emplace_back(x, x * x * (1.0 + 0.01 * rng.gaussian()));
        }
        CHECK(std::abs(fit_loglog(pts).slope - 2.0) < 0.05);
    }
    SUBCASE("rejections") {
        std::vector<std::pair<double, double>> two = {{1.0, 1.0}, {2.0, 2.0}};
        CHECK_THROWS_AS(fit_loglog(two), std::invalid_argument);
        std::vector<std::pair<double, double>> bad = {
            {1.0, 1.0}, {2.0, -2.0}, {3.0, 1.0}};
        CHECK_THROWS_AS(fit_loglog(bad), std::invalid_argument);
    }
}

TEST_CASE("analytic data-norm power law") {
    SUBCASE("exponent-1 conjugates give the plain product") {
        const double eps = 0.25;
        CHECK(rhs_norm_analytic(eps, rat(1), rat(1), 3) ==
              doctest::Approx(eps * eps * (4.0 * kPi / 3.0) * eps * eps * eps)
                  .epsilon(1e-14));
    }
    SUBCASE("halving eps scales by 2^{-(n+2)}") {
        const double a = rhs_norm_analytic(0.25, rat(1), rat(1), 3);
        const double b = rhs_norm_analytic(0.125, rat(1), rat(1), 3);
        CHECK(b / a == doctest::Approx(std::exp2(-5.0)).epsilon(1e-12));
    }
    SUBCASE("square-root conjugates") {
        const double eps = 0.2;
        CHECK(rhs_norm_analytic(eps, rat(1, 2), rat(1, 2), 3) ==
              doctest::Approx(eps * std::sqrt(4.0 * kPi / 3.0) *
                              std::pow(eps, 1.5))
                  .epsilon(1e-13));
    }
    SUBCASE("zero reciprocal drops its factor") {
        CHECK(rhs_norm_analytic(0.25, rat(0), rat(1), 2) ==
              doctest::Approx(kPi * 0.0625).epsilon(1e-14));
        CHECK(rhs_norm_analytic(0.25, rat(1), rat(0), 2) ==
              doctest::Approx(0.0625).epsilon(1e-14));
    }
}

TEST_CASE("localized-propagator ratio sweep") {
    SUBCASE("a unit-ball harmonic has mixed-norm ratio exactly 1 at q = inf") {
        const auto grid = GridSpec::make(2, 32, 8.0 * kPi, 0.25, 0.0, 3.0);
        const auto f = harmonic_field(grid, {2, 1, 0});
        SpaceTimeField orbit(grid);
        for (int i = 0; i < grid.time_steps(); ++i)
            orbit.slices[static_cast<std::size_t>(i)] =
                localized_propagate(f, grid.time_at(i));
        const double ratio =
            mixed_norm(orbit, 0.0, 0.5) / lebesgue_norm(f, 0.5);
        CHECK(ratio == doctest::Approx(1.0).epsilon(1e-12));
    }

    SUBCASE("inadmissible pairs are rejected with the inequality named") {
        StrichartzConfig config;
        config.grid = GridSpec::make(2, 32, 8.0 * kPi, 0.25, 0.0, 3.0);
        config.inv_q = rat(2, 3);
        config.inv_r = rat(1, 4);
        CHECK_THROWS_WITH_AS(strichartz_ratio_sweep(config),
                             "strichartz sweep: q >= 2 violated",
                             std::invalid_argument);
        config.inv_q = rat(1, 2);
        config.inv_r = rat(1, 2);
        CHECK_THROWS_WITH_AS(strichartz_ratio_sweep(config),
                             "strichartz sweep: n/r + 2/q <= n/2 violated",
                             std::invalid_argument);
    }

    SUBCASE("small randomized sweep is bounded and thread-stable") {
        StrichartzConfig config;
        config.grid = GridSpec::make(2, 32, 8.0 * kPi, 0.25, 0.0, 3.0);
        config.inv_q = rat(1, 4);
        config.inv_r = rat(1, 4);
        config.trials = 6;
        config.seed = 42;
        const auto serial = strichartz_ratio_sweep(config);
        config.threads = 4;
        const auto parallel = strichartz_ratio_sweep(config);
        CHECK(serial.max_ratio == parallel.max_ratio);
        CHECK(serial.max_ratio > 0);
        CHECK(serial.max_ratio < 50.0);
    }
}

TEST_CASE("dyadic bilinear form") {
    const auto grid = GridSpec::make(1, 64, 8.0 * kPi, 0.25, 0.0, 8.0);

    SUBCASE("vanishes when an input vanishes") {
        SpaceTimeField zero(grid), g(grid);
        Rng rng(3);
        for (auto& slice : g.slices) slice = random_field(grid, rng);
        CHECK(std::abs(dyadic_bilinear(zero, g, 0)) == 0.0);
        CHECK(std::abs(dyadic_bilinear(g, zero, 0)) == 0.0);
    }

    SUBCASE("single space-time harmonic matches the direct double sum") {
        const std::array<int, 3> k = {3, 0, 0};
        const double omega = std::pow(3 * grid.mode_spacing(), 2);
        const double phi = cutoff_value(3 * grid.mode_spacing());
        const double a = 0.9, b = -0.4;
        SpaceTimeField F(grid), G(grid);
        const auto harmonic = harmonic_field(grid, k);
        for (int l = 0; l < grid.time_steps(); ++l) {
            const double s = grid.time_at(l);
            const auto idx = static_cast<std::size_t>(l);
            F.slices[idx] = harmonic;
            G.slices[idx] = harmonic;
            const Complex fa(std::cos(a * s), std::sin(a * s));
            const Complex gb(std::cos(b * s), std::sin(b * s));
            for (std::size_t i = 0; i < harmonic.values.size(); ++i) {
                F.slices[idx].values[i] *= fa;
                G.slices[idx].values[i] *= gb;
            }
        }
        for (int j : {-1, 0, 1}) {
            const Complex measured = dyadic_bilinear(F, G, j);
            // <T_s* F_s, T_t* G_t> = L phi^2 e^{i(s-t)omega} e^{ias} e^{-ibt}
            Complex expected(0);
            const double w1 = std::exp2(j), w2 = std::exp2(j + 1);
            for (int m = 0; m < grid.time_steps(); ++m)
                for (int l = 0; l < grid.time_steps(); ++l) {
                    const double s = grid.time_at(l), t = grid.time_at(m);
                    if (!(t - w2 <= s && s < t - w1)) continue;
                    const double phase = (s - t) * omega + a * s - b * t;
                    expected += Complex(std::cos(phase), std::sin(phase));
                }
            expected *= grid.extent * phi * phi * grid.dt * grid.dt;
            CHECK(std::abs(measured - expected) <=
                  1e-8 * (1.0 + std::abs(expected)));
        }
    }

    SUBCASE("brute force over slices on a tiny grid") {
        Rng rng(7);
        SpaceTimeField F(grid), G(grid);
        for (auto& slice : F.slices) slice = random_field(grid, rng);
        for (auto& slice : G.slices) slice = random_field(grid, rng);
        for (int j : {-2, 0, 1}) {
            const Complex fast = dyadic_bilinear(F, G, j);
            Complex brute(0);
            const double w1 = std::exp2(j), w2 = std::exp2(j + 1);
            for (int m = 0; m < grid.time_steps(); ++m) {
                const double t = grid.time_at(m);
                const auto vt = localized_propagate(
                    G.slices[static_cast<std::size_t>(m)], t, true);
                for (int l = 0; l < grid.time_steps(); ++l) {
                    const double s = grid.time_at(l);
                    if (!(t - w2 <= s && s < t - w1)) continue;
                    const auto us = localized_propagate(
                        F.slices[static_cast<std::size_t>(l)], s, true);
                    brute += inner_product(us, vt);
                }
            }
            brute *= grid.dt * grid.dt;
            CHECK(std::abs(fast - brute) <= 1e-9 * (1.0 + std::abs(brute)));
        }
    }

    SUBCASE("conjugating and swapping the inputs reflects the pairing") {
        Rng rng(11);
        SpaceTimeField F(grid), G(grid);
        for (auto& slice : F.slices) slice = random_field(grid, rng);
        for (auto& slice : G.slices) slice = random_field(grid, rng);
        const int j = 0;
        const Complex forward = dyadic_bilinear(F, G, j);
        Complex reflected(0);
        const double w1 = std::exp2(j), w2 = std::exp2(j + 1);
        for (int m = 0; m < grid.time_steps(); ++m) {
            const double t = grid.time_at(m);
            const auto vt = localized_propagate(
                G.slices[static_cast<std::size_t>(m)], t, true);
            for (int l = 0; l < grid.time_steps(); ++l) {
                const double s = grid.time_at(l);
                if (!(t - w2 <= s && s < t - w1)) continue;
                const auto us = localized_propagate(
                    F.slices[static_cast<std::size_t>(l)], s, true);
                reflected += inner_product(vt, us);
            }
        }
        reflected *= grid.dt * grid.dt;
        CHECK(std::abs(std::conj(forward) - reflected) <=
              1e-9 * (1.0 + std::abs(forward)));
    }

    SUBCASE("slab preconditions") {
        SpaceTimeField F(grid), G(grid);
        CHECK_THROWS_AS(dyadic_bilinear(F, G, -3),
                        std::invalid_argument);  // 2^j < dt
        CHECK_THROWS_AS(dyadic_bilinear(F, G, 3),
                        std::invalid_argument);  // 2^{j+1} > window
    }
}

TEST_CASE("bilinear decay sweep") {
    // n = 1 tuple on the regime-i boundary with beta = 1/2.
    const auto tuple = make_tuple(rat(0), rat(0), rat(1, 2), rat(1, 2), 1);
    const auto grid = GridSpec::make(1, 64, 8.0 * kPi, 0.25, 0.0, 24.0);

    SUBCASE("rejects tuples whose side conditions fail") {
        BilinearConfig config;
        config.tuple =
            make_tuple(rat(1, 4), rat(1, 12), rat(3, 4), rat(1, 2), 3);
        config.grid = GridSpec::make(3, 32, 8.0 * kPi, 0.25, 0.0, 24.0);
        config.j_min = 0;
        config.j_max = 1;
        CHECK_THROWS_AS(bilinear_decay_sweep(config), std::invalid_argument);
    }

    SUBCASE("synthesized coherent inputs agree with explicit fields") {
        BilinearConfig config;
        config.tuple = tuple;
        config.grid = grid;
        config.j_min = -1;
        config.j_max = 2;
        config.trials = 1;
        config.seed = 99;
        config.family = BilinearFamily::Coherent;
        config.time_carrier = 5.0;
        const auto result = bilinear_decay_sweep(config);

        // Reconstruct the trial's fields from the documented draw order and
        // evaluate the general-field form on them.
        const auto modes = band_shell_modes(grid, 1.0, 2.0);
        Rng rng_f = Rng(config.seed).fork(0);
        Rng rng_g = Rng(config.seed).fork(1);
        std::vector<Complex> a(modes.size()), b(modes.size());
        for (auto& c : a) c = rng_f.complex_gaussian();
        for (auto& c : b) c = rng_g.complex_gaussian();

        const double width = grid.t1 - grid.t0;
        SpaceTimeField F(grid), G(grid);
        for (int l = 0; l < grid.time_steps(); ++l) {
            const double s = grid.time_at(l);
            const double env = bump_envelope(s - grid.t0, width);
            const Complex carrier(std::cos(config.time_carrier * s),
                                  std::sin(config.time_carrier * s));
            const auto idx = static_cast<std::size_t>(l);
            SpatialField fslice(grid), gslice(grid);
            for (std::size_t cell = 0; cell < grid.cells(); ++cell) {
                Complex vf(0), vg(0);
                const auto x = grid.position(cell);
                for (std::size_t i = 0; i < modes.size(); ++i) {
                    const auto xi = grid.mode_frequency(modes[i].flat);
                    const double phase = xi[0] * x[0];
                    const Complex e(std::cos(phase), std::sin(phase));
                    vf += a[i] * e;
                    vg += b[i] * e;
                }
                fslice.values[cell] = env * carrier * vf;
                gslice.values[cell] = env * carrier * vg;
            }
            F.slices[idx] = std::move(fslice);
            G.slices[idx] = std::move(gslice);
        }

        for (int j = config.j_min; j <= config.j_max; ++j) {
            const double direct = std::abs(dyadic_bilinear(F, G, j));
            const double synthesized =
                result.records[static_cast<std::size_t>(j - config.j_min)]
                    .values[0]
                    .second;
            CHECK(synthesized == doctest::Approx(direct).epsilon(1e-7));
        }
    }

    SUBCASE("rho is invariant under scaling the inputs") {
        Rng rng(5);
        SpaceTimeField F(grid), G(grid);
        for (auto& slice : F.slices) slice = random_field(grid, rng);
        for (auto& slice : G.slices) slice = random_field(grid, rng);
        const double b0 = std::abs(dyadic_bilinear(F, G, 1));
        const double nf = mixed_norm(F, 0.5, 0.5);
        auto scaled = F;
        for (auto& slice : scaled.slices)
            for (auto& v : slice.values) v *= 3.0;
        const double b1 = std::abs(dyadic_bilinear(scaled, G, 1));
        const double nf1 = mixed_norm(scaled, 0.5, 0.5);
        CHECK(b1 / nf1 == doctest::Approx(b0 / nf).epsilon(1e-10));
    }

    SUBCASE("white family grows like 2^{j/2} and is dt-stable") {
        BilinearConfig config;
        config.tuple = tuple;
        config.grid = GridSpec::make(1, 128, 8.0 * kPi, 0.25, 0.0, 48.0);
        config.j_min = 0;
        config.j_max = 3;
        config.trials = 6;
        config.seed = 12;
        config.family = BilinearFamily::SliceWhite;
        const auto result = bilinear_decay_sweep(config);
        CHECK(result.beta == rat(1, 2));
        CHECK(std::abs(result.log2_abs_fit.slope - 0.5) < 0.3);

        auto finer = config;
        finer.grid = GridSpec::make(1, 128, 8.0 * kPi, 0.125, 0.0, 48.0);
        const auto fine = bilinear_decay_sweep(finer);
        for (std::size_t i = 0; i < result.records.size(); ++i) {
            const double coarse_rho = result.records[i].values[1].second;
            const double fine_rho = fine.records[i].values[1].second;
            CHECK(std::abs(fine_rho - coarse_rho) <= 0.25 * coarse_rho);
        }
    }
}

TEST_CASE("counterexample sweep") {
    SUBCASE("rhs fit is an exact power law and the ratio blows up") {
        CounterexampleConfig config;
        config.tuple = make_tuple(rat(1, 2), rat(0), rat(1, 2), rat(0), 3);
        config.eps_list = {0.25, 0.125, 0.0625};
        config.radial_samples = 12;
        config.time_samples = 3;
        config.quad = KernelQuadrature{8, 8};
        config.threads = 4;
        const auto result = counterexample_sweep(config);
        CHECK(result.predicted_rhs_slope == rat(5));
        CHECK(result.rhs_fit.slope == doctest::Approx(5.0).epsilon(1e-12));
        CHECK(result.rhs_fit.max_residual < 1e-10);
        CHECK(result.ratio_fit.slope < 0.0);
    }

    SUBCASE("safe tuple: ratio is non-increasing as eps decreases") {
        CounterexampleConfig config;
        config.tuple =
            make_tuple(rat(1, 2), rat(1, 2), rat(1, 2), rat(1, 2), 3);
        config.eps_list = {0.25, 0.125, 0.0625};
        config.radial_samples = 12;
        config.time_samples = 3;
        config.quad = KernelQuadrature{8, 8};
        config.threads = 4;
        const auto result = counterexample_sweep(config);
        double previous = -1;
        for (const auto& record : result.records) {
            const double ratio = record.values[2].second;
            if (previous >= 0) CHECK(ratio <= previous * 1.1);
            previous = ratio;
        }
        CHECK(result.ratio_fit.slope > 0.0);
    }

    SUBCASE("eps list validation") {
        CounterexampleConfig config;
        config.tuple = make_tuple(rat(1, 2), rat(0), rat(1, 2), rat(0), 3);
        config.eps_list = {0.125, 0.25};
        CHECK_THROWS_AS(counterexample_sweep(config), std::invalid_argument);
        config.eps_list = {0.7};
        CHECK_THROWS_AS(counterexample_sweep(config), std::invalid_argument);
    }
}

TEST_CASE("dispersive sweep stays bounded relative to t = 0") {
    DispersiveConfig config;
    config.grid = GridSpec::make(1, 256, 8.0 * kPi, 0.125, 0.0, 1.0);
    config.time_samples = 30;
    config.threads = 4;
    const auto result = dispersive_decay_sweep(config);
    CHECK(result.ratio_at_zero > 0);
    CHECK(result.max_ratio < 10.0 * result.ratio_at_zero);
}

TEST_CASE("atoms audit sweep aggregates the empirical constants") {
    AtomsAuditConfig config;
    config.grid = GridSpec::spatial(1, 128, 8.0 * kPi);
    config.fields = 12;
    config.p_list = {1.0, 2.0};
    config.seed = 5;
    config.threads = 4;
    const auto result = atoms_audit_sweep(config);
    CHECK(result.records.size() == 24);
    CHECK(result.max_reconstruction_error < 1e-12);
    CHECK(result.max_height_ratio <= 2.0);
    CHECK(result.max_support_ratio <= 2.0);
    CHECK(result.max_coefficient_ratio <= 4.0);
}
