#include "strichartz/dft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace strichartz {

namespace {

// FFTW plans are not thread-safe to create, and new-array execution requires
// a live plan of the right shape. One cache entry per (n, N): plans are made
// once on scratch buffers with FFTW_UNALIGNED so they can execute on any
// caller buffer afterwards.
struct PlanEntry {
    fftw_plan forward = nullptr;
    fftw_plan backward = nullptr;
    ~PlanEntry() {
        if (forward) fftw_destroy_plan(forward);
        if (backward) fftw_destroy_plan(backward);
    }
};

std::mutex g_plan_mutex;
std::map<std::pair<int, int>, std::unique_ptr<PlanEntry>> g_plans;

PlanEntry& plan_for(const GridSpec& spec) {
    std::scoped_lock lock(g_plan_mutex);
    auto key = std::make_pair(spec.n, spec.points_per_axis);
    auto it = g_plans.find(key);
    if (it != g_plans.end()) return *it->second;

    auto entry = std::make_unique<PlanEntry>();
    const std::size_t cells = spec.cells();
    fftw_complex* a = fftw_alloc_complex(cells);
    fftw_complex* b = fftw_alloc_complex(cells);
    int dims[3] = {spec.points_per_axis, spec.points_per_axis,
                   spec.points_per_axis};
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    entry->forward =
        fftw_plan_dft(spec.n, dims, a, b, FFTW_FORWARD, flags);
    entry->backward =
        fftw_plan_dft(spec.n, dims, a, b, FFTW_BACKWARD, flags);
    fftw_free(a);
    fftw_free(b);
    auto [pos, inserted] = g_plans.emplace(key, std::move(entry));
    return *pos->second;
}

fftw_complex* as_fftw(Complex* p) { return reinterpret_cast<fftw_complex*>(p); }

struct ModeTableKey {
    int n;
    int points;
    double extent;
    auto operator<=>(const ModeTableKey&) const = default;
};

std::mutex g_mode_mutex;
std::map<ModeTableKey, std::unique_ptr<std::vector<double>>> g_mode_tables;

}  // namespace

void dft_forward_raw(const GridSpec& spec, const Complex* in, Complex* out) {
    PlanEntry& entry = plan_for(spec);
    fftw_execute_dft(entry.forward, as_fftw(const_cast<Complex*>(in)),
                     as_fftw(out));
}

void dft_backward_raw(const GridSpec& spec, const Complex* in, Complex* out) {
    PlanEntry& entry = plan_for(spec);
    fftw_execute_dft(entry.backward, as_fftw(const_cast<Complex*>(in)),
                     as_fftw(out));
}

const std::vector<double>& mode_frequency_sq_table(const GridSpec& spec) {
    std::scoped_lock lock(g_mode_mutex);
    ModeTableKey key{spec.n, spec.points_per_axis, spec.extent};
    auto it = g_mode_tables.find(key);
    if (it != g_mode_tables.end()) return *it->second;

    auto table = std::make_unique<std::vector<double>>(spec.cells());
    for (std::size_t i = 0; i < table->size(); ++i)
        (*table)[i] = spec.mode_frequency_sq(i);
    auto [pos, inserted] = g_mode_tables.emplace(key, std::move(table));
    return *pos->second;
}

SpectralField dft_forward(const SpatialField& f) {
    SpectralField out{f.spec, std::vector<Complex>(f.spec.cells())};
    dft_forward_raw(f.spec, f.values.data(), out.coeffs.data());
    // Scale so that sum |coeff|^2 = sum |f|^2 * cellvol.
    const double scale = std::sqrt(f.spec.cell_volume()) /
                         std::sqrt(static_cast<double>(f.spec.cells()));
    for (auto& c : out.coeffs) c *= scale;
    return out;
}

SpatialField dft_inverse(const SpectralField& c) {
    SpatialField out(c.spec);
    if (c.coeffs.size() != c.spec.cells())
        throw std::invalid_argument("coefficient count mismatch");
    dft_backward_raw(c.spec, c.coeffs.data(), out.values.data());
    const double scale = 1.0 / (std::sqrt(c.spec.cell_volume()) *
                                std::sqrt(static_cast<double>(c.spec.cells())));
    for (auto& v : out.values) v *= scale;
    return out;
}

SpatialField apply_radial_multiplier(const SpatialField& f,
                                     const RadialMultiplier& multiplier) {
    const auto& xi_sq = mode_frequency_sq_table(f.spec);
    std::vector<Complex> hat(f.spec.cells());
    dft_forward_raw(f.spec, f.values.data(), hat.data());
    for (std::size_t i = 0; i < hat.size(); ++i) hat[i] *= multiplier(xi_sq[i]);
    SpatialField out(f.spec);
    dft_backward_raw(f.spec, hat.data(), out.values.data());
    const double norm = 1.0 / static_cast<double>(f.spec.cells());
    for (auto& v : out.values) v *= norm;
    return out;
}

}  // namespace strichartz
