#include "strichartz/atoms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "strichartz/norms.hpp"

namespace strichartz {

namespace {

// Smallest integer k with m <= 2^k, robust against log2 rounding at the
// dyadic boundaries.
int band_index(double m) {
    int k = static_cast<int>(std::ceil(std::log2(m)));
    while (std::exp2(k) < m) ++k;
    while (std::exp2(k - 1) >= m) --k;
    return k;
}

}  // namespace

std::vector<RearrangementStep> rearrangement(const SpatialField& f) {
    const double v = f.spec.cell_volume();
    std::vector<std::size_t> order(f.values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&f](std::size_t a, std::size_t b) {
                         return std::abs(f.values[a]) > std::abs(f.values[b]);
                     });
    std::vector<RearrangementStep> steps(order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        steps[i] = {std::abs(f.values[order[i]]),
                    static_cast<double>(i + 1) * v};
    return steps;
}

double rearrangement_norm(const std::vector<RearrangementStep>& steps,
                          double p) {
    if (p < 1) throw std::invalid_argument("rearrangement_norm: p >= 1");
    double sum = 0;
    double previous = 0;
    for (const auto& step : steps) {
        if (step.modulus > 0)
            sum += std::pow(step.modulus, p) *
                   (step.cumulative_measure - previous);
        previous = step.cumulative_measure;
    }
    return std::pow(sum, 1.0 / p);
}

AtomDecomposition decompose(const SpatialField& f, double p) {
    if (p < 1 || !std::isfinite(p))
        throw std::invalid_argument("decompose: p must lie in [1, inf)");
    AtomDecomposition out;
    out.p = p;

    const double v = f.spec.cell_volume();
    std::vector<std::size_t> order;
    order.reserve(f.values.size());
    for (std::size_t i = 0; i < f.values.size(); ++i)
        if (std::abs(f.values[i]) > 0) order.push_back(i);
    if (order.empty()) return out;
    std::stable_sort(order.begin(), order.end(),
                     [&f](std::size_t a, std::size_t b) {
                         return std::abs(f.values[a]) > std::abs(f.values[b]);
                     });

    std::size_t begin = 0;
    while (begin < order.size()) {
        const int k = band_index(static_cast<double>(begin + 1) * v);
        std::size_t end = begin;
        while (end < order.size() &&
               band_index(static_cast<double>(end + 1) * v) == k)
            ++end;

        const double peak = std::abs(f.values[order[begin]]);
        const double c_k = peak * std::exp2(static_cast<double>(k) / p);

        AtomEntry entry;
        entry.k = k;
        entry.coefficient = c_k;
        entry.atom = SpatialField(f.spec);
        for (std::size_t i = begin; i < end; ++i)
            entry.atom.values[order[i]] = f.values[order[i]] / c_k;
        entry.sup_modulus = sup_norm(entry.atom);
        entry.support_measure = static_cast<double>(end - begin) * v;
        out.entries.push_back(std::move(entry));
        begin = end;
    }
    return out;
}

std::string atoms_csv(const AtomDecomposition& d) {
    std::ostringstream os;
    os << "k,c_k,sup,support_measure\n";
    char buf[96];
    for (const auto& e : d.entries) {
        std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g\n", e.k,
                      e.coefficient, e.sup_modulus, e.support_measure);
        os << buf;
    }
    return os.str();
}

AtomAudit audit(const SpatialField& f, const AtomDecomposition& d) {
    SpatialField sum(f.spec);
    for (const auto& e : d.entries)
        for (std::size_t i = 0; i < sum.values.size(); ++i)
            sum.values[i] += e.coefficient * e.atom.values[i];

    AtomAudit a{0, 0, 0, 0};
    for (std::size_t i = 0; i < sum.values.size(); ++i)
        a.reconstruction_error = std::max(
            a.reconstruction_error, std::abs(sum.values[i] - f.values[i]));

    double coeff_sum = 0;
    for (const auto& e : d.entries) {
        a.max_height_ratio =
            std::max(a.max_height_ratio,
                     e.sup_modulus * std::exp2(e.k / d.p));
        a.max_support_ratio =
            std::max(a.max_support_ratio, e.support_measure * std::exp2(-e.k));
        coeff_sum += std::pow(e.coefficient, d.p);
    }
    const double f_norm = lebesgue_norm(f, 1.0 / d.p);
    a.coefficient_ratio =
        f_norm > 0 ? std::pow(coeff_sum, 1.0 / d.p) / f_norm : 0.0;
    return a;
}

}  // namespace strichartz
