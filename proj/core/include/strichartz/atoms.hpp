#pragma once

// Executable atomic decomposition of L^p on the grid: f = sum_k c_k atom_k
// with every atom bounded by 2^{-k/p}, supported on measure at most 2^k, and
// (sum c_k^p)^{1/p} <= 4^{1/p} ||f||_p. Built from the non-increasing
// rearrangement: cells are ranked by modulus (ties by grid index), the cell
// at rank i owns the measure position (i+1) * cellvol, and band k collects
// positions in (2^{k-1}, 2^k]. The audited constants C_a = 2, C_s = 2,
// C_c = 4 hold with room to spare for this band convention.

#include <string>
#include <vector>

#include "strichartz/grid.hpp"

namespace strichartz {

struct RearrangementStep {
    double modulus;
    double cumulative_measure;  // in cell-volume units, includes this cell
};

// All cells sorted by non-increasing modulus; total measure equals the
// domain volume.
std::vector<RearrangementStep> rearrangement(const SpatialField& f);

// ||f||_p evaluated from a rearrangement (equimeasurability makes this equal
// to lebesgue_norm(f, 1/p)).
double rearrangement_norm(const std::vector<RearrangementStep>& steps,
                          double p);

struct AtomEntry {
    int k;
    double coefficient;      // c_k, non-negative
    SpatialField atom;
    double sup_modulus;      // max |atom_k|, audited against 2 * 2^{-k/p}
    double support_measure;  // cells * cellvol, audited against 2 * 2^k
};

struct AtomDecomposition {
    double p = 1;
    std::vector<AtomEntry> entries;  // ascending k; empty for f = 0
};

// Requires p in [1, inf). The zero field yields an empty decomposition.
AtomDecomposition decompose(const SpatialField& f, double p);

// One row per entry: k, c_k, sup, support_measure.
std::string atoms_csv(const AtomDecomposition& d);

// Empirical audit of the decomposition invariants for one field.
struct AtomAudit {
    double reconstruction_error;  // sup |f - sum c_k atom_k|
    double max_height_ratio;      // max_k sup|atom_k| / 2^{-k/p}
    double max_support_ratio;     // max_k support_k / 2^k
    double coefficient_ratio;     // ||c||_{l^p} / ||f||_p
};
AtomAudit audit(const SpatialField& f, const AtomDecomposition& d);

}  // namespace strichartz
