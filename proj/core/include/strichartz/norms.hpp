#pragma once

// Riemann-sum Lebesgue norms and mixed space-time norms, in reciprocal
// exponents (1/r = 0 means the sup norm). Plain cell sums: exact on
// grid-aligned indicators and spectrally accurate on band-limited fields,
// which covers every integrand measured here.

#include "strichartz/grid.hpp"
#include "strichartz/rational.hpp"

namespace strichartz {

// (sum |f|^r cellvol)^{1/r}; inv_r = 0 gives max |f|.
double lebesgue_norm(const SpatialField& f, double inv_r);
double lebesgue_norm(const SpatialField& f, const Rational& inv_r);

// (sum_t ||u(.,t)||_r^q dt)^{1/q} with the left-endpoint time rule;
// inv_q = 0 gives the max over slices.
double mixed_norm(const SpaceTimeField& u, double inv_q, double inv_r);
double mixed_norm(const SpaceTimeField& u, const Rational& inv_q,
                  const Rational& inv_r);

// <f, g> = sum f conj(g) cellvol.
Complex inner_product(const SpatialField& f, const SpatialField& g);

double sup_norm(const SpatialField& f);

}  // namespace strichartz
