#pragma once

// Self-contained SVG output: the exponent-region diagram in reciprocal
// coordinates, and a log-log scatter with a fitted line for sweeps. No
// external assets; deterministic text.

#include <string>
#include <utility>
#include <vector>

#include <strichartz/exponents.hpp>
#include <strichartz/fit.hpp>

namespace strichartz::tool {

// Unit-square diagram of the (1/r, 1/rt) geometry for dimension n: the
// admissible pentagon A B B' P P', the four regime triangles, labeled
// vertices.
std::string region_diagram_svg(int n);

std::string loglog_plot_svg(const std::string& title,
                            const std::string& x_label,
                            const std::string& y_label,
                            const std::vector<std::pair<double, double>>& pts,
                            const SlopeFit& fit);

}  // namespace strichartz::tool
