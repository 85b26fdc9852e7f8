#pragma once

#include <span>
#include <utility>

namespace strichartz {

struct SlopeFit {
    double slope = 0;
    double intercept = 0;
    double max_residual = 0;
    int count = 0;
};

// Least-squares line through the given (x, y) points.
SlopeFit fit_linear(std::span<const std::pair<double, double>> points);

// Least-squares line through (log x, log y); rejects non-positive values
// and fewer than 3 points.
SlopeFit fit_loglog(std::span<const std::pair<double, double>> points);

}  // namespace strichartz
