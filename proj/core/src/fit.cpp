#include "strichartz/fit.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace strichartz {

SlopeFit fit_linear(std::span<const std::pair<double, double>> points) {
    if (points.size() < 2)
        throw std::invalid_argument("fit_linear needs at least 2 points");
    const double n = static_cast<double>(points.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : points) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0) throw std::invalid_argument("fit_linear: degenerate x");
    SlopeFit fit;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    fit.count = static_cast<int>(points.size());
    for (const auto& [x, y] : points)
        fit.max_residual = std::max(
            fit.max_residual, std::abs(y - (fit.slope * x + fit.intercept)));
    return fit;
}

SlopeFit fit_loglog(std::span<const std::pair<double, double>> points) {
    if (points.size() < 3)
        throw std::invalid_argument("fit_loglog needs at least 3 points");
    std::vector<std::pair<double, double>> logs;
    logs.reserve(points.size());
    for (const auto& [x, y] : points) {
        if (!(x > 0) || !(y > 0))
            throw std::invalid_argument(
                "fit_loglog requires strictly positive values");
        logs.emplace_back(std::log(x), std::log(y));
    }
    return fit_linear(logs);
}

}  // namespace strichartz
