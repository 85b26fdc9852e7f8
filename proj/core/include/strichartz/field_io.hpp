#pragma once

// Flat binary field files: a little-endian header of five 64-bit values
// (n, points_per_axis, L, dt, slice count), then interleaved real/imaginary
// 64-bit floats in row-major order, slices consecutive. A text sidecar at
// <path>.spec.txt records the full GridSpec including the time window.

#include <filesystem>

#include "strichartz/grid.hpp"

namespace strichartz {

void write_field(const std::filesystem::path& path, const SpaceTimeField& u);
void write_field(const std::filesystem::path& path, const SpatialField& f);

SpaceTimeField read_field(const std::filesystem::path& path);
SpatialField read_spatial_field(const std::filesystem::path& path);

}  // namespace strichartz
