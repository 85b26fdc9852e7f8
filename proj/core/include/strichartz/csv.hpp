#pragma once

// Sweep CSV layer: '#'-prefixed metadata comments (artifact version and
// config hash first), one header row, one row per record, then summary
// comment lines. Rendering is fully deterministic: fixed "%.17g" number
// formatting, no timestamps, insertion-ordered columns.

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace strichartz {

inline constexpr std::string_view kArtifactVersion = "0.1.0";

// One row of an experiment sweep: the swept parameter plus named measured
// quantities and derived ratios, in column order.
struct SweepRecord {
    double parameter = 0;
    std::vector<std::pair<std::string, double>> values;
};

struct CsvDocument {
    std::vector<std::string> metadata;  // emitted as "# <line>"
    std::string parameter_name;         // first column header
    std::vector<SweepRecord> records;
    std::vector<std::string> summary;   // emitted as "# summary <line>"
};

std::string format_double(double v);  // shortest stable form, "%.17g"

std::uint64_t fnv1a(std::string_view text);
std::string hex64(std::uint64_t v);

std::string render_csv(const CsvDocument& doc);

// Writes via temp file + rename in the target directory.
void write_csv_atomic(const std::filesystem::path& path,
                      const CsvDocument& doc);

}  // namespace strichartz
