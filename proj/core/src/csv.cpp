#include "strichartz/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace strichartz {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::string hex64(std::uint64_t v) {
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(v));
    return buf;
}

std::string render_csv(const CsvDocument& doc) {
    std::ostringstream os;
    os << "# strichartz-lab v" << kArtifactVersion << "\n";
    for (const auto& line : doc.metadata) os << "# " << line << "\n";

    os << doc.parameter_name;
    if (!doc.records.empty())
        for (const auto& [name, value] : doc.records.front().values)
            os << "," << name;
    os << "\n";

    for (const auto& record : doc.records) {
        os << format_double(record.parameter);
        for (const auto& [name, value] : record.values)
            os << "," << format_double(value);
        os << "\n";
    }
    for (const auto& line : doc.summary) os << "# summary " << line << "\n";
    return os.str();
}

void write_csv_atomic(const std::filesystem::path& path,
                      const CsvDocument& doc) {
    const std::string body = render_csv(doc);
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os)
            throw std::runtime_error("cannot write " + tmp.string());
        os << body;
        if (!os)
            throw std::runtime_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace strichartz
