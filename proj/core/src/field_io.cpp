#include "strichartz/field_io.hpp"

#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace strichartz {

namespace {

void put_u64_le(std::ostream& os, std::uint64_t v) {
    unsigned char bytes[8];
    for (int i = 0; i < 8; ++i) bytes[i] = static_cast<unsigned char>(v >> (8 * i));
    os.write(reinterpret_cast<const char*>(bytes), 8);
}

void put_f64_le(std::ostream& os, double v) {
    put_u64_le(os, std::bit_cast<std::uint64_t>(v));
}

std::uint64_t get_u64_le(std::istream& is) {
    unsigned char bytes[8];
    is.read(reinterpret_cast<char*>(bytes), 8);
    if (!is) throw std::runtime_error("truncated field file header");
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | bytes[i];
    return v;
}

double get_f64_le(std::istream& is) {
    return std::bit_cast<double>(get_u64_le(is));
}

std::filesystem::path sidecar_path(const std::filesystem::path& path) {
    auto p = path;
    p += ".spec.txt";
    return p;
}

void write_sidecar(const std::filesystem::path& path, const GridSpec& spec) {
    std::ofstream os(sidecar_path(path));
    if (!os)
        throw std::runtime_error("cannot write sidecar for " + path.string());
    char buf[64];
    auto num = [&buf](double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return std::string(buf);
    };
    os << "n=" << spec.n << "\n"
       << "points_per_axis=" << spec.points_per_axis << "\n"
       << "extent=" << num(spec.extent) << "\n"
       << "dt=" << num(spec.dt) << "\n"
       << "t0=" << num(spec.t0) << "\n"
       << "t1=" << num(spec.t1) << "\n";
}

GridSpec read_sidecar(const std::filesystem::path& path) {
    std::ifstream is(sidecar_path(path));
    if (!is)
        throw std::runtime_error("missing sidecar for " + path.string());
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(is, line)) {
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return GridSpec::make(std::stoi(kv.at("n")),
                          std::stoi(kv.at("points_per_axis")),
                          std::stod(kv.at("extent")), std::stod(kv.at("dt")),
                          std::stod(kv.at("t0")), std::stod(kv.at("t1")));
}

void write_binary(const std::filesystem::path& path, const GridSpec& spec,
                  const std::vector<const SpatialField*>& slices) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path.string());
    put_u64_le(os, static_cast<std::uint64_t>(spec.n));
    put_u64_le(os, static_cast<std::uint64_t>(spec.points_per_axis));
    put_f64_le(os, spec.extent);
    put_f64_le(os, spec.dt);
    put_u64_le(os, static_cast<std::uint64_t>(slices.size()));
    for (const SpatialField* slice : slices)
        for (const Complex& z : slice->values) {
            put_f64_le(os, z.real());
            put_f64_le(os, z.imag());
        }
    if (!os) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace

void write_field(const std::filesystem::path& path, const SpaceTimeField& u) {
    std::vector<const SpatialField*> slices;
    slices.reserve(u.slices.size());
    for (const auto& s : u.slices) slices.push_back(&s);
    write_binary(path, u.spec, slices);
    write_sidecar(path, u.spec);
}

void write_field(const std::filesystem::path& path, const SpatialField& f) {
    write_binary(path, f.spec, {&f});
    write_sidecar(path, f.spec);
}

SpaceTimeField read_field(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot read " + path.string());
    const auto n = static_cast<int>(get_u64_le(is));
    const auto points = static_cast<int>(get_u64_le(is));
    const double extent = get_f64_le(is);
    const double dt = get_f64_le(is);
    const auto slice_count = get_u64_le(is);

    GridSpec spec = read_sidecar(path);
    if (spec.n != n || spec.points_per_axis != points ||
        spec.extent != extent || spec.dt != dt)
        throw std::runtime_error("sidecar disagrees with binary header for " +
                                 path.string());

    SpaceTimeField u;
    u.spec = spec;
    u.slices.reserve(slice_count);
    for (std::uint64_t s = 0; s < slice_count; ++s) {
        SpatialField slice(spec);
        for (auto& z : slice.values) {
            const double re = get_f64_le(is);
            const double im = get_f64_le(is);
            z = Complex(re, im);
        }
        u.slices.push_back(std::move(slice));
    }
    if (!is) throw std::runtime_error("truncated field file " + path.string());
    return u;
}

SpatialField read_spatial_field(const std::filesystem::path& path) {
    SpaceTimeField u = read_field(path);
    if (u.slices.size() != 1)
        throw std::runtime_error("expected a single-slice field in " +
                                 path.string());
    return std::move(u.slices.front());
}

}  // namespace strichartz
