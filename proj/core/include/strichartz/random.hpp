#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace strichartz {

// Deterministic random source. The engine is the standards-fixed
// mt19937_64 and the Gaussian transform is an explicit Box-Muller on raw
// uniforms, so streams are reproducible bit-for-bit across platforms and
// standard-library implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double gaussian();

    // E|z|^2 = 1.
    std::complex<double> complex_gaussian() {
        const double scale = 0x1.6a09e667f3bcdp-1;  // 1/sqrt(2)
        return {gaussian() * scale, gaussian() * scale};
    }

    // Independent stream derived from this seed and a stream index;
    // the parent state is not advanced.
    Rng fork(std::uint64_t stream) const;

  private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0;
};

}  // namespace strichartz
