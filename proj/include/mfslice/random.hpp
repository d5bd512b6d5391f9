#ifndef MFSLICE_RANDOM_HPP
#define MFSLICE_RANDOM_HPP

#include <cstdint>
#include <random>

#include "mfslice/scalar.hpp"

namespace mfslice {

/// SplitMix64 finalizer over (seed, stream). Sub-seeds for independent trials
/// and sampling stages all come from here, so results never depend on the
/// order in which trials execute.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

// Stream tags for derive_seed.
enum class SeedStream : std::uint64_t {
    Shift = 1,
    Orbit = 2,
    Trial = 3,
    Probe = 4,
    Slice = 5,
};

inline std::uint64_t derive_seed(std::uint64_t seed, SeedStream stream, std::uint64_t index = 0) {
    return derive_seed(derive_seed(seed, static_cast<std::uint64_t>(stream)), index);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Standard complex Gaussian: E|z|^2 = 1.
    Complex complex_gaussian();
    double gaussian() { return normal_(engine_); }
    double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }
    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }

    Element gaussian_element(std::size_t n);

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace mfslice

#endif  // MFSLICE_RANDOM_HPP
