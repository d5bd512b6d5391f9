#include "mfslice/random.hpp"

#include <cmath>

namespace mfslice {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Complex Rng::complex_gaussian() {
    static const double scale = 1.0 / std::sqrt(2.0);
    const double re = normal_(engine_);
    const double im = normal_(engine_);
    return {scale * re, scale * im};
}

Element Rng::gaussian_element(std::size_t n) {
    Element x(n);
    for (auto& z : x) z = complex_gaussian();
    return x;
}

}  // namespace mfslice
