#pragma once

// Deterministic randomness helpers. std::mt19937_64 output is pinned by the
// standard; the distributions below avoid std::uniform_int_distribution,
// whose mapping is implementation-defined.

#include <cstdint>
#include <random>
#include <vector>

namespace unigraph {

using Rng = std::mt19937_64;

// Unbiased draw from [0, bound) via rejection.
inline std::uint64_t rng_below(Rng& rng, std::uint64_t bound) {
    if (bound == 0) return 0;
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do { x = rng(); } while (x >= limit);
    return x % bound;
}

template <typename T>
void rng_shuffle(Rng& rng, std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[rng_below(rng, i)]);
}

// splitmix64 step; used to derive independent child seeds.
inline std::uint64_t child_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace unigraph
