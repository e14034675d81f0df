#pragma once

#include <cstdint>

#include "furl/edge.hpp"

namespace furl {

// splitmix64 finalizer; full-avalanche 64-bit mixer.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Keyed hash of a canonical edge into the open interval (0,1). Duplicate
// arrivals of the same edge always hash equal; the value is a pure function
// of (edge, seed). The top 53 bits shifted into the mantissa keep the result
// strictly inside (0,1).
inline double hash01(Edge e, std::uint64_t hash_seed) {
    std::uint64_t key = (static_cast<std::uint64_t>(e.a) << 32) | e.b;
    std::uint64_t h = mix64(key ^ mix64(hash_seed));
    return (static_cast<double>(h >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace furl
