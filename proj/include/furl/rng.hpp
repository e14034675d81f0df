#pragma once

#include <cstdint>
#include <random>

namespace furl {

// Seeded generator with an unbiased inclusive integer draw. Rejection keeps
// uniform(1,T) free of modulo bias, which the reservoir marginals depend on.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform integer in [lo, hi], inclusive.
    std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t range = hi - lo + 1;
        if (range == 0) return engine_();  // full 64-bit range
        std::uint64_t x, r;
        do {
            x = engine_();
            r = x % range;
        } while (x - r > std::uint64_t(0) - range);
        return lo + r;
    }

    // Uniform double in [0,1).
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return uniform01() < p; }

private:
    std::mt19937_64 engine_;
};

}  // namespace furl
