#pragma once

#include <cstdint>
#include <random>

namespace netprio {

// Deterministic random helpers on top of mt19937_64. The standard
// distributions are implementation-defined, so the synthetic-data
// generator derives values itself to keep bundles byte-identical for a
// given seed everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n), n >= 1, by rejection.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t x = eng_();
            if (x >= threshold) return x % n;
        }
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace netprio
