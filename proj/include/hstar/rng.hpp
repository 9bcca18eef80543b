#pragma once

#include <cstdint>
#include <random>

#include "hstar/rational.hpp"

namespace hstar {

/// Seeded random source. All derived draws use rejection sampling on the raw
/// 64-bit stream so that output is identical across platforms and standard
/// library implementations.
class Rng {
    std::mt19937_64 eng_;

  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform in [0, n), n >= 1.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % n;
    }

    /// Uniform in [lo, hi], inclusive.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    /// Uniform in [-bound, bound] \ {0}.
    std::int64_t nonzero(std::int64_t bound) {
        std::int64_t x;
        do {
            x = uniform(-bound, bound);
        } while (x == 0);
        return x;
    }

    /// Integer-valued rational of height at most `bound`.
    Rat rat_int(std::int64_t bound) { return Rat(uniform(-bound, bound)); }

    Rat rat_nonzero(std::int64_t bound) { return Rat(nonzero(bound)); }

    bool coin() { return (eng_() & 1) != 0; }
};

}  // namespace hstar
