#pragma once

#include <cstdint>

namespace oplat {

/// SplitMix64, the single named generator behind every seeded random path
/// (witness retries, rank-one sampling, property suites). Chosen for its
/// trivially portable definition: reports derived from a given seed are
/// byte-identical on every platform.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound); rejection keeps it exactly uniform.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = (-bound) % bound;
        std::uint64_t r = next();
        while (r < threshold) r = next();
        return r % bound;
    }

    /// Uniform integer in [lo, hi], inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    bool chance(unsigned num, unsigned den) { return below(den) < num; }

  private:
    std::uint64_t state_;
};

}  // namespace oplat
