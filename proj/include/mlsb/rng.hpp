#pragma once

#include <cstdint>

namespace mlsb {

// SplitMix64 (Steele, Lea, Flood 2014). The generator is pinned by name so
// instances reproduce bit-for-bit across platforms and reimplementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound); bound must be positive. Rejection sampling keeps
  // the draw unbiased.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0ULL - bound) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace mlsb
