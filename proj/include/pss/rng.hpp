#pragma once

#include <cstdint>

namespace pss {

// SplitMix64. Bit-stable across platforms and standard libraries; every
// seeded stream in the project goes through this generator so corpora,
// exploration and transcripts replay exactly.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); n = 0 yields 0.
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

  // True with probability percent/100; integer arithmetic only.
  bool chance_percent(std::uint64_t percent) { return next() % 100 < percent; }

private:
  std::uint64_t state_;
};

// Counter-based value: independent of call order, suitable for per-episode
// streams that must not interleave with other draws.
inline std::uint64_t mix64(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace pss
