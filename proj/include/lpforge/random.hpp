#pragma once

#include <cstdint>
#include <random>

#include "lpforge/scalar.hpp"

namespace lpforge {

// Seeded RNG with hand-rolled distributions. std::uniform_*_distribution is
// implementation-defined, so sampling goes through raw engine output to keep
// runs reproducible from the seed alone.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // uniform integer in [lo, hi]
  long long uniform_int(long long lo, long long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    // rejection sampling to avoid modulo bias
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return lo + static_cast<long long>(v % span);
  }

  // uniform real in [0, 1)
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // small random rational with |num| <= num_max, 1 <= den <= den_max
  Rat uniform_rat(long long num_max, long long den_max) {
    const long long num = uniform_int(-num_max, num_max);
    const long long den = uniform_int(1, den_max);
    return make_rat(num, den);
  }

  // independent stream derived from the original seed (per trial / shard)
  Rng split(std::uint64_t stream) const {
    return Rng(seed_ ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace lpforge
