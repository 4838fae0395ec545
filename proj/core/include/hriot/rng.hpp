// Portable seeded PRNG used by all stochastic simulation components.
//
// xorshift64* (shifts 12/25/27, multiplier 0x2545F4914F6CDD1D). The same
// constants produce the same stream on every platform, which is what makes
// run results byte-reproducible across machines.
#pragma once

#include <cstdint>

namespace hriot {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9E3779B97F4A7C15ULL) {}

  std::uint64_t next_u64() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1DULL;
  }

  // Uniform double in [0, 1), 53 bits of entropy.
  double uniform() { return (next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return n ? next_u64() % n : 0; }

  bool bernoulli(double p) { return uniform() < p; }

  // Knuth's product method; fine for the small per-round rates used here.
  unsigned poisson(double mean);

 private:
  std::uint64_t state_;
};

}  // namespace hriot
