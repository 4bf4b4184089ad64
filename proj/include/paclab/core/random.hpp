#pragma once

#include <cstdint>

namespace paclab::core {

// Deterministic counter-seeded generator. Every (seed, stream) pair yields the
// same sequence on every platform and at every worker count; Monte-Carlo
// drivers give each trial its own stream id so parallel schedules cannot
// change results. Core is xoshiro256++ seeded through splitmix64.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();

  // Uniform in [0, 1), 53-bit resolution.
  double next_double();

  // Uniform in [0, n), unbiased (rejection); n = 0 is invalid.
  std::uint64_t below(std::uint64_t n);

  bool bernoulli(double p);

  // Derived independent stream; does not disturb this generator's state.
  Rng substream(std::uint64_t id) const;

 private:
  std::uint64_t s_[4];
  std::uint64_t seed_;
  std::uint64_t stream_;
};

// Root of a run's randomness: a seed plus a stream namespace.
struct RandomSource {
  std::uint64_t seed = 0;

  Rng stream(std::uint64_t id) const { return Rng(seed, id); }
  Rng stream(std::uint64_t a, std::uint64_t b) const {
    return Rng(seed, a * 0x9e3779b97f4a7c15ull + b);
  }
};

}  // namespace paclab::core
