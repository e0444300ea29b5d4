#pragma once

#include <cstdint>
#include <random>

namespace mtvrp {

// Seedable, splittable random source with a fully specified bit stream:
// std::mt19937_64 seeded through SplitMix64, plus distribution code written
// here (the standard distributions are implementation defined, which would
// make golden files compiler dependent).
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  // Independent substream for (this seed, index).
  Rng split(std::uint64_t index) const { return Rng(seed_, mix(stream_, index)); }

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // Uniform integer in [lo, hi], rejection sampled.
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  bool bernoulli(double p) { return uniform() < p; }

  std::uint64_t seed() const { return seed_; }

  static std::uint64_t splitmix64(std::uint64_t x);

 private:
  static std::uint64_t mix(std::uint64_t a, std::uint64_t b);

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

}  // namespace mtvrp
