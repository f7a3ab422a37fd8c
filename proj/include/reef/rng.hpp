#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace reef {

// Deterministic random stream. Wraps std::mt19937_64 but derives uniforms and
// normals itself: std distributions keep hidden per-object caches whose state
// cannot be checkpointed, which would break bit-compatible resume.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi);

  // Uniform integer in [0, n); n must be positive.
  std::uint64_t uniform_index(std::uint64_t n);

  // Box-Muller without the cached spare; consumes exactly two raw draws.
  double normal(double mean, double stddev);

  std::string save_state() const;
  void load_state(const std::string& state);

  bool operator==(const Rng& other) const { return gen_ == other.gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace reef
