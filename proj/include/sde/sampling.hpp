#pragma once

// Seeded rational sampling shared by difftest, the acceptance suite and the
// symmetry certifier.
//
// Distribution: numerator uniform in [-9, 9], denominator uniform in [1, 9],
// reduced. Draws come from std::mt19937_64; trial i of a batch is seeded with
// splitmix64(base + i) so batches are reproducible and order-independent.

#include <cstdint>
#include <random>
#include <string>

#include "sde/exact.hpp"
#include "sde/systems.hpp"

namespace sde {

struct Distribution {
  long num_min = -9;
  long num_max = 9;
  long den_min = 1;
  long den_max = 9;
  int retry_cap = 64;  // redraws before a trial is counted as skipped

  std::string describe() const;
};

std::uint64_t splitmix64(std::uint64_t x);
inline std::uint64_t trial_seed(std::uint64_t base, std::uint64_t index) {
  return splitmix64(base + index);
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed, Distribution dist = {}) : rng_(seed), dist_(dist) {}

  /// Uniform integer in [lo, hi]; rejection sampling, so fully determined by
  /// the engine (std::uniform_int_distribution is not portable across
  /// standard libraries).
  long integer(long lo, long hi);
  Rational rational();
  Rational nonzero();

  SystemAParams params_a();
  SystemBParams params_b();
  /// Entries may be zero.
  SystemAInitial ics_a();
  /// All six entries nonzero.
  SystemBInitial ics_b();

  const Distribution& distribution() const { return dist_; }

 private:
  std::mt19937_64 rng_;
  Distribution dist_;
};

}  // namespace sde
