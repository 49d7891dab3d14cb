#pragma once

#include <cstdint>

namespace orpose {

// Deterministic splitmix64 generator. Self-contained so that sampled values
// never depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64();
  double uniform();                        // [0, 1)
  double uniform(double lo, double hi);    // [lo, hi)
  int uniform_int(int lo, int hi);         // inclusive bounds
  bool bernoulli(double p);
  double normal(double mean = 0.0, double stddev = 1.0);
  // Von Mises with mean 0 and concentration kappa, support (-pi, pi].
  double vonmises(double kappa);

  // Independent seed for a named substream of a master seed.
  static uint64_t derive_seed(uint64_t master, uint64_t stream, uint64_t index = 0);

 private:
  uint64_t state_;
};

}  // namespace orpose
