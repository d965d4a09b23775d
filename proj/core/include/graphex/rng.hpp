#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace graphex {

uint64_t splitmix64(uint64_t x);
uint64_t fnv1a64(std::string_view s);

// Deterministic random stream. The engine is std::mt19937_64 (sequence fixed
// by the standard); all variate generation is done by the helpers below so
// that results do not depend on the standard library's distribution
// implementations. Replicate-level streams are derived from
// (master seed, experiment id, replicate index), which makes serial and
// multi-threaded runs produce identical results.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(splitmix64(seed ^ 0x6a09e667f3bcc909ULL)) {}

  static Rng stream(uint64_t master_seed, std::string_view experiment, uint64_t replicate) {
    uint64_t h = fnv1a64(experiment);
    uint64_t s = splitmix64(master_seed ^ h);
    s = splitmix64(s ^ (0x9e3779b97f4a7c15ULL * (replicate + 1)));
    return Rng(s);
  }

  uint64_t next_u64() { return eng_(); }

  // Uniform on [0,1), 53-bit resolution.
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // Uniform on (0,1); safe as a log() argument.
  double uniform_pos() { return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  // Uniform integer in [0, n); n >= 1. Rejection-free in the common case.
  uint64_t uniform_below(uint64_t n);

  bool bernoulli(double p) { return uniform() < p; }

  uint64_t poisson(double lambda);
  uint64_t binomial(uint64_t n, double p);

  // Number of failures before the first success in Bernoulli(p) trials.
  uint64_t geometric_failures(double p);

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(uniform_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace graphex
