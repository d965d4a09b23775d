#include "graphex/rng.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace graphex {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

uint64_t Rng::uniform_below(uint64_t n) {
  if (n == 0) throw std::invalid_argument("uniform_below: n must be positive");
  // Lemire's multiply-shift with rejection on the biased region.
  uint64_t x = next_u64();
  __uint128_t m = static_cast<__uint128_t>(x) * n;
  uint64_t lo = static_cast<uint64_t>(m);
  if (lo < n) {
    uint64_t threshold = (0 - n) % n;
    while (lo < threshold) {
      x = next_u64();
      m = static_cast<__uint128_t>(x) * n;
      lo = static_cast<uint64_t>(m);
    }
  }
  return static_cast<uint64_t>(m >> 64);
}

uint64_t Rng::poisson(double lambda) {
  if (!(lambda >= 0.0)) throw std::invalid_argument("poisson: lambda must be >= 0");
  if (lambda == 0.0) return 0;
  // Split large rates additively; keeps the product method exact and avoids
  // exp underflow.
  uint64_t total = 0;
  while (lambda > 30.0) {
    double half = lambda / 2.0;
    total += poisson(half);
    lambda -= half;
  }
  double limit = std::exp(-lambda);
  double prod = 1.0;
  uint64_t k = 0;
  for (;;) {
    prod *= uniform_pos();
    if (prod <= limit) return total + k;
    ++k;
  }
}

uint64_t Rng::geometric_failures(double p) {
  if (p >= 1.0) return 0;
  if (p <= 0.0) throw std::invalid_argument("geometric_failures: p must be > 0");
  double u = uniform_pos();
  double g = std::floor(std::log(u) / std::log1p(-p));
  if (g >= static_cast<double>(std::numeric_limits<int64_t>::max())) {
    return std::numeric_limits<int64_t>::max();
  }
  return static_cast<uint64_t>(g);
}

uint64_t Rng::binomial(uint64_t n, double p) {
  if (n == 0 || p <= 0.0) return 0;
  if (p >= 1.0) return n;
  if (p > 0.5) return n - binomial(n, 1.0 - p);
  // Waiting-time method: cost O(np), exact for any n.
  uint64_t count = 0;
  uint64_t pos = geometric_failures(p);
  while (pos < n) {
    ++count;
    pos += 1 + geometric_failures(p);
  }
  return count;
}

}  // namespace graphex
