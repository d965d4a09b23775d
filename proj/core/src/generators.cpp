#include "graphex/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "graphex/errors.hpp"

namespace graphex {

DegreeSequence::DegreeSequence(std::vector<uint32_t> degrees) : degrees_(std::move(degrees)) {
  for (uint32_t d : degrees_) {
    if (d == 0) throw std::invalid_argument("DegreeSequence: zero degrees are not allowed");
    sum_ += d;
  }
  if (sum_ % 2 != 0) throw OddHalfEdgeSum("DegreeSequence: half-edge sum must be even");
}

WeightSequence::WeightSequence(std::vector<double> weights) : weights_(std::move(weights)) {
  for (double w : weights_) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument("WeightSequence: weights must be finite and >= 0");
    }
    total_ += w;
  }
  if (!(total_ > 0.0)) throw std::invalid_argument("WeightSequence: total weight must be positive");
}

BipartiteDegrees::BipartiteDegrees(std::vector<uint32_t> side1, std::vector<uint32_t> side2)
    : side1_(std::move(side1)), side2_(std::move(side2)) {
  uint64_t s1 = 0, s2 = 0;
  for (uint32_t d : side1_) {
    if (d == 0) throw std::invalid_argument("BipartiteDegrees: zero degrees are not allowed");
    s1 += d;
  }
  for (uint32_t d : side2_) {
    if (d == 0) throw std::invalid_argument("BipartiteDegrees: zero degrees are not allowed");
    s2 += d;
  }
  if (s1 != s2) throw UnbalancedSides("BipartiteDegrees: side half-edge sums differ");
  side_sum_ = s1;
}

Multigraph configuration_model(const DegreeSequence& d, Rng& rng) {
  const auto& deg = d.degrees();
  std::vector<uint32_t> stubs;
  stubs.reserve(d.half_edge_sum());
  for (uint32_t v = 0; v < deg.size(); ++v) {
    for (uint32_t k = 0; k < deg[v]; ++k) stubs.push_back(v);
  }
  rng.shuffle(stubs);
  std::vector<std::pair<uint32_t, uint32_t>> pairs;
  pairs.reserve(stubs.size() / 2);
  for (size_t i = 0; i + 1 < stubs.size(); i += 2) pairs.emplace_back(stubs[i], stubs[i + 1]);
  return Multigraph::from_pairs(static_cast<uint32_t>(deg.size()), pairs);
}

Multigraph erase(const Multigraph& g) {
  std::vector<Edge> edges = g.edges();
  for (auto& e : edges) e.mult = 1;
  return Multigraph(g.vertex_count(), std::move(edges));
}

Multigraph preferential_attachment(const WeightSequence& delta, uint64_t m, Rng& rng) {
  if (m == 0) throw std::invalid_argument("preferential_attachment: m must be >= 1");
  const auto& del = delta.weights();
  const uint32_t n = static_cast<uint32_t>(del.size());
  const double l_delta = delta.total();

  // Static part: prefix sums of delta for binary search. Dynamic part: one
  // entry per degree unit, so a uniform entry is a degree-proportional draw.
  std::vector<double> prefix(n + 1, 0.0);
  for (uint32_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + del[i];
  std::vector<uint32_t> endpoint_log;
  endpoint_log.reserve(2 * m);

  auto draw_endpoint = [&](uint64_t l) -> uint32_t {
    double total = l_delta + 2.0 * static_cast<double>(l);
    for (;;) {
      double x = rng.uniform() * total;
      if (x < l_delta) {
        uint32_t idx = static_cast<uint32_t>(
            std::upper_bound(prefix.begin(), prefix.end(), x) - prefix.begin() - 1);
        if (idx >= n) idx = n - 1;  // guards the x == l_delta boundary
        if (del[idx] > 0.0) return idx;
        continue;  // zero-strength vertex hit by a boundary artifact; redraw
      }
      uint64_t unit = static_cast<uint64_t>((x - l_delta));
      if (unit >= endpoint_log.size()) unit = endpoint_log.size() - 1;
      return endpoint_log[unit];
    }
  };

  std::vector<std::pair<uint32_t, uint32_t>> pairs;
  pairs.reserve(m);
  for (uint64_t l = 0; l < m; ++l) {
    // Both balls drawn with the step-l weights, then replaced.
    uint32_t i = draw_endpoint(l);
    uint32_t j = draw_endpoint(l);
    pairs.emplace_back(i, j);
    endpoint_log.push_back(i);
    endpoint_log.push_back(j);
  }
  return Multigraph::from_pairs(n, pairs);
}

namespace {

Multigraph grg_pairwise(const WeightSequence& ws, Rng& rng) {
  const auto& w = ws.weights();
  const double L = ws.total();
  const uint32_t n = static_cast<uint32_t>(w.size());
  std::vector<std::pair<uint32_t, uint32_t>> pairs;
  for (uint32_t i = 0; i < n; ++i) {
    for (uint32_t j = i + 1; j < n; ++j) {
      double wij = w[i] * w[j];
      if (rng.bernoulli(wij / (L + wij))) pairs.emplace_back(i, j);
    }
  }
  return Multigraph::from_pairs(n, pairs);
}

// Sorted-weight scan with geometric skips: within row i the probabilities
// p_ij are nonincreasing in j, so candidate partners are proposed with the
// row's running maximum and accepted with ratio p_ij / p_max.
Multigraph grg_skipping(const WeightSequence& ws, Rng& rng) {
  const auto& w = ws.weights();
  const double L = ws.total();
  const uint32_t n = static_cast<uint32_t>(w.size());
  std::vector<uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
    if (w[a] != w[b]) return w[a] > w[b];
    return a < b;
  });
  std::vector<std::pair<uint32_t, uint32_t>> pairs;
  for (uint32_t a = 0; a < n; ++a) {
    double wi = w[order[a]];
    uint32_t b = a + 1;
    while (b < n) {
      double pmax = wi * w[order[b]] / (L + wi * w[order[b]]);
      if (pmax <= 0.0) break;
      uint64_t skip = rng.geometric_failures(pmax);
      if (skip >= static_cast<uint64_t>(n - b)) break;
      b += static_cast<uint32_t>(skip);
      double pij = wi * w[order[b]] / (L + wi * w[order[b]]);
      if (rng.uniform() * pmax < pij) pairs.emplace_back(order[a], order[b]);
      ++b;
    }
  }
  return Multigraph::from_pairs(n, pairs);
}

}  // namespace

Multigraph generalized_random_graph(const WeightSequence& w, Rng& rng, GrgMethod method) {
  for (double x : w.weights()) {
    if (!(x > 0.0)) throw std::invalid_argument("generalized_random_graph: weights must be > 0");
  }
  if (method == GrgMethod::kAuto) {
    method = w.size() <= 2000 ? GrgMethod::kPairwise : GrgMethod::kSkipping;
  }
  return method == GrgMethod::kPairwise ? grg_pairwise(w, rng) : grg_skipping(w, rng);
}

Multigraph bipartite_configuration_model(const BipartiteDegrees& d, Rng& rng) {
  const uint32_t n1 = static_cast<uint32_t>(d.side1().size());
  const uint32_t n2 = static_cast<uint32_t>(d.side2().size());
  std::vector<uint32_t> stubs1, stubs2;
  stubs1.reserve(d.side_sum());
  stubs2.reserve(d.side_sum());
  for (uint32_t v = 0; v < n1; ++v) {
    for (uint32_t k = 0; k < d.side1()[v]; ++k) stubs1.push_back(v);
  }
  for (uint32_t v = 0; v < n2; ++v) {
    for (uint32_t k = 0; k < d.side2()[v]; ++k) stubs2.push_back(n1 + v);
  }
  rng.shuffle(stubs2);
  std::vector<std::pair<uint32_t, uint32_t>> pairs;
  pairs.reserve(stubs1.size());
  for (size_t i = 0; i < stubs1.size(); ++i) pairs.emplace_back(stubs1[i], stubs2[i]);
  return Multigraph::from_pairs(n1 + n2, pairs);
}

}  // namespace graphex
