#include "graphex/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "graphex/errors.hpp"

namespace graphex {

void IntervalUnion::add(double a, double b) {
  if (!(a <= b)) throw std::invalid_argument("IntervalUnion: interval endpoints out of order");
  if (a < b) parts_.emplace_back(a, b);
}

bool IntervalUnion::contains(double x) const {
  for (const auto& [a, b] : parts_) {
    if (x >= a && x < b) return true;
  }
  return false;
}

double IntervalUnion::length() const {
  double s = 0.0;
  for (const auto& [a, b] : parts_) s += b - a;
  return s;
}

Multigraph p_sample(const Multigraph& g, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p_sample: p must be in [0,1]");
  std::vector<bool> keep(g.vertex_count());
  for (uint32_t v = 0; v < g.vertex_count(); ++v) keep[v] = rng.bernoulli(p);
  std::vector<Edge> kept;
  for (const auto& e : g.edges()) {
    if (keep[e.u] && keep[e.v]) kept.push_back(e);
  }
  // Induced graph on the kept vertices, then isolated removal; composing the
  // two relabelings directly would be equivalent.
  Multigraph induced(g.vertex_count(), std::move(kept));
  return induced.drop_isolated();
}

double canonical_window(const Multigraph& g) {
  return std::sqrt(2.0 * static_cast<double>(g.non_loop_edge_count()));
}

Multigraph canonical_sample(const Multigraph& g, double t, Rng& rng) {
  if (g.non_loop_edge_count() == 0) {
    throw std::invalid_argument("canonical_sample: graph must have at least one non-loop edge");
  }
  double p = t / canonical_window(g);
  if (p > 1.0) throw RateExceedsOne("canonical_sample: t/sqrt(2e) exceeds 1");
  return p_sample(g, p, rng);
}

AdjacencyMeasure label(const Multigraph& g, double s, Rng& rng) {
  if (!(s > 0.0)) throw std::invalid_argument("label: window must be positive");
  std::vector<double> u(g.vertex_count());
  for (int attempt = 0; attempt < 64; ++attempt) {
    for (auto& x : u) x = rng.uniform(0.0, s);
    std::vector<double> sorted = u;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) {
      AdjacencyMeasure xi;
      xi.window = s;
      xi.points.reserve(g.edges().size());
      for (const auto& e : g.edges()) xi.points.push_back({u[e.u], u[e.v], e.mult});
      return xi;
    }
    // Collision of 64-bit labels: redraw the replicate.
  }
  throw CollisionRetry("label: persistent label collisions");
}

uint64_t count(const AdjacencyMeasure& xi, const IntervalUnion& a, const IntervalUnion& b) {
  uint64_t total = 0;
  for (const auto& pt : xi.points) {
    if (pt.x == pt.y) {
      if (a.contains(pt.x) && b.contains(pt.x)) total += pt.mult;
      continue;
    }
    if (a.contains(pt.x) && b.contains(pt.y)) total += pt.mult;
    if (a.contains(pt.y) && b.contains(pt.x)) total += pt.mult;
  }
  return total;
}

Multigraph extract_graph(const AdjacencyMeasure& xi, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("extract_graph: t must be >= 0");
  if (t > xi.window && xi.window > 0.0) {
    throw std::invalid_argument("extract_graph: t exceeds the measure window");
  }
  std::map<double, uint32_t> ids;
  std::vector<Edge> edges;
  auto id_of = [&](double x) {
    auto [it, inserted] = ids.emplace(x, static_cast<uint32_t>(ids.size()));
    return it->second;
  };
  for (const auto& pt : xi.points) {
    if (pt.x > t || pt.y > t) continue;
    uint32_t u = id_of(pt.x);
    uint32_t v = id_of(pt.y);
    edges.push_back({u, v, pt.mult});
  }
  Multigraph g(static_cast<uint32_t>(ids.size()), std::move(edges));
  return g.drop_isolated();
}

}  // namespace graphex
