#include "graphex/multigraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace graphex {

namespace {

uint64_t pair_code(uint32_t u, uint32_t v) {
  return (static_cast<uint64_t>(u) << 32) | v;
}

}  // namespace

Multigraph::Multigraph(uint32_t n_vertices, std::vector<Edge> edges) : n_(n_vertices) {
  for (auto& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.v >= n_ && e.mult > 0) throw std::out_of_range("Multigraph: vertex index out of range");
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return pair_code(a.u, a.v) < pair_code(b.u, b.v);
  });
  edges_.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.mult == 0) continue;
    if (!edges_.empty() && edges_.back().u == e.u && edges_.back().v == e.v) {
      edges_.back().mult += e.mult;
    } else {
      edges_.push_back(e);
    }
  }
  for (const auto& e : edges_) {
    if (e.u == e.v) {
      loops_ += e.mult;
    } else {
      non_loop_ += e.mult;
    }
  }
}

Multigraph Multigraph::from_pairs(uint32_t n_vertices,
                                  std::span<const std::pair<uint32_t, uint32_t>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) edges.push_back({u, v, 1});
  return Multigraph(n_vertices, std::move(edges));
}

std::vector<uint64_t> Multigraph::degrees() const {
  std::vector<uint64_t> d(n_, 0);
  for (const auto& e : edges_) {
    if (e.u == e.v) {
      d[e.u] += 2ull * e.mult;
    } else {
      d[e.u] += e.mult;
      d[e.v] += e.mult;
    }
  }
  return d;
}

uint32_t Multigraph::multiplicity(uint32_t u, uint32_t v) const {
  if (u > v) std::swap(u, v);
  uint64_t code = pair_code(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), code,
                             [](const Edge& e, uint64_t c) { return pair_code(e.u, e.v) < c; });
  if (it != edges_.end() && it->u == u && it->v == v) return it->mult;
  return 0;
}

Multigraph Multigraph::drop_isolated() const {
  std::vector<uint32_t> remap(n_, UINT32_MAX);
  uint32_t next = 0;
  // Survivors keep their relative order.
  std::vector<bool> alive(n_, false);
  for (const auto& e : edges_) {
    alive[e.u] = true;
    alive[e.v] = true;
  }
  for (uint32_t v = 0; v < n_; ++v) {
    if (alive[v]) remap[v] = next++;
  }
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back({remap[e.u], remap[e.v], e.mult});
  return Multigraph(next, std::move(out));
}

}  // namespace graphex
