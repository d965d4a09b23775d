#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace graphex {

// One stored edge of a multigraph: unordered pair u <= v (u == v is a loop)
// with multiplicity >= 1.
struct Edge {
  uint32_t u = 0;
  uint32_t v = 0;
  uint32_t mult = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Finite loop-aware multigraph. Edges are kept sorted by (u,v) with u <= v,
// multiplicities >= 1, absent pair = multiplicity 0. Immutable after
// construction and safe to share across threads.
//
// Degree convention: a loop contributes 2 to the degree of its vertex
// (half-edge convention, matching the configuration-model pairing).
class Multigraph {
 public:
  Multigraph() = default;

  // Normalizes pair order, sorts, merges duplicates, drops zero
  // multiplicities. Throws std::out_of_range on a vertex index >= n.
  Multigraph(uint32_t n_vertices, std::vector<Edge> edges);

  // Build from unit-multiplicity endpoint pairs (duplicates accumulate).
  static Multigraph from_pairs(uint32_t n_vertices,
                               std::span<const std::pair<uint32_t, uint32_t>> pairs);

  uint32_t vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Number of non-loop edges, counted with multiplicity. e(G).
  uint64_t non_loop_edge_count() const { return non_loop_; }
  // Sum of loop multiplicities.
  uint64_t loop_mult_sum() const { return loops_; }
  // Sum of degrees = 2*(non-loop edges) + 2*(loops).
  uint64_t total_half_edges() const { return 2 * (non_loop_ + loops_); }

  std::vector<uint64_t> degrees() const;
  uint32_t multiplicity(uint32_t u, uint32_t v) const;

  // Removes degree-0 vertices, relabeling survivors in their original order.
  Multigraph drop_isolated() const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  uint32_t n_ = 0;
  std::vector<Edge> edges_;
  uint64_t non_loop_ = 0;
  uint64_t loops_ = 0;
};

}  // namespace graphex
