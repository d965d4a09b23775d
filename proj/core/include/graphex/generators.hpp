#pragma once

#include <cstdint>
#include <vector>

#include "graphex/multigraph.hpp"
#include "graphex/rng.hpp"

namespace graphex {

// Degree sequence for the configuration model: all entries >= 1 and even sum.
class DegreeSequence {
 public:
  explicit DegreeSequence(std::vector<uint32_t> degrees);

  const std::vector<uint32_t>& degrees() const { return degrees_; }
  uint64_t half_edge_sum() const { return sum_; }
  size_t size() const { return degrees_.size(); }

 private:
  std::vector<uint32_t> degrees_;
  uint64_t sum_ = 0;
};

// Positive weights (GRG) or nonnegative strengths (preferential attachment).
class WeightSequence {
 public:
  explicit WeightSequence(std::vector<double> weights);

  const std::vector<double>& weights() const { return weights_; }
  double total() const { return total_; }
  size_t size() const { return weights_.size(); }

 private:
  std::vector<double> weights_;
  double total_ = 0.0;
};

// Bipartite degree sequences with equal half-edge sums per side.
class BipartiteDegrees {
 public:
  BipartiteDegrees(std::vector<uint32_t> side1, std::vector<uint32_t> side2);

  const std::vector<uint32_t>& side1() const { return side1_; }
  const std::vector<uint32_t>& side2() const { return side2_; }
  uint64_t side_sum() const { return side_sum_; }        // l_n / 2
  uint64_t total_half_edges() const { return 2 * side_sum_; }

 private:
  std::vector<uint32_t> side1_, side2_;
  uint64_t side_sum_ = 0;
};

// Uniform pairing of the half-edges: shuffle the stub array and pair
// consecutive entries, which is equal in law to sequential uniform pairing.
// degree(v) == d_v on every draw.
Multigraph configuration_model(const DegreeSequence& d, Rng& rng);

// Collapses every stored multiplicity to 1: multi-edges become single edges
// and multiple loops merge into single loops.
Multigraph erase(const Multigraph& g);

// Urn growth: at each of m steps two endpoints are drawn independently with
// probability proportional to d_i(l) + delta_i, both with the weights as of
// the start of the step; equal draws form a loop (degree +2).
Multigraph preferential_attachment(const WeightSequence& delta, uint64_t m, Rng& rng);

enum class GrgMethod { kAuto, kPairwise, kSkipping };

// Simple loop-free graph with independent edge probabilities
// p_ij = w_i w_j / (L_n + w_i w_j). kAuto selects per-pair Bernoulli draws for
// small n and a sorted-weight geometric-skipping scan for large n; the two
// paths agree in law.
Multigraph generalized_random_graph(const WeightSequence& w, Rng& rng,
                                    GrgMethod method = GrgMethod::kAuto);

// Uniform matching of side-1 half-edges to side-2 half-edges. Vertices
// [0, |side1|) are side 1 and [|side1|, |side1|+|side2|) are side 2; no loops
// or within-side edges can occur.
Multigraph bipartite_configuration_model(const BipartiteDegrees& d, Rng& rng);

}  // namespace graphex
