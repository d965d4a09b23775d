#pragma once

#include <cstdint>
#include <vector>

#include "graphex/multigraph.hpp"
#include "graphex/rng.hpp"

namespace graphex {

// One labeled point of an adjacency measure: coordinates in [0, window],
// stored once per unordered pair and read symmetrically; x == y encodes a
// loop point on the diagonal.
struct LabeledPoint {
  double x = 0.0;
  double y = 0.0;
  uint32_t mult = 1;
};

// Finite symmetric integer point measure on [0, window]^2.
struct AdjacencyMeasure {
  double window = 0.0;
  std::vector<LabeledPoint> points;
};

// Finite union of half-open intervals [a, b). The half-open convention is
// fixed artifact-wide so point counts are unambiguous at endpoints.
class IntervalUnion {
 public:
  IntervalUnion() = default;
  IntervalUnion(double a, double b) { add(a, b); }
  void add(double a, double b);

  bool contains(double x) const;
  double length() const;
  const std::vector<std::pair<double, double>>& parts() const { return parts_; }

 private:
  std::vector<std::pair<double, double>> parts_;
};

// Keep each vertex independently with probability p, take the induced
// multigraph, drop isolated vertices.
Multigraph p_sample(const Multigraph& g, double p, Rng& rng);

// p_sample at the canonical rate p = t / sqrt(2 e(G)). Requires e(G) >= 1;
// throws RateExceedsOne when the rate would exceed 1 rather than clamping.
Multigraph canonical_sample(const Multigraph& g, double t, Rng& rng);

double canonical_window(const Multigraph& g);  // sqrt(2 e(G))

// i.i.d. uniform[0,s] labels per vertex; one point per unordered edge pair
// carrying the edge multiplicity (diagonal points for loops). Bit-identical
// label collisions are redrawn.
AdjacencyMeasure label(const Multigraph& g, double s, Rng& rng);

// xi(A x B) with multiplicity, symmetric interpretation: an off-diagonal
// stored point (x,y,m) contributes m when (x in A, y in B) and again m when
// (y in A, x in B); a diagonal point contributes m when x in A and x in B.
uint64_t count(const AdjacencyMeasure& xi, const IntervalUnion& a, const IntervalUnion& b);

// Restrict to [0,t]^2, cluster points by shared coordinates into vertices,
// and forget the labels.
Multigraph extract_graph(const AdjacencyMeasure& xi, double t);

}  // namespace graphex
