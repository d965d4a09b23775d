#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>

#include "graphex/multigraph.hpp"

namespace graphex {

// Isomorphism-invariant byte encoding of a small multigraph: byte 0 is the
// vertex count, then the upper-triangular adjacency multiplicities (diagonal
// included) in row-major order, 4 bytes little-endian each, minimized over
// vertex orderings.
using CanonicalKey = std::string;

inline constexpr uint32_t kKeyVertexLimit = 9;

// Reserved key for graphs too large to canonicalize, so censuses over mixed
// samples remain comparable.
extern const CanonicalKey kOversizeKey;

// Throws TooLargeForCanonicalization when vertex_count() > vertex_limit.
// Permutations are restricted to orbits of a degree-based vertex invariant,
// which keeps the brute-force minimization cheap for the graphs that sampling
// actually produces.
CanonicalKey canonical_key(const Multigraph& g, uint32_t vertex_limit = kKeyVertexLimit);

// Empirical distribution over isomorphism classes of small multigraphs.
class Census {
 public:
  struct Entry {
    uint64_t count = 0;
    std::optional<Multigraph> representative;  // first graph seen in the class
  };

  void add(const Multigraph& g, uint32_t vertex_limit = kKeyVertexLimit);
  void add_key(const CanonicalKey& key, uint64_t count,
               const std::optional<Multigraph>& representative = std::nullopt);
  void merge(const Census& other);

  uint64_t total() const { return total_; }
  const std::map<CanonicalKey, Entry>& entries() const { return entries_; }
  double frequency(const CanonicalKey& key) const;

 private:
  std::map<CanonicalKey, Entry> entries_;
  uint64_t total_ = 0;
};

Census census_of(std::span<const Multigraph> graphs, uint32_t vertex_limit = kKeyVertexLimit);

}  // namespace graphex
