#include "graphex/census.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "graphex/errors.hpp"

namespace graphex {

const CanonicalKey kOversizeKey = std::string(1, '\xff') + "OVERSIZE";

namespace {

// Per-vertex isomorphism invariant: (degree, loop multiplicity, sorted
// incident non-loop multiplicities).
struct VertexInvariant {
  uint64_t degree = 0;
  uint32_t loop = 0;
  std::vector<uint32_t> incident;

  auto tie() const { return std::tie(degree, loop, incident); }
  bool operator<(const VertexInvariant& o) const { return tie() < o.tie(); }
  bool operator==(const VertexInvariant& o) const { return tie() == o.tie(); }
};

void append_u32(std::string& s, uint32_t x) {
  s.push_back(static_cast<char>(x & 0xff));
  s.push_back(static_cast<char>((x >> 8) & 0xff));
  s.push_back(static_cast<char>((x >> 16) & 0xff));
  s.push_back(static_cast<char>((x >> 24) & 0xff));
}

}  // namespace

CanonicalKey canonical_key(const Multigraph& g, uint32_t vertex_limit) {
  const uint32_t n = g.vertex_count();
  if (n > vertex_limit) {
    throw TooLargeForCanonicalization("canonical_key: " + std::to_string(n) + " vertices exceeds limit " +
                                      std::to_string(vertex_limit));
  }

  // Dense multiplicity matrix.
  std::vector<uint32_t> adj(static_cast<size_t>(n) * n, 0);
  auto at = [&](uint32_t a, uint32_t b) -> uint32_t& { return adj[static_cast<size_t>(a) * n + b]; };
  for (const auto& e : g.edges()) {
    at(e.u, e.v) = e.mult;
    at(e.v, e.u) = e.mult;
  }

  std::vector<VertexInvariant> inv(n);
  for (uint32_t v = 0; v < n; ++v) {
    inv[v].loop = at(v, v);
    for (uint32_t u = 0; u < n; ++u) {
      if (u == v) continue;
      if (at(v, u) > 0) inv[v].incident.push_back(at(v, u));
    }
    std::sort(inv[v].incident.begin(), inv[v].incident.end());
    inv[v].degree = 2ull * inv[v].loop +
                    std::accumulate(inv[v].incident.begin(), inv[v].incident.end(), uint64_t{0});
  }

  // Vertices ordered by invariant; permutations run within equal-invariant
  // blocks only. Isomorphisms preserve the invariant, so the minimum over
  // these orderings is a complete isomorphism code.
  std::vector<uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
    if (inv[a] == inv[b]) return a < b;
    return inv[a] < inv[b];
  });
  std::vector<std::pair<uint32_t, uint32_t>> blocks;  // [begin, end) in `order`
  for (uint32_t i = 0; i < n;) {
    uint32_t j = i + 1;
    while (j < n && inv[order[j]] == inv[order[i]]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }

  const size_t cells = static_cast<size_t>(n) * (n + 1) / 2;
  std::vector<uint32_t> best(cells, UINT32_MAX);
  std::vector<uint32_t> cur(cells, 0);
  bool have_best = false;

  auto encode_and_keep = [&]() {
    size_t idx = 0;
    for (uint32_t a = 0; a < n; ++a) {
      for (uint32_t b = a; b < n; ++b) {
        cur[idx++] = at(order[a], order[b]);
      }
    }
    if (!have_best || std::lexicographical_compare(cur.begin(), cur.end(), best.begin(), best.end())) {
      best = cur;
      have_best = true;
    }
  };

  // Odometer over per-block permutations.
  std::vector<bool> more(blocks.size(), true);
  auto advance = [&](size_t b) {
    return std::next_permutation(order.begin() + blocks[b].first, order.begin() + blocks[b].second);
  };
  if (n == 0) {
    have_best = true;
  } else {
    for (;;) {
      encode_and_keep();
      size_t b = 0;
      while (b < blocks.size() && !advance(b)) ++b;
      if (b == blocks.size()) break;
    }
  }

  std::string key;
  key.reserve(1 + 4 * cells);
  key.push_back(static_cast<char>(n));
  for (uint32_t m : best) append_u32(key, m);
  return key;
}

void Census::add(const Multigraph& g, uint32_t vertex_limit) {
  CanonicalKey key;
  try {
    key = canonical_key(g, vertex_limit);
  } catch (const TooLargeForCanonicalization&) {
    key = kOversizeKey;
  }
  auto& entry = entries_[key];
  if (entry.count == 0 && key != kOversizeKey) entry.representative = g;
  ++entry.count;
  ++total_;
}

void Census::add_key(const CanonicalKey& key, uint64_t count,
                     const std::optional<Multigraph>& representative) {
  auto& entry = entries_[key];
  if (entry.count == 0 && representative) entry.representative = representative;
  entry.count += count;
  total_ += count;
}

void Census::merge(const Census& other) {
  for (const auto& [key, e] : other.entries_) add_key(key, e.count, e.representative);
}

double Census::frequency(const CanonicalKey& key) const {
  if (total_ == 0) return 0.0;
  auto it = entries_.find(key);
  return it == entries_.end() ? 0.0 : static_cast<double>(it->second.count) / static_cast<double>(total_);
}

Census census_of(std::span<const Multigraph> graphs, uint32_t vertex_limit) {
  Census c;
  for (const auto& g : graphs) c.add(g, vertex_limit);
  return c;
}

}  // namespace graphex
