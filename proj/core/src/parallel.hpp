#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace graphex::detail {

// Runs body(rep, acc) for rep in [0, reps) over worker-local accumulators and
// merges them in worker order. Determinism comes from the body deriving its
// randomness from rep alone.
template <class MakeAcc, class Body, class Merge>
auto parallel_accumulate(uint64_t reps, unsigned threads, MakeAcc make, Body body, Merge merge) {
  using Acc = decltype(make());
  threads = std::max(1u, threads);
  if (threads == 1 || reps < 2 * threads) {
    Acc acc = make();
    for (uint64_t r = 0; r < reps; ++r) body(r, acc);
    return acc;
  }
  std::vector<Acc> accs;
  accs.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) accs.push_back(make());
  uint64_t chunk = (reps + threads - 1) / threads;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    uint64_t begin = w * chunk;
    uint64_t end = std::min(reps, begin + chunk);
    pool.emplace_back([&, w, begin, end] {
      for (uint64_t r = begin; r < end; ++r) body(r, accs[w]);
    });
  }
  for (auto& t : pool) t.join();
  Acc total = std::move(accs[0]);
  for (unsigned w = 1; w < threads; ++w) merge(total, accs[w]);
  return total;
}

}  // namespace graphex::detail
