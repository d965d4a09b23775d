#include "graphex/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "graphex/errors.hpp"
#include "parallel.hpp"

namespace graphex {

namespace {

std::vector<uint64_t> census_counts(const Census& c, const std::vector<CanonicalKey>& keys) {
  std::vector<uint64_t> out(keys.size(), 0);
  for (size_t i = 0; i < keys.size(); ++i) {
    auto it = c.entries().find(keys[i]);
    if (it != c.entries().end()) out[i] = it->second.count;
  }
  return out;
}

double tv_from_counts(const std::vector<uint64_t>& a, uint64_t na, const std::vector<uint64_t>& b,
                      uint64_t nb) {
  double tv = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    tv += std::abs(static_cast<double>(a[i]) / na - static_cast<double>(b[i]) / nb);
  }
  return tv / 2.0;
}

// Exact multinomial resample by sequential conditional binomials.
std::vector<uint64_t> resample_counts(const std::vector<uint64_t>& counts, uint64_t total, Rng& rng) {
  std::vector<uint64_t> out(counts.size(), 0);
  uint64_t remaining = total;
  double mass_left = 1.0;
  for (size_t i = 0; i < counts.size() && remaining > 0; ++i) {
    double p = static_cast<double>(counts[i]) / total;
    double cond = mass_left > 0.0 ? std::min(1.0, p / mass_left) : 1.0;
    uint64_t c = (i + 1 == counts.size()) ? remaining : rng.binomial(remaining, cond);
    out[i] = c;
    remaining -= c;
    mass_left -= p;
  }
  return out;
}

}  // namespace

TVEstimate tv_between(const Census& c1, const Census& c2, Rng& bootstrap_rng,
                      uint32_t bootstrap_resamples) {
  if (c1.total() == 0 || c2.total() == 0) {
    throw std::invalid_argument("tv_between: both censuses need at least one sample");
  }
  std::vector<CanonicalKey> keys;
  for (const auto& [k, e] : c1.entries()) keys.push_back(k);
  for (const auto& [k, e] : c2.entries()) {
    if (!c1.entries().contains(k)) keys.push_back(k);
  }
  std::vector<uint64_t> a = census_counts(c1, keys);
  std::vector<uint64_t> b = census_counts(c2, keys);

  TVEstimate est;
  est.n1 = c1.total();
  est.n2 = c2.total();
  est.value = tv_from_counts(a, est.n1, b, est.n2);

  if (bootstrap_resamples > 0) {
    std::vector<double> tvs;
    tvs.reserve(bootstrap_resamples);
    for (uint32_t r = 0; r < bootstrap_resamples; ++r) {
      auto ra = resample_counts(a, est.n1, bootstrap_rng);
      auto rb = resample_counts(b, est.n2, bootstrap_rng);
      tvs.push_back(tv_from_counts(ra, est.n1, rb, est.n2));
    }
    std::sort(tvs.begin(), tvs.end());
    auto quant = [&](double q) {
      size_t idx = std::min(tvs.size() - 1, static_cast<size_t>(q * (tvs.size() - 1) + 0.5));
      return tvs[idx];
    };
    est.ci_half_width = (quant(0.975) - quant(0.025)) / 2.0;
  }
  return est;
}

namespace {

struct RunningStat {
  double sum = 0.0;
  double sumsq = 0.0;
  uint64_t n = 0;

  void add(double x) {
    sum += x;
    sumsq += x * x;
    ++n;
  }
  void merge(const RunningStat& o) {
    sum += o.sum;
    sumsq += o.sumsq;
    n += o.n;
  }
};

Statistic finalize_stat(const RunningStat& rs) {
  Statistic s;
  s.reps = rs.n;
  s.mean = rs.sum / rs.n;
  double var = std::max(0.0, rs.sumsq / rs.n - s.mean * s.mean);
  s.sd = std::sqrt(var);
  // Plug-in bootstrap sigma of the mean has the closed form sd_pop/sqrt(n).
  s.ci_half_width = 3.0 * s.sd / std::sqrt(static_cast<double>(rs.n));
  return s;
}

struct BlockAccum {
  std::map<std::vector<uint32_t>, uint64_t> joint;
  std::vector<double> sums;  // per-cell running sums
  uint64_t reps = 0;

  void add(const std::vector<uint32_t>& cells) {
    ++joint[cells];
    for (size_t i = 0; i < cells.size(); ++i) sums[i] += cells[i];
    ++reps;
  }
  void merge(const BlockAccum& o) {
    for (const auto& [k, v] : o.joint) joint[k] += v;
    for (size_t i = 0; i < sums.size(); ++i) sums[i] += o.sums[i];
    reps += o.reps;
  }
};

BlockCountResult finalize_blocks(BlockAccum acc, std::vector<std::pair<uint32_t, uint32_t>> cells,
                                 std::vector<double> rates, std::vector<std::string> warnings) {
  BlockCountResult res;
  res.cells = std::move(cells);
  res.reference_rates = std::move(rates);
  res.reps = acc.reps;
  res.joint_counts = std::move(acc.joint);
  res.warnings = std::move(warnings);
  res.empirical_means.resize(res.cells.size());
  for (size_t i = 0; i < res.cells.size(); ++i) {
    res.empirical_means[i] = acc.sums[i] / static_cast<double>(acc.reps);
  }
  double observed_ref_mass = 0.0;
  double l1 = 0.0;
  for (const auto& [vec, cnt] : res.joint_counts) {
    double p = 1.0;
    for (size_t i = 0; i < vec.size(); ++i) p *= poisson_pmf(vec[i], res.reference_rates[i]);
    observed_ref_mass += p;
    l1 += std::abs(static_cast<double>(cnt) / res.reps - p);
  }
  res.tv_vs_reference = (l1 + (1.0 - observed_ref_mass)) / 2.0;
  return res;
}

std::vector<std::pair<uint32_t, uint32_t>> block_cells(size_t k) {
  std::vector<std::pair<uint32_t, uint32_t>> cells;
  for (uint32_t i = 0; i < k; ++i) {
    for (uint32_t j = i; j < k; ++j) cells.emplace_back(i, j);
  }
  return cells;
}

void check_disjoint(const BlockSpec& blocks, uint64_t universe, const char* what) {
  std::vector<uint64_t> all;
  for (const auto& s : blocks.sets) {
    for (uint64_t idx : s) {
      if (idx >= universe) throw std::invalid_argument(std::string(what) + ": block index out of range");
      all.push_back(idx);
    }
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw std::invalid_argument(std::string(what) + ": blocks must be disjoint");
  }
}

}  // namespace

BlockCountResult cm_block_edge_counts(const DegreeSequence& d, const BlockSpec& blocks,
                                      uint64_t reps, const McOptions& opt) {
  const uint64_t l_n = d.half_edge_sum();
  check_disjoint(blocks, l_n, "cm_block_edge_counts");
  const size_t k = blocks.sets.size();
  auto cells = block_cells(k);

  std::vector<int16_t> block_of(l_n, -1);
  for (size_t b = 0; b < k; ++b) {
    for (uint64_t idx : blocks.sets[b]) block_of[idx] = static_cast<int16_t>(b);
  }
  std::vector<double> rates(cells.size());
  for (size_t c = 0; c < cells.size(); ++c) {
    auto [i, j] = cells[c];
    double si = static_cast<double>(blocks.sets[i].size());
    double sj = static_cast<double>(blocks.sets[j].size());
    rates[c] = i == j ? si * si / (2.0 * l_n) : si * sj / l_n;
  }
  std::vector<std::string> warnings;
  for (size_t b = 0; b < k; ++b) {
    if (static_cast<double>(blocks.sets[b].size()) > 3.0 * std::sqrt(static_cast<double>(l_n))) {
      warnings.push_back("block " + std::to_string(b) + " larger than 3*sqrt(l_n); Poisson regime not guaranteed");
    }
  }
  std::vector<size_t> cell_index(k * k);
  for (size_t c = 0; c < cells.size(); ++c) {
    auto [i, j] = cells[c];
    cell_index[i * k + j] = c;
    cell_index[j * k + i] = c;
  }

  struct Worker {
    BlockAccum acc;
    std::vector<uint64_t> stubs;
    std::vector<uint32_t> counts;
  };
  auto result = detail::parallel_accumulate(
      reps, opt.threads,
      [&] {
        Worker w;
        w.acc.sums.assign(cells.size(), 0.0);
        w.counts.assign(cells.size(), 0);
        return w;
      },
      [&](uint64_t rep, Worker& w) {
        if (w.stubs.empty()) {
          w.stubs.resize(l_n);
          std::iota(w.stubs.begin(), w.stubs.end(), 0);
        }
        Rng rng = Rng::stream(opt.seed, "cm_block_edge_counts", rep);
        rng.shuffle(w.stubs);
        std::fill(w.counts.begin(), w.counts.end(), 0);
        for (size_t i = 0; i + 1 < w.stubs.size(); i += 2) {
          int16_t b1 = block_of[w.stubs[i]];
          int16_t b2 = block_of[w.stubs[i + 1]];
          if (b1 >= 0 && b2 >= 0) ++w.counts[cell_index[static_cast<size_t>(b1) * k + b2]];
        }
        w.acc.add(std::vector<uint32_t>(w.counts.begin(), w.counts.end()));
      },
      [](Worker& a, const Worker& b) { a.acc.merge(b.acc); });

  return finalize_blocks(std::move(result.acc), std::move(cells), std::move(rates), std::move(warnings));
}

Statistic cm_edge_fraction(const DegreeSequence& d, uint64_t reps, const McOptions& opt) {
  const uint64_t l_n = d.half_edge_sum();
  struct Worker {
    RunningStat stat;
    std::vector<uint32_t> stubs;
  };
  auto result = detail::parallel_accumulate(
      reps, opt.threads, [&] { return Worker{}; },
      [&](uint64_t rep, Worker& w) {
        if (w.stubs.empty()) {
          w.stubs.reserve(l_n);
          for (uint32_t v = 0; v < d.size(); ++v) {
            for (uint32_t i = 0; i < d.degrees()[v]; ++i) w.stubs.push_back(v);
          }
        }
        Rng rng = Rng::stream(opt.seed, "cm_edge_fraction", rep);
        rng.shuffle(w.stubs);
        uint64_t loops = 0;
        for (size_t i = 0; i + 1 < w.stubs.size(); i += 2) {
          if (w.stubs[i] == w.stubs[i + 1]) ++loops;
        }
        double e = static_cast<double>(l_n / 2 - loops);
        w.stat.add(e / static_cast<double>(l_n));
      },
      [](Worker& a, const Worker& b) { a.stat.merge(b.stat); });
  Statistic s = finalize_stat(result.stat);
  double maxd = static_cast<double>(*std::max_element(d.degrees().begin(), d.degrees().end()));
  if (maxd > 0.05 * static_cast<double>(l_n)) {
    s.warnings.push_back("max degree exceeds 0.05*l_n; concentration regime not guaranteed");
  }
  return s;
}

double ecm_expected_edges(const DegreeSequence& d) {
  const double l_n = static_cast<double>(d.half_edge_sum());
  std::map<uint32_t, uint64_t> groups;
  for (uint32_t deg : d.degrees()) ++groups[deg];
  double full = 0.0;
  for (const auto& [da, na] : groups) {
    for (const auto& [db, nb] : groups) {
      full += static_cast<double>(na) * static_cast<double>(nb) *
              (-std::expm1(-static_cast<double>(da) * static_cast<double>(db) / l_n));
    }
  }
  double diag = 0.0;
  for (const auto& [da, na] : groups) {
    diag += static_cast<double>(na) * (-std::expm1(-static_cast<double>(da) * static_cast<double>(da) / l_n));
  }
  return (full - diag) / 2.0;
}

namespace {

double grg_pair_sum(const WeightSequence& w, bool include_diagonal) {
  const double l = w.total();
  std::map<double, uint64_t> groups;
  for (double x : w.weights()) ++groups[x];
  double full = 0.0, diag = 0.0;
  for (const auto& [wa, na] : groups) {
    for (const auto& [wb, nb] : groups) {
      full += static_cast<double>(na) * static_cast<double>(nb) * (wa * wb / (l + wa * wb));
    }
    diag += static_cast<double>(na) * (wa * wa / (l + wa * wa));
  }
  return include_diagonal ? full / 2.0 : (full - diag) / 2.0;
}

}  // namespace

double grg_expected_edges(const WeightSequence& w) { return grg_pair_sum(w, false); }

double grg_integral_edge_form(const WeightSequence& w) { return grg_pair_sum(w, true); }

double grg_diagonal_correction_bound(const WeightSequence& w) {
  double s = 0.0;
  for (double x : w.weights()) s += x * x / (w.total() + x * x);
  return s;
}

double grg_zero_point_oracle(const DiscreteMeasure& rho, double a, double t, double eps_cut,
                             uint64_t mc_reps, Rng& rng) {
  if (!(t >= 0.0)) throw std::invalid_argument("grg_zero_point_oracle: t must be >= 0");
  std::vector<DiscreteMeasure::Atom> kept;
  for (const auto& atom : rho.atoms()) {
    if (atom.location >= eps_cut) kept.push_back(atom);
  }
  const double dust_factor = std::exp(-a * a * t * t / 2.0);
  double sum = 0.0;
  std::vector<double> weights;
  for (uint64_t rep = 0; rep < mc_reps; ++rep) {
    weights.clear();
    for (const auto& atom : kept) {
      uint64_t n = rng.poisson(t * atom.mass);
      for (uint64_t i = 0; i < n; ++i) weights.push_back(atom.location);
    }
    double f = dust_factor;
    double wsum = 0.0;
    for (size_t i = 0; i < weights.size(); ++i) {
      wsum += weights[i];
      for (size_t j = i + 1; j < weights.size(); ++j) f /= 1.0 + weights[i] * weights[j];
    }
    f *= std::exp(-a * t * wsum);
    sum += f;
  }
  return sum / static_cast<double>(mc_reps);
}

Statistic pa_nonloop_fraction(const WeightSequence& delta, uint64_t m, uint64_t reps,
                              const McOptions& opt) {
  auto result = detail::parallel_accumulate(
      reps, opt.threads, [] { return RunningStat{}; },
      [&](uint64_t rep, RunningStat& stat) {
        Rng rng = Rng::stream(opt.seed, "pa_nonloop_fraction", rep);
        Multigraph g = preferential_attachment(delta, m, rng);
        stat.add(static_cast<double>(g.non_loop_edge_count()) / static_cast<double>(m));
      },
      [](RunningStat& a, const RunningStat& b) { a.merge(b); });
  return finalize_stat(result);
}

BlockCountResult pa_block_edge_counts(const WeightSequence& delta, uint64_t m,
                                      const BlockSpec& vertex_blocks, uint64_t reps,
                                      const McOptions& opt) {
  const size_t n = delta.size();
  check_disjoint(vertex_blocks, n, "pa_block_edge_counts");
  const size_t k = vertex_blocks.sets.size();
  auto cells = block_cells(k);
  const double l_delta = delta.total();

  std::vector<int16_t> block_of(n, -1);
  std::vector<double> strengths(k, 0.0);
  for (size_t b = 0; b < k; ++b) {
    for (uint64_t idx : vertex_blocks.sets[b]) {
      block_of[idx] = static_cast<int16_t>(b);
      strengths[b] += delta.weights()[idx];
    }
  }
  std::vector<double> rates(cells.size());
  for (size_t c = 0; c < cells.size(); ++c) {
    auto [i, j] = cells[c];
    double base = static_cast<double>(m) * strengths[i] * strengths[j] / (l_delta * l_delta);
    rates[c] = i == j ? base : 2.0 * base;
  }
  std::vector<std::string> warnings;
  for (size_t b = 0; b < k; ++b) {
    if (strengths[b] > 3.0 * l_delta / std::sqrt(2.0 * static_cast<double>(m))) {
      warnings.push_back("block " + std::to_string(b) + " strength above 3*l/sqrt(2m); Poisson regime not guaranteed");
    }
  }
  std::vector<size_t> cell_index(k * k);
  for (size_t c = 0; c < cells.size(); ++c) {
    auto [i, j] = cells[c];
    cell_index[i * k + j] = c;
    cell_index[j * k + i] = c;
  }

  auto result = detail::parallel_accumulate(
      reps, opt.threads,
      [&] {
        BlockAccum acc;
        acc.sums.assign(cells.size(), 0.0);
        return acc;
      },
      [&](uint64_t rep, BlockAccum& acc) {
        Rng rng = Rng::stream(opt.seed, "pa_block_edge_counts", rep);
        Multigraph g = preferential_attachment(delta, m, rng);
        std::vector<uint32_t> counts(cells.size(), 0);
        for (const auto& e : g.edges()) {
          int16_t b1 = block_of[e.u];
          int16_t b2 = block_of[e.v];
          if (b1 >= 0 && b2 >= 0) {
            counts[cell_index[static_cast<size_t>(b1) * k + b2]] += e.mult;
          }
        }
        acc.add(counts);
      },
      [](BlockAccum& a, const BlockAccum& b) { a.merge(b); });
  return finalize_blocks(std::move(result), std::move(cells), std::move(rates), std::move(warnings));
}

BlockCountResult bcm_block_edge_counts(const BipartiteDegrees& d, const BlockSpec& blocks,
                                       uint64_t reps, const McOptions& opt) {
  const uint64_t l_n = d.total_half_edges();
  const uint64_t half = d.side_sum();
  check_disjoint(blocks, l_n, "bcm_block_edge_counts");
  const size_t k = blocks.sets.size();
  auto cells = block_cells(k);

  // Half-edge indices [0, l/2) are side 1 in vertex order, [l/2, l) side 2.
  std::vector<int16_t> block_of(l_n, -1);
  std::vector<double> s1(k, 0.0), s2(k, 0.0);
  for (size_t b = 0; b < k; ++b) {
    for (uint64_t idx : blocks.sets[b]) {
      block_of[idx] = static_cast<int16_t>(b);
      (idx < half ? s1[b] : s2[b]) += 1.0;
    }
  }
  std::vector<double> rates(cells.size());
  for (size_t c = 0; c < cells.size(); ++c) {
    auto [i, j] = cells[c];
    rates[c] = i == j ? s1[i] * s2[i] / static_cast<double>(l_n)
                      : (s1[i] * s2[j] + s2[i] * s1[j]) / static_cast<double>(l_n);
  }
  std::vector<size_t> cell_index(k * k);
  for (size_t c = 0; c < cells.size(); ++c) {
    auto [i, j] = cells[c];
    cell_index[i * k + j] = c;
    cell_index[j * k + i] = c;
  }

  struct Worker {
    BlockAccum acc;
    std::vector<uint64_t> side2_perm;
  };
  auto result = detail::parallel_accumulate(
      reps, opt.threads,
      [&] {
        Worker w;
        w.acc.sums.assign(cells.size(), 0.0);
        return w;
      },
      [&](uint64_t rep, Worker& w) {
        if (w.side2_perm.empty()) {
          w.side2_perm.resize(half);
          std::iota(w.side2_perm.begin(), w.side2_perm.end(), half);
        }
        Rng rng = Rng::stream(opt.seed, "bcm_block_edge_counts", rep);
        rng.shuffle(w.side2_perm);
        std::vector<uint32_t> counts(cells.size(), 0);
        for (uint64_t i = 0; i < half; ++i) {
          int16_t b1 = block_of[i];
          int16_t b2 = block_of[w.side2_perm[i]];
          if (b1 >= 0 && b2 >= 0) ++counts[cell_index[static_cast<size_t>(b1) * k + b2]];
        }
        w.acc.add(counts);
      },
      [](Worker& a, const Worker& b) { a.acc.merge(b.acc); });
  return finalize_blocks(std::move(result.acc), std::move(cells), std::move(rates), {});
}

ModelSpec ModelSpec::cm(DegreeSequence d) {
  ModelSpec s;
  s.family = Family::kCm;
  s.degrees = std::move(d);
  return s;
}
ModelSpec ModelSpec::ecm(DegreeSequence d) {
  ModelSpec s;
  s.family = Family::kEcm;
  s.degrees = std::move(d);
  return s;
}
ModelSpec ModelSpec::pa(WeightSequence delta, uint64_t m) {
  ModelSpec s;
  s.family = Family::kPa;
  s.weights = std::move(delta);
  s.pa_steps = m;
  return s;
}
ModelSpec ModelSpec::grg(WeightSequence w) {
  ModelSpec s;
  s.family = Family::kGrg;
  s.weights = std::move(w);
  return s;
}
ModelSpec ModelSpec::bcm(BipartiteDegrees d) {
  ModelSpec s;
  s.family = Family::kBcm;
  s.bipartite = std::move(d);
  return s;
}

Multigraph draw_model(const ModelSpec& spec, Rng& rng) {
  switch (spec.family) {
    case ModelSpec::Family::kCm:
      return configuration_model(*spec.degrees, rng);
    case ModelSpec::Family::kEcm:
      return erase(configuration_model(*spec.degrees, rng));
    case ModelSpec::Family::kPa:
      return preferential_attachment(*spec.weights, spec.pa_steps, rng);
    case ModelSpec::Family::kGrg:
      return generalized_random_graph(*spec.weights, rng);
    case ModelSpec::Family::kBcm:
      return bipartite_configuration_model(*spec.bipartite, rng);
  }
  throw std::logic_error("draw_model: unknown family");
}

namespace {

std::vector<std::string> regime_warnings(const ModelSpec& spec) {
  std::vector<std::string> w;
  if (spec.degrees) {
    double l = static_cast<double>(spec.degrees->half_edge_sum());
    double maxd = static_cast<double>(
        *std::max_element(spec.degrees->degrees().begin(), spec.degrees->degrees().end()));
    if (maxd > 0.05 * l) w.push_back("max degree above 0.05*l_n; asymptotic regime weak");
  }
  if (spec.family == ModelSpec::Family::kPa) {
    double l = spec.weights->total();
    if (static_cast<double>(spec.pa_steps) > l * l / 20.0) {
      w.push_back("m not small against l_delta^2; m = o(l^2) regime weak");
    }
  }
  return w;
}

}  // namespace

ConvergenceResult convergence_experiment(const ModelSpec& spec, const Multigraphex& wx,
                                         const ConvergenceOptions& opt) {
  ConvergenceResult out;
  out.warnings = regime_warnings(spec);

  out.model_census = detail::parallel_accumulate(
      opt.reps_model, opt.threads, [] { return Census{}; },
      [&](uint64_t rep, Census& c) {
        Rng rng = Rng::stream(opt.seed, "converge/model", rep);
        Multigraph g = draw_model(spec, rng);
        c.add(canonical_sample(g, opt.t, rng));
      },
      [](Census& a, const Census& b) { a.merge(b); });

  out.graphex_census = detail::parallel_accumulate(
      opt.reps_graphex, opt.threads, [] { return Census{}; },
      [&](uint64_t rep, Census& c) {
        Rng rng = Rng::stream(opt.seed, "converge/graphex", rep);
        c.add(sample_gp(wx, opt.t, rng));
      },
      [](Census& a, const Census& b) { a.merge(b); });

  Rng boot = Rng::stream(opt.seed, "converge/bootstrap", 0);
  out.tv = tv_between(out.model_census, out.graphex_census, boot);
  return out;
}

GapResult quenched_annealed_gap(const ModelSpec& spec, const IntervalUnion& a,
                                const IntervalUnion& b, uint64_t l, uint64_t reps_outer,
                                uint64_t reps_inner, const McOptions& opt) {
  GapResult res;
  res.per_graph.assign(reps_outer, 0.0);
  struct None {};
  detail::parallel_accumulate(
      reps_outer, opt.threads, [] { return None{}; },
      [&](uint64_t k, None&) {
        Rng rng = Rng::stream(opt.seed, "qa/outer", k);
        Multigraph g = draw_model(spec, rng);
        double s = std::sqrt(static_cast<double>(g.total_half_edges()));
        std::vector<double> labels(g.vertex_count());
        uint64_t hits = 0;
        for (uint64_t i = 0; i < reps_inner; ++i) {
          for (auto& x : labels) x = rng.uniform(0.0, s);
          uint64_t cnt = 0;
          for (const auto& e : g.edges()) {
            if (e.u == e.v) {
              if (a.contains(labels[e.u]) && b.contains(labels[e.u])) cnt += e.mult;
              continue;
            }
            if (a.contains(labels[e.u]) && b.contains(labels[e.v])) cnt += e.mult;
            if (a.contains(labels[e.v]) && b.contains(labels[e.u])) cnt += e.mult;
          }
          if (cnt == l) ++hits;
        }
        res.per_graph[k] = static_cast<double>(hits) / static_cast<double>(reps_inner);
      },
      [](None&, const None&) {});
  res.pooled = std::accumulate(res.per_graph.begin(), res.per_graph.end(), 0.0) /
               static_cast<double>(reps_outer);
  for (double p : res.per_graph) res.max_gap = std::max(res.max_gap, std::abs(p - res.pooled));
  return res;
}

}  // namespace graphex
