#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graphex/census.hpp"
#include "graphex/generators.hpp"
#include "graphex/measures.hpp"
#include "graphex/multigraphex.hpp"
#include "graphex/sampling.hpp"

namespace graphex {

// Replicate-loop options. Replicate r always uses the stream derived from
// (seed, experiment id, r), so thread count never changes results.
struct McOptions {
  uint64_t seed = 0;
  unsigned threads = 1;
};

// Plug-in total variation between two censuses with a bootstrap confidence
// half-width (200 resamples by default). The OVERSIZE bin participates like
// any other class.
struct TVEstimate {
  double value = 0.0;
  uint64_t n1 = 0;
  uint64_t n2 = 0;
  double ci_half_width = 0.0;
};

TVEstimate tv_between(const Census& c1, const Census& c2, Rng& bootstrap_rng,
                      uint32_t bootstrap_resamples = 200);

struct Statistic {
  double mean = 0.0;
  double sd = 0.0;
  double ci_half_width = 0.0;  // 3 * bootstrap sigma of the mean
  uint64_t reps = 0;
  std::vector<std::string> warnings;
};

// Disjoint index sets (half-edge indices for CM/BCM, vertex indices for PA).
struct BlockSpec {
  std::vector<std::vector<uint64_t>> sets;
};

// Empirical joint distribution of block-pair edge counts against the
// independent Poisson reference.
struct BlockCountResult {
  std::vector<std::pair<uint32_t, uint32_t>> cells;  // (i,j), i <= j
  std::vector<double> reference_rates;
  std::vector<double> empirical_means;
  std::map<std::vector<uint32_t>, uint64_t> joint_counts;
  uint64_t reps = 0;
  double tv_vs_reference = 1.0;  // exact product pmf vs empirical joint
  std::vector<std::string> warnings;
};

// Edge counts between half-edge blocks in the configuration model; reference
// rates s_i s_j / l_n off-diagonal and s_i^2 / (2 l_n) on the diagonal.
BlockCountResult cm_block_edge_counts(const DegreeSequence& d, const BlockSpec& blocks,
                                      uint64_t reps, const McOptions& opt);

// Mean and CI of e(G)/l_n over configuration-model draws.
Statistic cm_edge_fraction(const DegreeSequence& d, uint64_t reps, const McOptions& opt);

// Finite-n prediction (1/2) sum_{i != j} (1 - exp(-d_i d_j / l_n)) for the
// expected ECM edge count; the vertex-diagonal term of the limit integral
// vanishes asymptotically and is excluded here.
double ecm_expected_edges(const DegreeSequence& d);

// Exact sum_{i<j} w_i w_j / (L_n + w_i w_j).
double grg_expected_edges(const WeightSequence& w);
// Integral form (L_n/2) * double integral of xy/(1+xy), i.e. the same sum
// with the vertex diagonal included.
double grg_integral_edge_form(const WeightSequence& w);
// Bound sum_i w_i^2 / (L_n + w_i^2) on the difference of the two forms.
double grg_diagonal_correction_bound(const WeightSequence& w);

// Monte Carlo evaluation of P(xi_GRG([0,t]^2) = 0) for the limiting adjacency
// measure: weights drawn as a PPP with intensity t * rho restricted to
// [eps_cut, inf), averaged over
//   exp(-a^2 t^2/2 - a t sum w) * prod_{u<v} 1/(1 + w_u w_v).
double grg_zero_point_oracle(const DiscreteMeasure& rho, double a, double t, double eps_cut,
                             uint64_t mc_reps, Rng& rng);

// Mean of e(G)/m over preferential-attachment draws.
Statistic pa_nonloop_fraction(const WeightSequence& delta, uint64_t m, uint64_t reps,
                              const McOptions& opt);

// Edge counts between vertex blocks in preferential attachment; reference
// rates 2 m S_i S_j / l^2 off-diagonal and m S_i^2 / l^2 on the diagonal with
// S_i = sum of delta over the block.
BlockCountResult pa_block_edge_counts(const WeightSequence& delta, uint64_t m,
                                      const BlockSpec& vertex_blocks, uint64_t reps,
                                      const McOptions& opt);

// Bipartite analogue over half-edge blocks; rates
// (|S_i1||S_j2| + |S_i2||S_j1|)/l_n off-diagonal, |S_i1||S_i2|/l_n diagonal.
BlockCountResult bcm_block_edge_counts(const BipartiteDegrees& d, const BlockSpec& blocks,
                                       uint64_t reps, const McOptions& opt);

// Random graph model selector for experiments.
struct ModelSpec {
  enum class Family { kCm, kEcm, kPa, kGrg, kBcm };
  Family family = Family::kCm;
  std::optional<DegreeSequence> degrees;        // cm / ecm
  std::optional<WeightSequence> weights;        // pa strengths or grg weights
  uint64_t pa_steps = 0;
  std::optional<BipartiteDegrees> bipartite;    // bcm

  static ModelSpec cm(DegreeSequence d);
  static ModelSpec ecm(DegreeSequence d);
  static ModelSpec pa(WeightSequence delta, uint64_t m);
  static ModelSpec grg(WeightSequence w);
  static ModelSpec bcm(BipartiteDegrees d);
};

Multigraph draw_model(const ModelSpec& spec, Rng& rng);

struct ConvergenceOptions {
  double t = 1.0;
  uint64_t reps_model = 10000;
  uint64_t reps_graphex = 10000;
  uint64_t seed = 0;
  unsigned threads = 1;
};

struct ConvergenceResult {
  TVEstimate tv;
  Census model_census;
  Census graphex_census;
  std::vector<std::string> warnings;
};

// Census of canonical_sample over fresh model draws (one sample per draw)
// against the census of sample_gp(graphex, t). Asymptotic regime guards are
// reported as warnings, never errors.
ConvergenceResult convergence_experiment(const ModelSpec& spec, const Multigraphex& wx,
                                         const ConvergenceOptions& opt);

// Spread of the label-only (quenched) estimate of P(xi(A x B) = l) across
// fresh graphs, against the pooled (annealed) estimate. The labeling window
// is sqrt(total half-edges) per draw.
struct GapResult {
  double max_gap = 0.0;
  double pooled = 0.0;
  std::vector<double> per_graph;
};

GapResult quenched_annealed_gap(const ModelSpec& spec, const IntervalUnion& a,
                                const IntervalUnion& b, uint64_t l, uint64_t reps_outer,
                                uint64_t reps_inner, const McOptions& opt);

}  // namespace graphex
