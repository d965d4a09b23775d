#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "graphex/generators.hpp"
#include "graphex/measures.hpp"
#include "graphex/sampling.hpp"

namespace graphex {

// Exact Poisson pmf, evaluated in log space for large rates.
double poisson_pmf(uint64_t k, double lambda);

// Rank-one multigraphon family: W(x,y,k) = p(k; w(x) w(y)) off the diagonal
// and p(k; w(x)^2/2) on it, with w = tail_inverse(rho, .); star S(x) = a w(x),
// dust I = a^2/2.
struct RankOne {
  DiscreteMeasure rho;
  double a = 0.0;
};

// Erased variant: Bernoulli kernel 1 - exp(-w(x)w(y)) (1 - exp(-w(x)^2/2) on
// the diagonal) composed with the rescaling by c that accounts for the edges
// lost to erasure.
struct ErasedRankOne {
  DiscreteMeasure rho;
  double a = 0.0;
  double c = 1.0;
};

// GRG kernel u v/(1+u v) with u = tail_inverse(rho_w, sqrt(C) x); zero on the
// diagonal; S(x) = (a/sqrt(C)) u, I = a^2/(2C).
struct GrgKernel {
  DiscreteMeasure rho_w;
  double a = 0.0;
  double big_c = 1.0;
};

// Feature space R+ x {0,1}; Poisson(w1 w2) edges across sides only; stars
// attach leaves of the opposite side; I = a1 a2.
struct BipartiteGraphex {
  DiscreteMeasure rho1;
  DiscreteMeasure rho2;
  double a1 = 0.0;
  double a2 = 0.0;
};

// (0, 0, I): isolated edges at rate t^2 I and nothing else.
struct PureDust {
  double isolated_rate = 0.0;
};

// User-supplied triple. W(x,y,k) must be a symmetric pmf over k at every
// (x,y); star(x,k) is the rate of multiplicity-k pendant edges (k >= 1);
// dust[r-1] is the rate of multiplicity-r isolated edges. Features are
// sampled on [0, feature_cutoff]; mu_tail_bound must bound the integral of
// mu_W beyond the cutoff and controls the truncation budget.
struct GenericGraphex {
  std::function<double(double, double, uint32_t)> w;
  std::function<double(double, uint32_t)> star;
  std::vector<double> dust;
  double feature_cutoff = 1.0;
  double mu_tail_bound = 0.0;
  std::string name;  // optional tag used by serialization of named kernels
};

// Parametric multigraphex plus a rescaling factor. All evaluations and
// samplers route through sqrt(scale)-scaled features, i.e. the stored object
// represents (W(sqrt(s).,sqrt(s).,.), S(sqrt(s).)/sqrt(s), I/s).
class Multigraphex {
 public:
  using Variant =
      std::variant<RankOne, ErasedRankOne, GrgKernel, BipartiteGraphex, PureDust, GenericGraphex>;

  explicit Multigraphex(Variant v, double scale = 1.0);

  const Variant& base() const { return variant_; }
  double scale() const { return scale_; }

  // Pointwise evaluation (single-type feature space variants only).
  double kernel(double x, double y, uint32_t k) const;   // W(x,y,k)
  double star_rate(double x, uint32_t k = 1) const;      // S(x,k)
  double dust_rate(uint32_t k = 1) const;                // I(k)

 private:
  Variant variant_;
  double scale_ = 1.0;
};

struct ValidationReport {
  struct Check {
    std::string name;
    bool pass = false;
    double value = 0.0;
    std::string note;
  };
  bool pass = false;
  std::vector<Check> checks;
  // Step profile of mu_W over the feature axis: (interval length, value).
  std::vector<std::pair<double, double>> mu_profile;
};

// Definition conditions (a)-(c) plus star integrability. Parametric variants
// are evaluated in closed form over the atoms; Generic variants by quadrature
// on [0, feature_cutoff] at the given resolution, with divergence flagged
// heuristically from the growth of the truncated integrals. Returns the
// report; throws nothing (failures are reported, not thrown).
ValidationReport validate(const Multigraphex& wx, uint32_t resolution = 200);

// One draw of the graphex process GP_t(W), unlabeled. Throws
// TruncationBudgetExceeded when a Generic draw's expected missed edge mass
// beyond the cutoff exceeds the budget.
Multigraph sample_gp(const Multigraphex& wx, double t, Rng& rng,
                     double truncation_budget = 1e-3);

// Same draw retaining the uniform[0,t] labels of all surviving vertices,
// star leaves and dust endpoints.
AdjacencyMeasure sample_adjacency(const Multigraphex& wx, double t, Rng& rng,
                                  double truncation_budget = 1e-3);

// Composes the rescaling W^c(x,y,.) = W(sqrt(c)x, sqrt(c)y, .),
// S^c = S(sqrt(c).)/sqrt(c), I^c = I/c. GP_t(rescale(W,c)) is equal in law to
// GP_{t/sqrt(c)}(W).
Multigraphex rescale(const Multigraphex& wx, double c);

// Finite-n surrogate of the configuration-model limit: the empirical degree
// measure restricted above the hub threshold becomes rho, the low mass below
// the threshold becomes the star/dust coefficient a.
Multigraphex limit_of_cm(const DegreeSequence& d, double hub_threshold = 0.1);

// Preferential-attachment analogue built from the expected degrees
// d_bar_i = (2m / l_delta) delta_i with normalizer 2m.
Multigraphex limit_of_pa(const WeightSequence& delta, uint64_t m, double hub_threshold = 0.1);

// GRG limit surrogate: C is the exact edge normalization
// sum_{i<j} p_ij / (L_n/2).
Multigraphex limit_of_grg(const WeightSequence& w, double hub_threshold = 0.1);

// Bipartite limit surrogate with the per-side hub/low split.
Multigraphex limit_of_bcm(const BipartiteDegrees& d, double hub_threshold = 0.1);

}  // namespace graphex
