#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "graphex/generators.hpp"
#include "graphex/multigraph.hpp"
#include "graphex/rng.hpp"

namespace graphex {

// Finite atomic measure on (0, infinity): sum of m_k * delta_{x_k} with
// strictly positive locations and masses. Atoms are kept sorted by location
// with equal locations merged. Immutable and shareable.
class DiscreteMeasure {
 public:
  struct Atom {
    double location;
    double mass;
  };

  DiscreteMeasure() = default;
  static DiscreteMeasure from_atoms(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const { return atoms_; }
  bool empty() const { return atoms_.empty(); }
  double total_mass() const { return total_mass_; }
  double mass_integral() const { return mass_integral_; }  // integral of x d rho

  // Every mass multiplied by f (used by graphex rescaling).
  DiscreteMeasure scaled_mass(double f) const;
  // Atoms with location strictly above the threshold.
  DiscreteMeasure restricted_above(double threshold) const;

 private:
  std::vector<Atom> atoms_;
  double total_mass_ = 0.0;
  double mass_integral_ = 0.0;
};

// rho_n: atom at d_i / sqrt(l_n) with mass 1/sqrt(l_n) per vertex, equal
// locations merged.
DiscreteMeasure empirical_degree_measure(const DegreeSequence& d);

// Same construction for a real-valued sequence: atom at w_i / sqrt(total)
// with mass 1 / sqrt(total). Used for GRG weights and PA expected degrees.
DiscreteMeasure empirical_weight_measure(const std::vector<double>& values, double normalizer);

// b = integral of (x ^ 1) d rho.
double b_value(const DiscreteMeasure& rho);

// Tail intensity rho((x, infinity)); right-continuous in x.
double tail_intensity(const DiscreteMeasure& rho, double x);

// Cadlag generalized inverse inf{x >= 0 : tail(x) <= y}, with the y = 0 case
// pinned to 0.
double tail_inverse(const DiscreteMeasure& rho, double y);

// integral of x over [0, eps] (closed at eps): the low-degree half-edge mass.
double low_mass_estimate(const DiscreteMeasure& rho, double eps);

// Stationary completely random measure restricted to [0, T]: drift plus
// Poisson atoms.
struct CRMSample {
  double drift = 0.0;
  double horizon = 0.0;
  std::vector<std::pair<double, double>> atoms;  // (location theta, weight w)

  // mu([0, t]).
  double mass_up_to(double t) const;
};

// Marked-PPP construction: Poisson(T * m_k) atoms at each weight x_k with
// i.i.d. uniform[0,T] locations; equal in law to the tail-inverse transform
// of a unit-rate Poisson process.
CRMSample sample_crm(const DiscreteMeasure& rho, double a, double horizon, Rng& rng);

// Nondecreasing right-continuous step path: jump of size d_i/sqrt(l_n) at an
// independent uniform[0, sqrt(l_n)] time per vertex.
class LevyPath {
 public:
  LevyPath(double drift, double horizon, std::vector<std::pair<double, double>> jumps);

  double value(double t) const;
  double horizon() const { return horizon_; }
  const std::vector<std::pair<double, double>>& jumps() const { return jumps_; }

 private:
  double drift_ = 0.0;
  double horizon_ = 0.0;
  std::vector<std::pair<double, double>> jumps_;  // sorted by time
};

LevyPath levy_path_from_sequence(const DegreeSequence& d, Rng& rng);

// Characteristic function of mu(A) for mu ~ CRM(a lambda, rho x lambda):
// exp(i theta a |A| + |A| * integral (e^{i theta x} - 1) d rho).
std::complex<double> crm_char_function(const DiscreteMeasure& rho, double a, double leb_a,
                                       double theta);

struct LevyTriplet {
  double b = 0.0;
  double sigma = 0.0;  // identically 0 here: drift plus positive jumps only
  DiscreteMeasure rho;
};

LevyTriplet levy_triplet(const DiscreteMeasure& rho);

// (1/e(G)) * sum of d_v over vertices with d_v <= delta * sqrt(e(G)),
// half-edge degree convention. Small iff the graph has no low-degree edge
// mass at scale delta.
double tail_regularity_deficit(const Multigraph& g, double delta);

}  // namespace graphex
