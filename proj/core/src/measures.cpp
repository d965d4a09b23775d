#include "graphex/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace graphex {

DiscreteMeasure DiscreteMeasure::from_atoms(std::vector<Atom> atoms) {
  for (const auto& a : atoms) {
    if (!(a.location > 0.0) || !std::isfinite(a.location)) {
      throw std::invalid_argument("DiscreteMeasure: locations must be finite and > 0");
    }
    if (!(a.mass > 0.0) || !std::isfinite(a.mass)) {
      throw std::invalid_argument("DiscreteMeasure: masses must be finite and > 0");
    }
  }
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return a.location < b.location; });
  DiscreteMeasure rho;
  for (const auto& a : atoms) {
    if (!rho.atoms_.empty() && rho.atoms_.back().location == a.location) {
      rho.atoms_.back().mass += a.mass;
    } else {
      rho.atoms_.push_back(a);
    }
  }
  for (const auto& a : rho.atoms_) {
    rho.total_mass_ += a.mass;
    rho.mass_integral_ += a.mass * a.location;
  }
  return rho;
}

DiscreteMeasure DiscreteMeasure::scaled_mass(double f) const {
  if (!(f > 0.0)) throw std::invalid_argument("DiscreteMeasure: scale factor must be > 0");
  std::vector<Atom> atoms = atoms_;
  for (auto& a : atoms) a.mass *= f;
  return from_atoms(std::move(atoms));
}

DiscreteMeasure DiscreteMeasure::restricted_above(double threshold) const {
  std::vector<Atom> atoms;
  for (const auto& a : atoms_) {
    if (a.location > threshold) atoms.push_back(a);
  }
  return from_atoms(std::move(atoms));
}

DiscreteMeasure empirical_degree_measure(const DegreeSequence& d) {
  double root = std::sqrt(static_cast<double>(d.half_edge_sum()));
  std::vector<DiscreteMeasure::Atom> atoms;
  atoms.reserve(d.size());
  for (uint32_t deg : d.degrees()) {
    atoms.push_back({static_cast<double>(deg) / root, 1.0 / root});
  }
  return DiscreteMeasure::from_atoms(std::move(atoms));
}

DiscreteMeasure empirical_weight_measure(const std::vector<double>& values, double normalizer) {
  if (!(normalizer > 0.0)) throw std::invalid_argument("empirical_weight_measure: bad normalizer");
  double root = std::sqrt(normalizer);
  std::vector<DiscreteMeasure::Atom> atoms;
  atoms.reserve(values.size());
  for (double v : values) {
    if (v > 0.0) atoms.push_back({v / root, 1.0 / root});
  }
  return DiscreteMeasure::from_atoms(std::move(atoms));
}

double b_value(const DiscreteMeasure& rho) {
  double b = 0.0;
  for (const auto& a : rho.atoms()) b += a.mass * std::min(a.location, 1.0);
  return b;
}

double tail_intensity(const DiscreteMeasure& rho, double x) {
  double t = 0.0;
  for (const auto& a : rho.atoms()) {
    if (a.location > x) t += a.mass;
  }
  return t;
}

double tail_inverse(const DiscreteMeasure& rho, double y) {
  if (y < 0.0) throw std::invalid_argument("tail_inverse: y must be >= 0");
  if (y == 0.0) return 0.0;  // the measure-zero pin at the origin
  if (y >= rho.total_mass()) return 0.0;
  // Descending locations x_(1) > x_(2) > ...; tail(x_(k)) is the mass strictly
  // above x_(k). The inverse at y is the largest x_(k) whose strict-above mass
  // is <= y.
  const auto& atoms = rho.atoms();
  double above = 0.0;
  for (size_t i = atoms.size(); i-- > 0;) {
    const auto& a = atoms[i];
    if (above <= y && above + a.mass > y) return a.location;
    above += a.mass;
  }
  return 0.0;  // unreachable given the total_mass guard
}

double low_mass_estimate(const DiscreteMeasure& rho, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("low_mass_estimate: eps must be > 0");
  double s = 0.0;
  for (const auto& a : rho.atoms()) {
    if (a.location <= eps) s += a.mass * a.location;
  }
  return s;
}

double CRMSample::mass_up_to(double t) const {
  double s = drift * std::min(t, horizon);
  for (const auto& [theta, w] : atoms) {
    if (theta <= t) s += w;
  }
  return s;
}

CRMSample sample_crm(const DiscreteMeasure& rho, double a, double horizon, Rng& rng) {
  if (!(a >= 0.0)) throw std::invalid_argument("sample_crm: drift must be >= 0");
  if (!(horizon > 0.0)) throw std::invalid_argument("sample_crm: horizon must be > 0");
  CRMSample s;
  s.drift = a;
  s.horizon = horizon;
  for (const auto& atom : rho.atoms()) {
    uint64_t k = rng.poisson(horizon * atom.mass);
    for (uint64_t i = 0; i < k; ++i) {
      s.atoms.emplace_back(rng.uniform(0.0, horizon), atom.location);
    }
  }
  std::sort(s.atoms.begin(), s.atoms.end());
  return s;
}

LevyPath::LevyPath(double drift, double horizon, std::vector<std::pair<double, double>> jumps)
    : drift_(drift), horizon_(horizon), jumps_(std::move(jumps)) {
  std::sort(jumps_.begin(), jumps_.end());
}

double LevyPath::value(double t) const {
  double s = drift_ * t;
  for (const auto& [time, size] : jumps_) {
    if (time > t) break;
    s += size;
  }
  return s;
}

LevyPath levy_path_from_sequence(const DegreeSequence& d, Rng& rng) {
  double root = std::sqrt(static_cast<double>(d.half_edge_sum()));
  std::vector<std::pair<double, double>> jumps;
  jumps.reserve(d.size());
  for (uint32_t deg : d.degrees()) {
    jumps.emplace_back(rng.uniform(0.0, root), static_cast<double>(deg) / root);
  }
  return LevyPath(0.0, root, std::move(jumps));
}

std::complex<double> crm_char_function(const DiscreteMeasure& rho, double a, double leb_a,
                                       double theta) {
  std::complex<double> exponent(0.0, theta * a * leb_a);
  for (const auto& atom : rho.atoms()) {
    std::complex<double> phase = std::polar(1.0, theta * atom.location);
    exponent += leb_a * atom.mass * (phase - 1.0);
  }
  return std::exp(exponent);
}

LevyTriplet levy_triplet(const DiscreteMeasure& rho) {
  return LevyTriplet{b_value(rho), 0.0, rho};
}

double tail_regularity_deficit(const Multigraph& g, double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("tail_regularity_deficit: delta must be > 0");
  uint64_t e = g.non_loop_edge_count();
  if (e == 0) throw std::invalid_argument("tail_regularity_deficit: graph has no non-loop edges");
  double threshold = delta * std::sqrt(static_cast<double>(e));
  uint64_t low_degree_sum = 0;
  for (uint64_t deg : g.degrees()) {
    if (static_cast<double>(deg) <= threshold) low_degree_sum += deg;
  }
  return static_cast<double>(low_degree_sum) / static_cast<double>(e);
}

}  // namespace graphex
