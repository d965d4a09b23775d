#include "graphex/multigraphex.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "graphex/analysis.hpp"
#include "graphex/errors.hpp"

namespace graphex {

double poisson_pmf(uint64_t k, double lambda) {
  if (!(lambda >= 0.0)) throw std::invalid_argument("poisson_pmf: lambda must be >= 0");
  if (lambda == 0.0) return k == 0 ? 1.0 : 0.0;
  double logp = -lambda + static_cast<double>(k) * std::log(lambda) -
                std::lgamma(static_cast<double>(k) + 1.0);
  return std::exp(logp);
}

Multigraphex::Multigraphex(Variant v, double scale) : variant_(std::move(v)), scale_(scale) {
  if (!(scale_ > 0.0)) throw std::invalid_argument("Multigraphex: scale must be > 0");
}

namespace {

constexpr uint32_t kGenericStarMultLimit = 32;
constexpr uint32_t kGenericPmfLimit = 4096;

enum class EdgeKind { kPoissonMult, kErasedBernoulli, kGrgBernoulli };

// Effective single-type rank-one parameters with the rescaling folded in.
struct RankOneView {
  DiscreteMeasure rho;
  double a = 0.0;
  EdgeKind kind = EdgeKind::kPoissonMult;

  double dust() const { return a * a / 2.0; }
  double edge_nonzero_prob(double wi, double wj) const {
    switch (kind) {
      case EdgeKind::kPoissonMult:
      case EdgeKind::kErasedBernoulli:
        return -std::expm1(-wi * wj);
      case EdgeKind::kGrgBernoulli:
        return wi * wj / (1.0 + wi * wj);
    }
    return 0.0;
  }
  bool has_loops() const { return kind != EdgeKind::kGrgBernoulli; }
};

RankOneView make_view(const RankOne& r, double scale) {
  double root = std::sqrt(scale);
  return {r.rho.scaled_mass(1.0 / root), r.a / root, EdgeKind::kPoissonMult};
}

RankOneView make_view(const ErasedRankOne& r, double scale) {
  double root = std::sqrt(r.c * scale);
  return {r.rho.scaled_mass(1.0 / root), r.a / root, EdgeKind::kErasedBernoulli};
}

RankOneView make_view(const GrgKernel& r, double scale) {
  double root = std::sqrt(r.big_c * scale);
  return {r.rho_w.scaled_mass(1.0 / root), r.a / root, EdgeKind::kGrgBernoulli};
}

// One draw of GP_t, kept in both labeled-point and direct-structure form.
struct GpDraw {
  std::vector<double> labels;
  std::vector<Edge> edges;
  std::vector<LabeledPoint> points;

  uint32_t add_vertex(double label) {
    labels.push_back(label);
    return static_cast<uint32_t>(labels.size() - 1);
  }
  void add_edge(uint32_t u, uint32_t v, uint32_t mult) {
    if (mult == 0) return;
    edges.push_back({u, v, mult});
    points.push_back({labels[u], labels[v], mult});
  }
};

void draw_rank_one(const RankOneView& view, double t, Rng& rng, GpDraw& out) {
  struct Latent {
    uint32_t id;
    double weight;
  };
  std::vector<Latent> latent;
  for (const auto& atom : view.rho.atoms()) {
    uint64_t k = rng.poisson(t * atom.mass);
    for (uint64_t i = 0; i < k; ++i) {
      latent.push_back({out.add_vertex(rng.uniform(0.0, t)), atom.location});
    }
  }
  for (size_t i = 0; i < latent.size(); ++i) {
    for (size_t j = i + 1; j < latent.size(); ++j) {
      uint32_t mult = 0;
      double rate = latent[i].weight * latent[j].weight;
      if (view.kind == EdgeKind::kPoissonMult) {
        mult = static_cast<uint32_t>(rng.poisson(rate));
      } else {
        mult = rng.bernoulli(view.edge_nonzero_prob(latent[i].weight, latent[j].weight)) ? 1 : 0;
      }
      out.add_edge(latent[i].id, latent[j].id, mult);
    }
  }
  if (view.has_loops()) {
    for (const auto& v : latent) {
      uint32_t mult = 0;
      if (view.kind == EdgeKind::kPoissonMult) {
        mult = static_cast<uint32_t>(rng.poisson(v.weight * v.weight / 2.0));
      } else {
        mult = rng.bernoulli(-std::expm1(-v.weight * v.weight / 2.0)) ? 1 : 0;
      }
      out.add_edge(v.id, v.id, mult);
    }
  }
  if (view.a > 0.0) {
    for (const auto& v : latent) {
      uint64_t stars = rng.poisson(t * view.a * v.weight);
      for (uint64_t s = 0; s < stars; ++s) {
        out.add_edge(v.id, out.add_vertex(rng.uniform(0.0, t)), 1);
      }
    }
  }
  uint64_t dust = rng.poisson(t * t * view.dust());
  for (uint64_t k = 0; k < dust; ++k) {
    uint32_t u = out.add_vertex(rng.uniform(0.0, t));
    uint32_t v = out.add_vertex(rng.uniform(0.0, t));
    out.add_edge(u, v, 1);
  }
}

void draw_bipartite(const BipartiteGraphex& b, double scale, double t, Rng& rng, GpDraw& out) {
  double root = std::sqrt(scale);
  DiscreteMeasure rho1 = b.rho1.empty() ? b.rho1 : b.rho1.scaled_mass(1.0 / root);
  DiscreteMeasure rho2 = b.rho2.empty() ? b.rho2 : b.rho2.scaled_mass(1.0 / root);
  double a1 = b.a1 / root, a2 = b.a2 / root;

  struct Latent {
    uint32_t id;
    double weight;
  };
  std::vector<Latent> side1, side2;
  for (const auto& atom : rho1.atoms()) {
    uint64_t k = rng.poisson(t * atom.mass);
    for (uint64_t i = 0; i < k; ++i) side1.push_back({out.add_vertex(rng.uniform(0.0, t)), atom.location});
  }
  for (const auto& atom : rho2.atoms()) {
    uint64_t k = rng.poisson(t * atom.mass);
    for (uint64_t i = 0; i < k; ++i) side2.push_back({out.add_vertex(rng.uniform(0.0, t)), atom.location});
  }
  for (const auto& u : side1) {
    for (const auto& v : side2) {
      out.add_edge(u.id, v.id, static_cast<uint32_t>(rng.poisson(u.weight * v.weight)));
    }
  }
  // Stars attach leaves representing low-mass vertices of the opposite side.
  for (const auto& u : side1) {
    uint64_t stars = rng.poisson(t * a2 * u.weight);
    for (uint64_t s = 0; s < stars; ++s) out.add_edge(u.id, out.add_vertex(rng.uniform(0.0, t)), 1);
  }
  for (const auto& v : side2) {
    uint64_t stars = rng.poisson(t * a1 * v.weight);
    for (uint64_t s = 0; s < stars; ++s) out.add_edge(v.id, out.add_vertex(rng.uniform(0.0, t)), 1);
  }
  uint64_t dust = rng.poisson(t * t * a1 * a2);
  for (uint64_t k = 0; k < dust; ++k) {
    uint32_t u = out.add_vertex(rng.uniform(0.0, t));
    uint32_t v = out.add_vertex(rng.uniform(0.0, t));
    out.add_edge(u, v, 1);
  }
}

uint32_t draw_from_pmf(const GenericGraphex& g, double x, double y, Rng& rng) {
  double u = rng.uniform();
  double cum = 0.0;
  for (uint32_t k = 0; k < kGenericPmfLimit; ++k) {
    cum += g.w(x, y, k);
    if (u < cum) return k;
  }
  return 0;  // un-normalized pmf mass; validate() flags such kernels
}

void draw_generic(const GenericGraphex& g, double scale, double t, Rng& rng, GpDraw& out,
                  double truncation_budget) {
  double root = std::sqrt(scale);
  double t_eff = t / root;
  double missed = t_eff * t_eff * g.mu_tail_bound;
  if (missed > truncation_budget) {
    throw TruncationBudgetExceeded("sample_gp: expected missed edge mass " + std::to_string(missed) +
                                   " exceeds budget " + std::to_string(truncation_budget));
  }
  struct Latent {
    uint32_t id;
    double feature;
  };
  std::vector<Latent> latent;
  uint64_t k = rng.poisson(t_eff * g.feature_cutoff);
  for (uint64_t i = 0; i < k; ++i) {
    latent.push_back({out.add_vertex(rng.uniform(0.0, t)), rng.uniform(0.0, g.feature_cutoff)});
  }
  for (size_t i = 0; i < latent.size(); ++i) {
    for (size_t j = i + 1; j < latent.size(); ++j) {
      out.add_edge(latent[i].id, latent[j].id, draw_from_pmf(g, latent[i].feature, latent[j].feature, rng));
    }
    out.add_edge(latent[i].id, latent[i].id, draw_from_pmf(g, latent[i].feature, latent[i].feature, rng));
  }
  if (g.star) {
    for (const auto& v : latent) {
      for (uint32_t r = 1; r <= kGenericStarMultLimit; ++r) {
        double rate = g.star(v.feature, r);
        if (rate <= 0.0) continue;
        uint64_t stars = rng.poisson(t * rate / root);
        for (uint64_t s = 0; s < stars; ++s) out.add_edge(v.id, out.add_vertex(rng.uniform(0.0, t)), r);
      }
    }
  }
  for (uint32_t r = 1; r <= g.dust.size(); ++r) {
    double rate = g.dust[r - 1];
    if (rate <= 0.0) continue;
    uint64_t dust = rng.poisson(t * t * rate / scale);
    for (uint64_t i = 0; i < dust; ++i) {
      uint32_t u = out.add_vertex(rng.uniform(0.0, t));
      uint32_t v = out.add_vertex(rng.uniform(0.0, t));
      out.add_edge(u, v, r);
    }
  }
}

GpDraw draw_gp(const Multigraphex& wx, double t, Rng& rng, double truncation_budget) {
  if (!(t >= 0.0)) throw std::invalid_argument("sample_gp: t must be >= 0");
  GpDraw out;
  if (t == 0.0) return out;
  const double scale = wx.scale();
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, RankOne> || std::is_same_v<T, ErasedRankOne> ||
                      std::is_same_v<T, GrgKernel>) {
          draw_rank_one(make_view(v, scale), t, rng, out);
        } else if constexpr (std::is_same_v<T, BipartiteGraphex>) {
          draw_bipartite(v, scale, t, rng, out);
        } else if constexpr (std::is_same_v<T, PureDust>) {
          uint64_t dust = rng.poisson(t * t * v.isolated_rate / scale);
          for (uint64_t k = 0; k < dust; ++k) {
            uint32_t a = out.add_vertex(rng.uniform(0.0, t));
            uint32_t b = out.add_vertex(rng.uniform(0.0, t));
            out.add_edge(a, b, 1);
          }
        } else {
          draw_generic(v, scale, t, rng, out, truncation_budget);
        }
      },
      wx.base());
  return out;
}

}  // namespace

Multigraph sample_gp(const Multigraphex& wx, double t, Rng& rng, double truncation_budget) {
  GpDraw d = draw_gp(wx, t, rng, truncation_budget);
  Multigraph g(static_cast<uint32_t>(d.labels.size()), std::move(d.edges));
  return g.drop_isolated();
}

AdjacencyMeasure sample_adjacency(const Multigraphex& wx, double t, Rng& rng,
                                  double truncation_budget) {
  GpDraw d = draw_gp(wx, t, rng, truncation_budget);
  AdjacencyMeasure xi;
  xi.window = t;
  xi.points = std::move(d.points);
  return xi;
}

Multigraphex rescale(const Multigraphex& wx, double c) {
  if (!(c > 0.0)) throw std::invalid_argument("rescale: c must be > 0");
  return Multigraphex(wx.base(), wx.scale() * c);
}

double Multigraphex::kernel(double x, double y, uint32_t k) const {
  double root = std::sqrt(scale_);
  double xs = root * x, ys = root * y;
  return std::visit(
      [&](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, RankOne>) {
          double wi = tail_inverse(v.rho, xs), wj = tail_inverse(v.rho, ys);
          return x == y ? poisson_pmf(k, wi * wi / 2.0) : poisson_pmf(k, wi * wj);
        } else if constexpr (std::is_same_v<T, ErasedRankOne>) {
          double r = std::sqrt(v.c);
          double wi = tail_inverse(v.rho, r * xs), wj = tail_inverse(v.rho, r * ys);
          double pe = x == y ? -std::expm1(-wi * wi / 2.0) : -std::expm1(-wi * wj);
          if (k == 0) return 1.0 - pe;
          return k == 1 ? pe : 0.0;
        } else if constexpr (std::is_same_v<T, GrgKernel>) {
          if (x == y) return k == 0 ? 1.0 : 0.0;
          double r = std::sqrt(v.big_c);
          double wi = tail_inverse(v.rho_w, r * xs), wj = tail_inverse(v.rho_w, r * ys);
          double pe = wi * wj / (1.0 + wi * wj);
          if (k == 0) return 1.0 - pe;
          return k == 1 ? pe : 0.0;
        } else if constexpr (std::is_same_v<T, PureDust>) {
          return k == 0 ? 1.0 : 0.0;
        } else if constexpr (std::is_same_v<T, GenericGraphex>) {
          return v.w(xs, ys, k);
        } else {
          throw std::logic_error("kernel: bipartite graphexes have a two-type feature space");
        }
      },
      variant_);
}

double Multigraphex::star_rate(double x, uint32_t k) const {
  double root = std::sqrt(scale_);
  double xs = root * x;
  return std::visit(
      [&](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, RankOne>) {
          return k == 1 ? v.a * tail_inverse(v.rho, xs) / root : 0.0;
        } else if constexpr (std::is_same_v<T, ErasedRankOne>) {
          double r = std::sqrt(v.c);
          return k == 1 ? v.a * tail_inverse(v.rho, r * xs) / (r * root) : 0.0;
        } else if constexpr (std::is_same_v<T, GrgKernel>) {
          double r = std::sqrt(v.big_c);
          return k == 1 ? v.a * tail_inverse(v.rho_w, r * xs) / (r * root) : 0.0;
        } else if constexpr (std::is_same_v<T, PureDust>) {
          return 0.0;
        } else if constexpr (std::is_same_v<T, GenericGraphex>) {
          return v.star ? v.star(xs, k) / root : 0.0;
        } else {
          throw std::logic_error("star_rate: bipartite graphexes have a two-type feature space");
        }
      },
      variant_);
}

double Multigraphex::dust_rate(uint32_t k) const {
  return std::visit(
      [&](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, RankOne>) {
          return k == 1 ? v.a * v.a / (2.0 * scale_) : 0.0;
        } else if constexpr (std::is_same_v<T, ErasedRankOne>) {
          return k == 1 ? v.a * v.a / (2.0 * v.c * scale_) : 0.0;
        } else if constexpr (std::is_same_v<T, GrgKernel>) {
          return k == 1 ? v.a * v.a / (2.0 * v.big_c * scale_) : 0.0;
        } else if constexpr (std::is_same_v<T, BipartiteGraphex>) {
          return k == 1 ? v.a1 * v.a2 / scale_ : 0.0;
        } else if constexpr (std::is_same_v<T, PureDust>) {
          return k == 1 ? v.isolated_rate / scale_ : 0.0;
        } else {
          if (k >= 1 && k <= v.dust.size()) return v.dust[k - 1] / scale_;
          return 0.0;
        }
      },
      variant_);
}

namespace {

void rank_one_validation(const RankOneView& view, ValidationReport& rep) {
  const auto& atoms = view.rho.atoms();
  double sup_mu = 0.0, leb_gt1 = 0.0, cond_b = 0.0, cond_c = 0.0, star_int = 0.0;
  for (const auto& aj : atoms) {
    double mu = 0.0;
    for (const auto& ak : atoms) mu += ak.mass * view.edge_nonzero_prob(aj.location, ak.location);
    rep.mu_profile.emplace_back(aj.mass, mu);
    sup_mu = std::max(sup_mu, mu);
    if (mu > 1.0) leb_gt1 += aj.mass;
    cond_b += aj.mass * mu;
    if (view.has_loops()) cond_c += aj.mass * (-std::expm1(-aj.location * aj.location / 2.0));
    star_int += aj.mass * std::min(view.a * aj.location, 1.0);
  }
  bool finite = std::isfinite(sup_mu) && std::isfinite(cond_b) && std::isfinite(cond_c);
  rep.checks.push_back({"a: Leb{mu_W = inf} = 0", finite, 0.0, "closed form over finitely many atoms"});
  rep.checks.push_back({"a: Leb{mu_W > 1} finite", std::isfinite(leb_gt1), leb_gt1, ""});
  rep.checks.push_back({"b: edge mass integral finite", std::isfinite(cond_b), cond_b,
                        "diagonal-indicator-free upper bound"});
  rep.checks.push_back({"c: loop mass integral finite", std::isfinite(cond_c), cond_c, ""});
  rep.checks.push_back({"star: min(S,1) integrable", std::isfinite(star_int), star_int, ""});
}

void generic_validation(const GenericGraphex& g, double scale, uint32_t resolution,
                        ValidationReport& rep) {
  double root = std::sqrt(scale);
  uint32_t res = std::max<uint32_t>(resolution, 8);
  double cutoff = g.feature_cutoff / root;
  double h = cutoff / res;
  std::vector<double> xs(res), mu(res, 0.0);
  for (uint32_t i = 0; i < res; ++i) xs[i] = (i + 0.5) * h;

  auto w_scaled = [&](double x, double y, uint32_t k) { return g.w(root * x, root * y, k); };

  // pmf sanity on a coarse sub-grid.
  double worst_norm = 1.0, worst_asym = 0.0;
  for (uint32_t i = 0; i < res; i += std::max<uint32_t>(res / 16, 1)) {
    for (uint32_t j = i; j < res; j += std::max<uint32_t>(res / 16, 1)) {
      double total = 0.0;
      for (uint32_t k = 0; k <= 64; ++k) total += w_scaled(xs[i], xs[j], k);
      worst_norm = std::min(worst_norm, total);
      worst_asym = std::max(worst_asym, std::abs(w_scaled(xs[i], xs[j], 1) - w_scaled(xs[j], xs[i], 1)));
    }
  }
  rep.checks.push_back({"multigraphon pmf sums to 1", worst_norm > 1.0 - 1e-6, worst_norm, ""});
  rep.checks.push_back({"kernel symmetry", worst_asym < 1e-9, worst_asym, ""});

  for (uint32_t i = 0; i < res; ++i) {
    for (uint32_t j = 0; j < res; ++j) mu[i] += (1.0 - w_scaled(xs[i], xs[j], 0)) * h;
    rep.mu_profile.emplace_back(h, mu[i]);
  }

  // Truncated integrals over [0, r]^2 at r = cutoff/2 and cutoff: a growth
  // ratio near 4 indicates a non-integrable kernel (the tail cannot be probed
  // pointwise, so divergence is flagged from growth).
  auto b_integral = [&](uint32_t upto) {
    double s = 0.0;
    for (uint32_t i = 0; i < upto; ++i) {
      for (uint32_t j = 0; j < upto; ++j) s += (1.0 - w_scaled(xs[i], xs[j], 0)) * h * h;
    }
    return s;
  };
  double b_half = b_integral(res / 2), b_full = b_integral(res);
  bool b_diverges = b_half > 1e-12 && b_full / b_half > 1.9;
  double leb_gt1_half = 0.0, leb_gt1_full = 0.0;
  for (uint32_t i = 0; i < res; ++i) {
    if (mu[i] > 1.0) {
      leb_gt1_full += h;
      if (i < res / 2) leb_gt1_half += h;
    }
  }
  bool a_diverges = leb_gt1_half > 1e-12 && leb_gt1_full / leb_gt1_half > 1.9 && mu[res - 1] > 1.0;
  double c_val = 0.0;
  for (uint32_t i = 0; i < res; ++i) c_val += (1.0 - w_scaled(xs[i], xs[i], 0)) * h;
  double star_val = 0.0;
  if (g.star) {
    for (uint32_t i = 0; i < res; ++i) {
      double srate = 0.0;
      for (uint32_t k = 1; k <= kGenericStarMultLimit; ++k) srate += g.star(root * xs[i], k) / root;
      star_val += std::min(srate, 1.0) * h;
    }
  }
  rep.checks.push_back({"a: Leb{mu_W > 1} finite", !a_diverges, leb_gt1_full,
                        "quadrature on [0,cutoff]; growth-ratio divergence heuristic"});
  rep.checks.push_back({"b: edge mass integral finite", !b_diverges, b_full,
                        "quadrature on [0,cutoff]^2; growth-ratio divergence heuristic"});
  rep.checks.push_back({"c: loop mass integral finite", std::isfinite(c_val), c_val, ""});
  rep.checks.push_back({"star: min(S,1) integrable", std::isfinite(star_val), star_val, ""});
  rep.checks.push_back({"declared tail bound", g.mu_tail_bound >= 0.0, g.mu_tail_bound,
                        "user-supplied bound on the mu_W mass beyond the cutoff"});
}

}  // namespace

ValidationReport validate(const Multigraphex& wx, uint32_t resolution) {
  ValidationReport rep;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, RankOne> || std::is_same_v<T, ErasedRankOne> ||
                      std::is_same_v<T, GrgKernel>) {
          rank_one_validation(make_view(v, wx.scale()), rep);
        } else if constexpr (std::is_same_v<T, BipartiteGraphex>) {
          double root = std::sqrt(wx.scale());
          DiscreteMeasure r1 = v.rho1.empty() ? v.rho1 : v.rho1.scaled_mass(1.0 / root);
          DiscreteMeasure r2 = v.rho2.empty() ? v.rho2 : v.rho2.scaled_mass(1.0 / root);
          double a1 = v.a1 / root, a2 = v.a2 / root;
          double sup_mu = 0.0, leb_gt1 = 0.0, cond_b = 0.0, star_int = 0.0;
          auto one_side = [&](const DiscreteMeasure& mine, const DiscreteMeasure& other, double a_star) {
            for (const auto& aj : mine.atoms()) {
              double mu = 0.0;
              for (const auto& ak : other.atoms()) {
                mu += ak.mass * (-std::expm1(-aj.location * ak.location));
              }
              rep.mu_profile.emplace_back(aj.mass, mu);
              sup_mu = std::max(sup_mu, mu);
              if (mu > 1.0) leb_gt1 += aj.mass;
              cond_b += aj.mass * mu;
              star_int += aj.mass * std::min(a_star * aj.location, 1.0);
            }
          };
          one_side(r1, r2, a2);
          one_side(r2, r1, a1);
          rep.checks.push_back({"a: Leb{mu_W = inf} = 0", std::isfinite(sup_mu), 0.0, ""});
          rep.checks.push_back({"a: Leb{mu_W > 1} finite", std::isfinite(leb_gt1), leb_gt1, ""});
          rep.checks.push_back({"b: edge mass integral finite", std::isfinite(cond_b), cond_b, ""});
          rep.checks.push_back({"c: loop mass integral finite", true, 0.0, "within-side kernel is zero"});
          rep.checks.push_back({"star: min(S,1) integrable", std::isfinite(star_int), star_int, ""});
        } else if constexpr (std::is_same_v<T, PureDust>) {
          rep.checks.push_back({"a: Leb{mu_W = inf} = 0", true, 0.0, "mu_W vanishes"});
          rep.checks.push_back({"a: Leb{mu_W > 1} finite", true, 0.0, ""});
          rep.checks.push_back({"b: edge mass integral finite", true, 0.0, ""});
          rep.checks.push_back({"c: loop mass integral finite", true, 0.0, ""});
          rep.checks.push_back({"star: min(S,1) integrable", true, 0.0, ""});
          rep.checks.push_back({"dust rate finite", std::isfinite(v.isolated_rate) && v.isolated_rate >= 0.0,
                                v.isolated_rate / wx.scale(), ""});
        } else {
          generic_validation(v, wx.scale(), resolution, rep);
        }
      },
      wx.base());
  rep.pass = std::all_of(rep.checks.begin(), rep.checks.end(), [](const auto& c) { return c.pass; });
  return rep;
}

Multigraphex limit_of_cm(const DegreeSequence& d, double hub_threshold) {
  DiscreteMeasure rho = empirical_degree_measure(d);
  double a = low_mass_estimate(rho, hub_threshold);
  return Multigraphex(RankOne{rho.restricted_above(hub_threshold), a});
}

Multigraphex limit_of_pa(const WeightSequence& delta, uint64_t m, double hub_threshold) {
  const auto& del = delta.weights();
  double factor = 2.0 * static_cast<double>(m) / delta.total();
  std::vector<double> expected_degrees(del.size());
  for (size_t i = 0; i < del.size(); ++i) expected_degrees[i] = factor * del[i];
  DiscreteMeasure rho = empirical_weight_measure(expected_degrees, 2.0 * static_cast<double>(m));
  double a = low_mass_estimate(rho, hub_threshold);
  return Multigraphex(RankOne{rho.restricted_above(hub_threshold), a});
}

Multigraphex limit_of_grg(const WeightSequence& w, double hub_threshold) {
  DiscreteMeasure rho_w = empirical_weight_measure(w.weights(), w.total());
  double a = low_mass_estimate(rho_w, hub_threshold);
  double c = grg_expected_edges(w) / (w.total() / 2.0);
  return Multigraphex(GrgKernel{rho_w.restricted_above(hub_threshold), a, c});
}

Multigraphex limit_of_bcm(const BipartiteDegrees& d, double hub_threshold) {
  double l_n = static_cast<double>(d.total_half_edges());
  auto side_measure = [&](const std::vector<uint32_t>& degs) {
    std::vector<double> v(degs.begin(), degs.end());
    return empirical_weight_measure(v, l_n);
  };
  DiscreteMeasure rho1 = side_measure(d.side1());
  DiscreteMeasure rho2 = side_measure(d.side2());
  double a1 = low_mass_estimate(rho1, hub_threshold);
  double a2 = low_mass_estimate(rho2, hub_threshold);
  return Multigraphex(BipartiteGraphex{rho1.restricted_above(hub_threshold),
                                       rho2.restricted_above(hub_threshold), a1, a2});
}

}  // namespace graphex
