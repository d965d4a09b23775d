#include <doctest.h>

#include <cmath>
#include <map>
#include <queue>

#include "graphex/analysis.hpp"
#include "graphex/census.hpp"
#include "graphex/errors.hpp"
#include "graphex/measures.hpp"
#include "graphex/multigraphex.hpp"
#include "graphex/sampling.hpp"

using namespace graphex;

namespace {

DiscreteMeasure delta_at(double loc, double mass) {
  return DiscreteMeasure::from_atoms({{loc, mass}});
}

bool two_colorable(const Multigraph& g) {
  uint32_t n = g.vertex_count();
  std::vector<std::vector<uint32_t>> adj(n);
  for (const auto& e : g.edges()) {
    if (e.u == e.v) return false;
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> color(n, -1);
  for (uint32_t s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<uint32_t> q;
    q.push(s);
    while (!q.empty()) {
      uint32_t v = q.front();
      q.pop();
      for (uint32_t u : adj[v]) {
        if (color[u] < 0) {
          color[u] = 1 - color[v];
          q.push(u);
        } else if (color[u] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("poisson pmf") {
  CHECK(poisson_pmf(0, 0.0) == 1.0);
  CHECK(poisson_pmf(3, 0.0) == 0.0);
  CHECK(poisson_pmf(0, 1.0) == doctest::Approx(std::exp(-1.0)));
  CHECK(poisson_pmf(2, 2.0) == doctest::Approx(2.0 * std::exp(-2.0)));
  CHECK(poisson_pmf(100, 50.0) == doctest::Approx(std::exp(-50.0 + 100 * std::log(50.0) - std::lgamma(101.0))));
}

TEST_CASE("rank-one kernel pmf sums to one") {
  Multigraphex wx(RankOne{delta_at(1.3, 0.7), 0.4});
  for (double x : {0.1, 0.5}) {
    for (double y : {0.1, 0.65}) {
      double cum = 0.0, prev = -1.0;
      for (uint32_t k = 0; k <= 60; ++k) {
        cum += wx.kernel(x, y, k);
        CHECK(cum >= prev);  // partial sums nondecreasing
        prev = cum;
      }
      CHECK(cum == doctest::Approx(1.0));
    }
  }
  // diagonal uses w^2/2
  double w = tail_inverse(delta_at(1.3, 0.7), 0.5);
  CHECK(wx.kernel(0.5, 0.5, 0) == doctest::Approx(poisson_pmf(0, w * w / 2.0)));
}

TEST_CASE("validation closed forms") {
  ValidationReport r1 = validate(Multigraphex(RankOne{delta_at(1.0, 0.5), 0.5}));
  CHECK(r1.pass);

  ValidationReport r2 = validate(Multigraphex(PureDust{0.5}));
  CHECK(r2.pass);

  GenericGraphex bad;
  bad.w = [](double, double, uint32_t k) { return k == 1 ? 1.0 : 0.0; };
  bad.feature_cutoff = 4.0;
  bad.mu_tail_bound = 0.0;
  ValidationReport r3 = validate(Multigraphex(std::move(bad)));
  CHECK_FALSE(r3.pass);
  bool b_failed = false;
  for (const auto& c : r3.checks) {
    if (c.name.rfind("b:", 0) == 0) b_failed = !c.pass;
  }
  CHECK(b_failed);

  GenericGraphex ok;
  ok.w = [](double x, double y, uint32_t k) {
    double p = std::exp(-x - y);
    if (k == 0) return 1.0 - p;
    return k == 1 ? p : 0.0;
  };
  ok.feature_cutoff = 20.0;
  ok.mu_tail_bound = std::exp(-20.0);
  CHECK(validate(Multigraphex(std::move(ok))).pass);
}

TEST_CASE("pure dust sampling law") {
  const double card = 0.5;
  Multigraphex dust(PureDust{card});
  const double t = 1.6;
  const uint64_t reps = 40000;
  std::map<uint64_t, uint64_t> observed;
  for (uint64_t r = 0; r < reps; ++r) {
    Rng rng = Rng::stream(51, "test/dust", r);
    Multigraph g = sample_gp(dust, t, rng);
    CHECK(g.loop_mult_sum() == 0);
    CHECK(g.vertex_count() == 2 * g.non_loop_edge_count());  // disjoint single edges
    ++observed[g.non_loop_edge_count()];
  }
  double lambda = t * t * card;
  for (uint64_t k = 0; k <= 5; ++k) {
    double p = poisson_pmf(k, lambda);
    double sigma = std::sqrt(p * (1 - p) * reps);
    CHECK(std::abs(static_cast<double>(observed[k]) - p * reps) <= 4.0 * std::max(sigma, 1.0));
  }
  Rng rng(1);
  CHECK(sample_gp(dust, 0.0, rng).vertex_count() == 0);
  CHECK(sample_adjacency(dust, 0.0, rng).points.empty());
}

TEST_CASE("rank-one adjacency counts match the Poisson mixture oracle") {
  // For rho = lambda delta_w and drift a, xi(A x B) over disjoint A, B is
  // Poisson(mu(A) mu(B)) conditionally on the latent Poisson counts, so the
  // unconditional pmf is an explicit mixture.
  const double w = 1.0, lambda = 0.8, a = 0.3, t = 2.0;
  Multigraphex wx(RankOne{delta_at(w, lambda), a});
  IntervalUnion A(0.0, 0.6), B(0.9, 1.7);
  const double la = 0.6, lb = 0.8;

  auto mixture_pmf = [&](uint64_t k) {
    double total = 0.0;
    for (uint64_t na = 0; na <= 40; ++na) {
      for (uint64_t nb = 0; nb <= 40; ++nb) {
        double mu_a = a * la + w * static_cast<double>(na);
        double mu_b = a * lb + w * static_cast<double>(nb);
        total += poisson_pmf(na, lambda * la) * poisson_pmf(nb, lambda * lb) *
                 poisson_pmf(k, mu_a * mu_b);
      }
    }
    return total;
  };

  const uint64_t reps = 30000;
  std::map<uint64_t, uint64_t> observed;
  for (uint64_t r = 0; r < reps; ++r) {
    Rng rng = Rng::stream(53, "test/rank1-count", r);
    ++observed[count(sample_adjacency(wx, t, rng), A, B)];
  }
  for (uint64_t k = 0; k <= 6; ++k) {
    double p = mixture_pmf(k);
    double sigma = std::sqrt(p * (1 - p) * reps);
    CAPTURE(k);
    CHECK(std::abs(static_cast<double>(observed[k]) - p * reps) <= 4.0 * std::max(sigma, 1.0));
  }
}

TEST_CASE("rank-one diagonal count matches the Poisson mixture oracle") {
  const double w = 1.0, lambda = 0.9, a = 0.25, t = 1.5;
  Multigraphex wx(RankOne{delta_at(w, lambda), a});
  const double la = 0.8;  // A = [0, 0.8)

  auto mixture_pmf = [&](uint64_t k) {
    double total = 0.0;
    for (uint64_t na = 0; na <= 50; ++na) {
      double mu_a = a * la + w * static_cast<double>(na);
      total += poisson_pmf(na, lambda * la) * poisson_pmf(k, mu_a * mu_a / 2.0);
    }
    return total;
  };

  const uint64_t reps = 30000;
  std::map<uint64_t, uint64_t> observed;
  for (uint64_t r = 0; r < reps; ++r) {
    Rng rng = Rng::stream(54, "test/rank1-diag", r);
    AdjacencyMeasure xi = sample_adjacency(wx, t, rng);
    uint64_t mass = 0;
    for (const auto& p : xi.points) {
      if (p.x < la && p.y < la) mass += p.mult;
    }
    ++observed[mass];
  }
  for (uint64_t k = 0; k <= 5; ++k) {
    double p = mixture_pmf(k);
    double sigma = std::sqrt(p * (1 - p) * reps);
    CAPTURE(k);
    CHECK(std::abs(static_cast<double>(observed[k]) - p * reps) <= 4.0 * std::max(sigma, 1.0));
  }
}

TEST_CASE("sample_gp agrees with extract_graph of sample_adjacency") {
  Multigraphex wx(RankOne{delta_at(1.0, 0.5), 0.5});
  const double t = 1.0;
  const uint64_t reps = 100000;
  Census direct, via_measure;
  for (uint64_t r = 0; r < reps; ++r) {
    Rng rng1 = Rng::stream(55, "test/gp-direct", r);
    direct.add(sample_gp(wx, t, rng1));
    Rng rng2 = Rng::stream(56, "test/gp-measure", r);
    via_measure.add(extract_graph(sample_adjacency(wx, t, rng2), t));
  }
  Rng boot(57);
  CHECK(tv_between(direct, via_measure, boot).value <= 0.02);
}

TEST_CASE("bipartite graphex sampling structure") {
  Multigraphex wx(BipartiteGraphex{delta_at(1.0, 0.7), delta_at(1.2, 0.5), 0.4, 0.3});
  for (uint64_t r = 0; r < 3000; ++r) {
    Rng rng = Rng::stream(58, "test/bip", r);
    Multigraph g = sample_gp(wx, 1.5, rng);
    CHECK(g.loop_mult_sum() == 0);
    CHECK(two_colorable(g));
  }
}

TEST_CASE("rescale identities") {
  Multigraphex wx(RankOne{delta_at(1.0, 0.5), 0.5});

  // c = 1 leaves every evaluation unchanged
  Multigraphex same = rescale(wx, 1.0);
  for (double x : {0.1, 0.4}) {
    CHECK(same.kernel(x, 0.3, 1) == wx.kernel(x, 0.3, 1));
    CHECK(same.star_rate(x) == wx.star_rate(x));
  }
  CHECK(same.dust_rate() == wx.dust_rate());

  // PureDust(I) rescaled by c becomes PureDust(I/c)
  CHECK(rescale(Multigraphex(PureDust{0.9}), 3.0).dust_rate() == doctest::Approx(0.3));

  // round trip
  Multigraphex rt = rescale(rescale(wx, 4.0), 0.25);
  for (double x : {0.05, 0.2, 0.45}) {
    for (double y : {0.1, 0.3}) {
      CHECK(rt.kernel(x, y, 1) == doctest::Approx(wx.kernel(x, y, 1)).epsilon(1e-12));
    }
    CHECK(rt.star_rate(x) == doctest::Approx(wx.star_rate(x)).epsilon(1e-12));
  }
  CHECK(rt.dust_rate() == doctest::Approx(wx.dust_rate()).epsilon(1e-12));
}

TEST_CASE("rescaled sampling law equals time change") {
  // GP_t(W^c) is GP_{t/sqrt(c)}(W).
  Multigraphex wx(RankOne{delta_at(1.0, 0.5), 0.5});
  const uint64_t reps = 30000;
  Census left, right;
  for (uint64_t r = 0; r < reps; ++r) {
    Rng rng1 = Rng::stream(61, "test/rescale-left", r);
    left.add(sample_gp(rescale(wx, 4.0), 1.0, rng1));
    Rng rng2 = Rng::stream(62, "test/rescale-right", r);
    right.add(sample_gp(wx, 0.5, rng2));
  }
  Rng boot(63);
  CHECK(tv_between(left, right, boot).value <= 0.03);
}

TEST_CASE("limit_of_cm parameter split") {
  // all degree-1: empty hub part, a = 1, dust I = 1/2
  DegreeSequence ones(std::vector<uint32_t>(400, 1));
  Multigraphex dustlike = limit_of_cm(ones);
  const auto& r1 = std::get<RankOne>(dustlike.base());
  CHECK(r1.rho.empty());
  CHECK(r1.a == doctest::Approx(1.0));
  CHECK(dustlike.dust_rate() == doctest::Approx(0.5));

  // all degrees exactly sqrt(l): single atom at 1, a = 0
  DegreeSequence regular(std::vector<uint32_t>(100, 100));  // l = 10^4, sqrt = 100
  Multigraphex wx2 = limit_of_cm(regular);
  const auto& r2 = std::get<RankOne>(wx2.base());
  REQUIRE(r2.rho.atoms().size() == 1);
  CHECK(r2.rho.atoms()[0].location == doctest::Approx(1.0));
  CHECK(r2.rho.atoms()[0].mass == doctest::Approx(1.0));
  CHECK(r2.a == 0.0);

  // two-block family: both parts nonzero
  std::vector<uint32_t> two_block(5050, 1);
  std::fill(two_block.begin(), two_block.begin() + 50, 100);
  Multigraphex wx3 = limit_of_cm(DegreeSequence(two_block));
  const auto& r3 = std::get<RankOne>(wx3.base());
  CHECK(r3.rho.total_mass() == doctest::Approx(0.5));
  CHECK(r3.a == doctest::Approx(0.5));
}

TEST_CASE("limit_of_pa matches limit_of_cm when 2m = l") {
  std::vector<uint32_t> degs(5050, 1);
  std::fill(degs.begin(), degs.begin() + 50, 100);
  std::vector<double> delta(degs.begin(), degs.end());
  Multigraphex from_pa = limit_of_pa(WeightSequence(delta), 5000);
  Multigraphex from_cm = limit_of_cm(DegreeSequence(degs));
  const auto& a = std::get<RankOne>(from_pa.base());
  const auto& b = std::get<RankOne>(from_cm.base());
  REQUIRE(a.rho.atoms().size() == b.rho.atoms().size());
  for (size_t i = 0; i < a.rho.atoms().size(); ++i) {
    CHECK(a.rho.atoms()[i].location == doctest::Approx(b.rho.atoms()[i].location));
    CHECK(a.rho.atoms()[i].mass == doctest::Approx(b.rho.atoms()[i].mass));
  }
  CHECK(a.a == doctest::Approx(b.a));

  // doubling delta with m fixed leaves the expected degrees unchanged
  std::vector<double> doubled(delta);
  for (auto& x : doubled) x *= 2.0;
  Multigraphex wx_doubled = limit_of_pa(WeightSequence(doubled), 5000);
  const auto& c = std::get<RankOne>(wx_doubled.base());
  CHECK(c.a == doctest::Approx(a.a));
  CHECK(c.rho.total_mass() == doctest::Approx(a.rho.total_mass()));

  // delta all one: dust-like
  Multigraphex wx_ones = limit_of_pa(WeightSequence(std::vector<double>(300, 1.0)), 150);
  const auto& d = std::get<RankOne>(wx_ones.base());
  CHECK(d.rho.empty());
  CHECK(d.a == doctest::Approx(1.0));
}

TEST_CASE("generic truncation budget") {
  GenericGraphex g;
  g.w = [](double, double, uint32_t k) { return k == 0 ? 1.0 : 0.0; };
  g.feature_cutoff = 1.0;
  g.mu_tail_bound = 5.0;  // declared heavy tail
  Multigraphex wx(std::move(g));
  Rng rng(71);
  CHECK_THROWS_AS(sample_gp(wx, 1.0, rng), TruncationBudgetExceeded);
  CHECK_NOTHROW(sample_gp(wx, 1.0, rng, /*truncation_budget=*/10.0));
}
