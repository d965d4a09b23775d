#include <doctest.h>

#include <cmath>
#include <map>

#include "graphex/analysis.hpp"
#include "graphex/errors.hpp"
#include "graphex/generators.hpp"
#include "graphex/rng.hpp"
#include "graphex/sampling.hpp"
#include "test_util.hpp"

using namespace graphex;

namespace {

// Empirical labeled-graph frequencies against an exact law, all classes
// within z * binomial sigma.
void check_against_law(const std::map<std::string, double>& law,
                       const std::map<std::string, uint64_t>& observed, uint64_t reps, double z) {
  uint64_t seen = 0;
  for (const auto& [key, prob] : law) {
    auto it = observed.find(key);
    uint64_t count = it == observed.end() ? 0 : it->second;
    seen += count;
    double sigma = std::sqrt(prob * (1.0 - prob) * static_cast<double>(reps));
    CAPTURE(key);
    CHECK(std::abs(static_cast<double>(count) - prob * static_cast<double>(reps)) <=
          z * std::max(sigma, 1.0));
  }
  CHECK(seen == reps);  // nothing outside the law's support
}

std::map<std::string, uint64_t> observe_cm(const std::vector<uint32_t>& degrees, uint64_t reps,
                                           uint64_t seed) {
  DegreeSequence d(degrees);
  std::map<std::string, uint64_t> observed;
  for (uint64_t r = 0; r < reps; ++r) {
    Rng rng = Rng::stream(seed, "test/cm", r);
    ++observed[testutil::labeled_key(configuration_model(d, rng))];
  }
  return observed;
}

}  // namespace

TEST_CASE("degree sequence validation") {
  CHECK_THROWS_AS(DegreeSequence({1, 1, 1}), OddHalfEdgeSum);
  CHECK_THROWS_AS(DegreeSequence({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(BipartiteDegrees({2}, {1}), UnbalancedSides);
  CHECK_THROWS_AS(WeightSequence({0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("cm degenerate cases") {
  Rng rng(1);
  Multigraph single_edge = configuration_model(DegreeSequence({1, 1}), rng);
  CHECK(single_edge.edges() == std::vector<Edge>{{0, 1, 1}});
  Multigraph loop = configuration_model(DegreeSequence({2}), rng);
  CHECK(loop.edges() == std::vector<Edge>{{0, 0, 1}});
}

TEST_CASE("cm degrees are exact on every draw") {
  std::vector<uint32_t> degrees{3, 2, 2, 1, 4, 2};
  DegreeSequence d(degrees);
  for (uint64_t r = 0; r < 200; ++r) {
    Rng rng = Rng::stream(77, "test/cm-deg", r);
    auto realized = configuration_model(d, rng).degrees();
    for (size_t v = 0; v < degrees.size(); ++v) CHECK(realized[v] == degrees[v]);
  }
}

TEST_CASE("cm matches the enumerated matching law, d=(1,1,1,1)") {
  const uint64_t reps = 100000;
  auto law = testutil::cm_exact_labeled_law({1, 1, 1, 1});
  CHECK(law.size() == 3);
  for (const auto& [k, p] : law) CHECK(p == doctest::Approx(1.0 / 3.0));
  check_against_law(law, observe_cm({1, 1, 1, 1}, reps, 42), reps, 4.0);
}

TEST_CASE("cm matches the enumerated matching law on small mixed sequences") {
  for (auto degrees : {std::vector<uint32_t>{2, 2}, std::vector<uint32_t>{3, 2, 1},
                       std::vector<uint32_t>{2, 1, 1, 2}, std::vector<uint32_t>{4, 2, 1, 1}}) {
    const uint64_t reps = 40000;
    auto law = testutil::cm_exact_labeled_law(degrees);
    check_against_law(law, observe_cm(degrees, reps, 99), reps, 4.5);
  }
}

TEST_CASE("erase collapses multiplicities") {
  Multigraph g(2, {{0, 1, 5}, {0, 0, 3}});
  Multigraph e = erase(g);
  CHECK(e.multiplicity(0, 1) == 1);
  CHECK(e.multiplicity(0, 0) == 1);
  Multigraph simple(3, {{0, 1, 1}, {1, 2, 1}});
  CHECK(erase(simple) == simple);
}

TEST_CASE("pa single vertex always loops") {
  WeightSequence delta({1.0});
  Rng rng(5);
  Multigraph g = preferential_attachment(delta, 1, rng);
  CHECK(g.edges() == std::vector<Edge>{{0, 0, 1}});
}

TEST_CASE("pa first-step law for n=2") {
  // P(edge) = 1/2, P(loop at 0) = P(loop at 1) = 1/4.
  WeightSequence delta({1.0, 1.0});
  const uint64_t reps = 100000;
  uint64_t edge = 0, loop0 = 0, loop1 = 0;
  for (uint64_t r = 0; r < reps; ++r) {
    Rng rng = Rng::stream(7, "test/pa2", r);
    Multigraph g = preferential_attachment(delta, 1, rng);
    if (g.multiplicity(0, 1) == 1) ++edge;
    if (g.multiplicity(0, 0) == 1) ++loop0;
    if (g.multiplicity(1, 1) == 1) ++loop1;
  }
  auto near = [&](uint64_t count, double p) {
    double sigma = std::sqrt(p * (1 - p) * reps);
    return std::abs(static_cast<double>(count) - p * reps) <= 4.0 * sigma;
  };
  CHECK(near(edge, 0.5));
  CHECK(near(loop0, 0.25));
  CHECK(near(loop1, 0.25));
}

TEST_CASE("pa half-edge count is 2m") {
  WeightSequence delta({0.5, 1.5, 3.0, 0.0});
  for (uint64_t r = 0; r < 50; ++r) {
    Rng rng = Rng::stream(13, "test/pa-half", r);
    CHECK(preferential_attachment(delta, 25, rng).total_half_edges() == 50);
  }
}

TEST_CASE("grg edge probability w=(1,1)") {
  WeightSequence w({1.0, 1.0});
  const uint64_t reps = 100000;
  uint64_t edges = 0;
  for (uint64_t r = 0; r < reps; ++r) {
    Rng rng = Rng::stream(3, "test/grg11", r);
    edges += generalized_random_graph(w, rng).non_loop_edge_count();
  }
  double p = 1.0 / 3.0;
  double sigma = std::sqrt(p * (1 - p) * reps);
  CHECK(std::abs(static_cast<double>(edges) - p * reps) <= 4.0 * sigma);
}

TEST_CASE("grg is simple and loop-free; heavy weights near-certain edge") {
  WeightSequence w({1e6, 1e6});
  Rng rng(4);
  Multigraph g = generalized_random_graph(w, rng);
  CHECK(g.loop_mult_sum() == 0);
  CHECK(g.multiplicity(0, 1) == 1);  // p = 1e12/(2e6+1e12) ~ 0.999998
  CHECK(grg_expected_edges(w) == doctest::Approx(1e12 / (2e6 + 1e12)));

  WeightSequence single({2.0});
  Rng rng2(5);
  CHECK(generalized_random_graph(single, rng2).non_loop_edge_count() == 0);
}

TEST_CASE("grg pairwise and skipping paths agree in law") {
  // Mixed weights, both paths forced explicitly; compared through the census
  // of canonical samples and through expected edge counts.
  std::vector<double> w;
  for (int i = 0; i < 6; ++i) w.push_back(8.0);
  for (int i = 0; i < 60; ++i) w.push_back(1.0);
  WeightSequence ws(w);
  const uint64_t reps = 30000;
  Census pairwise, skipping;
  double e_pair = 0.0, e_skip = 0.0;
  for (uint64_t r = 0; r < reps; ++r) {
    Rng rng1 = Rng::stream(21, "test/grg-pair", r);
    Multigraph g1 = generalized_random_graph(ws, rng1, GrgMethod::kPairwise);
    e_pair += static_cast<double>(g1.non_loop_edge_count());
    pairwise.add(canonical_sample(g1, 1.0, rng1));
    Rng rng2 = Rng::stream(22, "test/grg-skip", r);
    Multigraph g2 = generalized_random_graph(ws, rng2, GrgMethod::kSkipping);
    e_skip += static_cast<double>(g2.non_loop_edge_count());
    skipping.add(canonical_sample(g2, 1.0, rng2));
  }
  double exact = grg_expected_edges(ws);
  CHECK(e_pair / reps == doctest::Approx(exact).epsilon(0.03));
  CHECK(e_skip / reps == doctest::Approx(exact).epsilon(0.03));
  Rng boot(23);
  TVEstimate tv = tv_between(pairwise, skipping, boot);
  CHECK(tv.value <= 0.03);
}

TEST_CASE("bcm exact small laws") {
  {
    Rng rng(6);
    Multigraph g = bipartite_configuration_model(BipartiteDegrees({1}, {1}), rng);
    CHECK(g.edges() == std::vector<Edge>{{0, 1, 1}});
  }
  {
    // side1=(2), side2=(1,1): double star with probability 1.
    auto law = testutil::bcm_exact_labeled_law({2}, {1, 1});
    CHECK(law.size() == 1);
    Rng rng(7);
    Multigraph g = bipartite_configuration_model(BipartiteDegrees({2}, {1, 1}), rng);
    CHECK(law.contains(testutil::labeled_key(g)));
  }
  {
    // side1=(1,1), side2=(1,1): two matchings, probability 1/2 each.
    auto law = testutil::bcm_exact_labeled_law({1, 1}, {1, 1});
    CHECK(law.size() == 2);
    const uint64_t reps = 40000;
    std::map<std::string, uint64_t> observed;
    for (uint64_t r = 0; r < reps; ++r) {
      Rng rng = Rng::stream(8, "test/bcm", r);
      ++observed[testutil::labeled_key(
          bipartite_configuration_model(BipartiteDegrees({1, 1}, {1, 1}), rng))];
    }
    for (const auto& [key, prob] : law) {
      CHECK(prob == doctest::Approx(0.5));
      double sigma = std::sqrt(0.25 * reps);
      CHECK(std::abs(static_cast<double>(observed[key]) - 0.5 * reps) <= 4.0 * sigma);
    }
  }
}

TEST_CASE("bcm never produces within-side edges") {
  BipartiteDegrees d({3, 2, 2, 1}, {4, 2, 1, 1});
  for (uint64_t r = 0; r < 100; ++r) {
    Rng rng = Rng::stream(9, "test/bcm-side", r);
    Multigraph g = bipartite_configuration_model(d, rng);
    for (const auto& e : g.edges()) {
      CHECK(e.u < 4);
      CHECK(e.v >= 4);
    }
  }
}

TEST_CASE("generator determinism") {
  DegreeSequence d(std::vector<uint32_t>(100, 3));
  Rng a(12345), b(12345);
  CHECK(configuration_model(d, a) == configuration_model(d, b));
  WeightSequence delta(std::vector<double>(20, 1.0));
  Rng c(5), e(5);
  CHECK(preferential_attachment(delta, 30, c) == preferential_attachment(delta, 30, e));
}
