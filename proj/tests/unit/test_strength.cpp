#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "../oracles.hpp"
#include "kec/generate.hpp"
#include "kec/strength.hpp"

using namespace kec;

TEST_CASE("strength grid") {
  CHECK(strength_grid(1.0, 10) == std::vector<Weight>{1, 2, 4, 8, 16});
  CHECK(strength_grid(0.5, 3) == std::vector<Weight>{1, 2, 3, 4});
  const auto fine = strength_grid(0.1, 100);
  for (std::size_t i = 1; i < fine.size(); ++i) {
    CHECK(fine[i] > fine[i - 1]);
    CHECK(static_cast<double>(fine[i]) <= 1.1 * static_cast<double>(fine[i - 1]) + 1);
  }
  CHECK(fine.back() > 100);
  CHECK_THROWS_AS(strength_grid(0.0, 10), std::invalid_argument);
}

TEST_CASE("exact strengths match the definition") {
  SplitMix64 rng(6);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = 2 + rng.below(8);
    const WeightedGraph g = oracle::random_graph(n, 0.5, 5, rng);
    CHECK(exact_strengths(g) == oracle::strengths(g));
  }
}

TEST_CASE("lollipop strengths") {
  const WeightedGraph g = lollipop(60, 4);
  const auto exact = exact_strengths(g);
  for (EdgeId e = 0; e < g.num_edges(); ++e) CHECK(exact[e] == (e < 6 ? 3u : 1u));
}

TEST_CASE("approximate strengths bracket the exact ones") {
  SplitMix64 rng(12);
  for (double eps : {0.1, 0.5, 1.0}) {
    for (int i = 0; i < 10; ++i) {
      const std::size_t n = 3 + rng.below(15);
      const WeightedGraph g = random_weighted_graph(n, n + rng.below(2 * n), 8, rng());
      const StrengthEstimates est = approx_strengths(g, eps, SeedStream(rng()));
      const auto exact = exact_strengths(g);
      for (EdgeId e = 0; e < g.num_edges(); ++e) {
        CHECK(est.edges[e].lower <= exact[e]);
        CHECK(exact[e] < est.edges[e].upper);
        CHECK(static_cast<double>(est.edges[e].upper) <= (1 + eps) * static_cast<double>(est.edges[e].lower) + 1);
      }
    }
  }
}

TEST_CASE("strength fixtures") {
  const std::vector<Edge> single{{0, 1, 5}};
  const WeightedGraph one(2, single);
  CHECK(exact_strengths(one) == std::vector<Weight>{5});
  const StrengthEstimates est = approx_strengths(one, 0.1, SeedStream(1));
  CHECK(est.edges[0].lower <= 5);
  CHECK(5 < est.edges[0].upper);

  const std::vector<Edge> tri{{0, 1, 1}, {1, 2, 1}, {0, 2, 1}};
  CHECK(exact_strengths(WeightedGraph(3, tri)) == std::vector<Weight>{2, 2, 2});
  CHECK(exact_strengths(parallel_paths()) == std::vector<Weight>(6, 2));
  CHECK(exact_strengths(two_triangles()) == std::vector<Weight>{2, 2, 2, 2, 2, 2, 1});

  SplitMix64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const WeightedGraph g = random_weighted_graph(12, 25, 9, rng());
    const auto s = exact_strengths(g);
    for (EdgeId e = 0; e < g.num_edges(); ++e) CHECK(s[e] >= g.edge(e).w);
  }
}
