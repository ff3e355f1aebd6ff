#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "../oracles.hpp"
#include "kec/extreme.hpp"
#include "kec/generate.hpp"
#include "kec/mincut.hpp"

using namespace kec;

TEST_CASE("is_extreme agrees with subset enumeration") {
  SplitMix64 rng(77);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 3 + rng.below(8);
    const WeightedGraph g = random_weighted_graph(n, n + rng.below(n * 2), 4, rng());
    oracle::Mask m = 0;
    while (m == 0) m = rng() & oracle::all(g);
    CHECK(is_extreme(g, oracle::to_set(m)) == oracle::extreme(g, m));
  }
}

TEST_CASE("an extreme set is the unique mincut side of its contraction") {
  // X extreme means: in G with V \ X contracted, the only minimum cut
  // separating the contracted vertex alone is (X, outside).
  SplitMix64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 4 + rng.below(6);
    const WeightedGraph g = random_weighted_graph(n, n + rng.below(n), 5, rng());
    oracle::Mask m = 0;
    while (m == 0 || m == oracle::all(g)) m = rng() & oracle::all(g);
    const VertexSet x = oracle::to_set(m);
    const Subgraph c = contract_complement(g, x);
    const Vertex outside = static_cast<Vertex>(x.size());
    const Weight dx = c.graph.weighted_degree(outside);
    bool unique = true;
    for (oracle::Mask s = 1; s < oracle::all(c.graph); ++s) {
      if (s >> outside & 1) continue;
      if (s == oracle::all(c.graph) - (oracle::Mask{1} << outside)) continue;
      if (oracle::cut(c.graph, s) <= dx) unique = false;
    }
    CHECK(is_extreme(g, x) == unique);
  }
}

TEST_CASE("is_extreme guards the enumeration size") {
  const WeightedGraph g = path_graph(30);
  std::vector<Vertex> many(25);
  for (Vertex v = 0; v < 25; ++v) many[v] = v;
  CHECK_THROWS_AS(is_extreme(g, VertexSet(many)), std::length_error);
  CHECK(is_extreme(g, {3}));
}

TEST_CASE("planted instances carry a verified certificate") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const GeneratedInstance inst = planted_extreme(8, 4, seed);
    REQUIRE(inst.certificate);
    CHECK(inst.certificate->verified_by_brute_force);
    CHECK(oracle::extreme(inst.graph, oracle::to_mask(inst.certificate->set)));
    CHECK(inst.certificate->set.contains(*inst.seed_vertex));
  }
}

TEST_CASE("minimal_extreme_set returns the smallest qualifying set") {
  SplitMix64 rng(31);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = 4 + rng.below(8);
    const WeightedGraph g = random_weighted_graph(n, n + rng.below(n), 3, rng());
    LocalCutQuery q{static_cast<Vertex>(rng.below(n)), std::nullopt, 2 + rng.below(5), 1 + rng.below(6)};
    if (rng.below(2)) q.nu = 2 + rng.below(3 * n);
    const MinimalExtremeResult r =
        minimal_extreme_set(g, q, SeedStream(rng()), default_trials(q.sigma, n));
    CHECK(r.set == oracle::minimal_extreme(g, q.x, q.nu, q.sigma, q.k));
  }
}
