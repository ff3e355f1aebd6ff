#include <doctest.h>

#include <stdexcept>
#include <variant>

#include "../oracles.hpp"
#include "kec/generate.hpp"
#include "kec/local_cut.hpp"

using namespace kec;

namespace {

// Independent check of the four query constraints.
bool sound(const WeightedGraph& g, const LocalCutQuery& q, const LocalCutFound& f) {
  const oracle::Mask m = oracle::to_mask(f.set);
  if (!(m >> q.x & 1)) return false;
  if (f.set.size() >= q.sigma) return false;
  if (q.nu && oracle::volume(g, m) >= *q.nu) return false;
  const Weight c = oracle::cut(g, m);
  return c < q.k && c == f.cut_value;
}

}  // namespace

TEST_CASE("default trial count") {
  CHECK(default_trials(2, 1) == 1);
  CHECK(default_trials(4, 100) == 56);
  CHECK(default_trials(4, 100, 1.0) == 28);
}

TEST_CASE("two triangles: both variants find the triangle") {
  const WeightedGraph g = two_triangles();
  const SeedStream s(17);
  const LocalCutQuery card{0, std::nullopt, 4, 2};
  const auto structures_owned = build_structures(g, s, default_trials(4, 6));
  std::vector<SortedAdjacency> structures = structures_owned;
  const LocalCutOutcome a = local_kcut_cardinality(g, structures, card);
  REQUIRE(std::holds_alternative<LocalCutFound>(a));
  CHECK(std::get<LocalCutFound>(a).set == VertexSet{0, 1, 2});
  CHECK(std::get<LocalCutFound>(a).cut_value == 1);
  for (std::size_t i = 0; i < structures.size(); ++i) CHECK(structures[i] == structures_owned[i]);

  const LocalCutQuery vol{0, 5, 5, 2};
  const LocalCutOutcome b = local_kcut_volume(g, vol, s, default_trials(5, 6));
  REQUIRE(std::holds_alternative<LocalCutFound>(b));
  CHECK(std::get<LocalCutFound>(b).set == VertexSet{0, 1, 2});
}

TEST_CASE("bounds that exclude every low cut give no set") {
  const WeightedGraph g = two_triangles();
  const SeedStream s(3);
  // vol({0,1,2}) = 4, so nu = 4 rules it out.
  CHECK(std::holds_alternative<NoExtremeSet>(local_kcut_volume(g, {0, 4, 10, 2}, s, 50)));
  // |X| < 3 rules it out as well.
  std::vector<SortedAdjacency> st = build_structures(g, s, 50);
  CHECK(std::holds_alternative<NoExtremeSet>(local_kcut_cardinality(g, st, {0, std::nullopt, 3, 2})));
  CHECK_FALSE(local_prim_volume(g, {0, 10, 1, 2}, sample_assignment(g, s, 0)).has_value());
}

TEST_CASE("cardinality growth rejects a volume bound") {
  const WeightedGraph g = two_triangles();
  SortedAdjacency sa(g, sample_assignment(g, SeedStream(1), 0));
  CHECK_THROWS_AS(local_prim_cardinality(g, sa, {0, 5, 4, 2}), std::invalid_argument);
}

TEST_CASE("every found set is sound and the variants agree without a volume bound") {
  SplitMix64 rng(1234);
  int found = 0;
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 4 + rng.below(20);
    const WeightedGraph g = random_weighted_graph(n, n + rng.below(2 * n), 1 + rng.below(5), rng());
    const RankAssignment r = sample_assignment(g, SeedStream(rng()), 0);
    LocalCutQuery q{static_cast<Vertex>(rng.below(n)), std::nullopt, 2 + rng.below(8), 1 + rng.below(8)};
    SortedAdjacency sa(g, r);
    const SortedAdjacency before = sa;
    std::size_t journal = 0;
    const auto card = local_prim_cardinality(g, sa, q, &journal);
    const auto vol = local_prim_volume(g, q, r);
    CHECK(card == vol);
    CHECK(sa == before);
    if (card) {
      ++found;
      CHECK(sound(g, q, *card));
      CHECK(satisfies_query(g, q, *card));
    }
    q.nu = 1 + rng.below(3 * n);
    if (const auto bounded = local_prim_volume(g, q, r)) CHECK(sound(g, q, *bounded));
  }
  CHECK(found > 20);
}

TEST_CASE("the whole vertex set is never an answer") {
  const std::vector<Edge> tri{{0, 1, 1}, {1, 2, 1}, {0, 2, 1}};
  const WeightedGraph g(3, tri);
  const RankAssignment r = sample_assignment(g, SeedStream(1), 0);
  const LocalCutQuery q{0, std::nullopt, 10, 1};
  CHECK_FALSE(local_prim_volume(g, q, r).has_value());
  SortedAdjacency sa(g, r);
  CHECK_FALSE(local_prim_cardinality(g, sa, q).has_value());
  CHECK_FALSE(satisfies_query(g, q, {{0, 1, 2}, 0}));
}
