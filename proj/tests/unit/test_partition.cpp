#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "../oracles.hpp"
#include "kec/generate.hpp"
#include "kec/partition.hpp"

using namespace kec;

namespace {

const Algorithm kAll[] = {Algorithm::baseline, Algorithm::local_volume, Algorithm::local_cardinality,
                          Algorithm::automatic};

}  // namespace

TEST_CASE("parameter schedule") {
  const ScheduleParams vol = parameter_schedule(4096, 100, Variant::volume);
  REQUIRE(vol.nu);
  // (4096 ln 100)^(1/4) = 11.72
  CHECK(*vol.nu == 12);
  CHECK(vol.sigma == 12);
  const ScheduleParams card = parameter_schedule(10, 100000, Variant::cardinality);
  // (100000 ln^2 100000)^(1/5) = 26.58
  CHECK(card.sigma == 27);
  CHECK_FALSE(card.nu);
  CHECK(parameter_schedule(100, 1000, Variant::automatic).variant == Variant::volume);
  CHECK(parameter_schedule(100000, 1000, Variant::automatic).variant == Variant::cardinality);
  CHECK(parameter_schedule(2, 2, Variant::volume).trials >= 1);
}

TEST_CASE("algorithm names round trip") {
  for (Algorithm a : kAll) CHECK(parse_algorithm(to_string(a)) == a);
  CHECK_FALSE(parse_algorithm("fast").has_value());
}

TEST_CASE("fixtures under every algorithm") {
  for (Algorithm a : kAll) {
    CAPTURE(to_string(a));
    const Partition tt = compute_partition(two_triangles(), 2, a, SeedStream(1));
    CHECK(tt.parts == std::vector<VertexSet>{{0, 1, 2}, {3, 4, 5}});
    const Partition pp3 = compute_partition(parallel_paths(), 3, a, SeedStream(1));
    CHECK(pp3.parts.size() == 5);
    const Partition pp2 = compute_partition(parallel_paths(), 2, a, SeedStream(1));
    CHECK(pp2.parts == std::vector<VertexSet>{{0, 1, 2, 3, 4}});
    const Partition path = compute_partition(path_graph(40), 2, a, SeedStream(1));
    CHECK(path.parts.size() == 40);
    const Partition empty = compute_partition(WeightedGraph(3, {}), 1, a, SeedStream(1));
    CHECK(empty.parts.size() == 3);
  }
}

TEST_CASE("partitions match the definition on small graphs") {
  SplitMix64 rng(2);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 2 + rng.below(9);
    const WeightedGraph g = oracle::random_graph(n, 0.3 + 0.1 * static_cast<double>(rng.below(6)), 6, rng);
    const Weight k = 1 + rng.below(10);
    const auto expected = oracle::partition(g, k);
    for (Algorithm a : kAll) {
      CAPTURE(to_string(a));
      const Partition p = compute_partition(g, k, a, SeedStream(rng()));
      CHECK(p.parts == expected);
      CHECK(verify_partition(g, p, k).ok());
    }
  }
}

TEST_CASE("verify_partition detects each failure kind") {
  const WeightedGraph g = two_triangles();
  CHECK(verify_partition(g, make_partition({{0, 1, 2}, {3, 4}}, 2), 2).failure ==
        VerifyReport::Failure::not_a_cover);
  CHECK(verify_partition(g, make_partition({{0, 1, 2, 3}, {4}, {5}}, 2), 2).failure ==
        VerifyReport::Failure::not_k_connected);
  CHECK(verify_partition(g, make_partition({{0, 1, 2}, {3, 4, 5}}, 1), 1).failure ==
        VerifyReport::Failure::not_maximal);
  // Three unit triangles around a hub: merging any two parts fails but the
  // union of all is 2-connected, so only the quotient check catches it.
  const std::vector<Edge> ring{{0, 1, 1}, {1, 2, 1}, {2, 0, 1}};
  CHECK(verify_partition(WeightedGraph(3, ring), make_partition({{0}, {1}, {2}}, 2), 2).failure ==
        VerifyReport::Failure::not_maximal);
}

TEST_CASE("trace replays to the partition and counters obey their bounds") {
  SplitMix64 rng(8);
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = 10 + rng.below(40);
    const WeightedGraph g = random_weighted_graph(n, n + rng.below(3 * n), 6, rng());
    const Weight k = 2 + rng.below(6);
    for (Algorithm a : {Algorithm::local_volume, Algorithm::local_cardinality}) {
      PartitionTrace trace;
      const Partition p = compute_partition(g, k, a, SeedStream(rng()), &trace);
      CHECK(trace.replay(k) == p);
      REQUIRE_FALSE(trace.runs.empty());
      std::size_t calls = 0;
      for (const KCutRunStats& run : trace.runs) {
        CHECK(run.within_call_budget());
        CHECK(run.within_depth_bound());
        calls += run.local_kcut_calls;
      }
      CHECK(calls == trace.local_kcut_calls);
    }
    PartitionTrace base;
    const Partition b = rec_mincut(g, k, &base);
    CHECK(base.replay(k) == b);
    CHECK(base.local_kcut_calls == 0);
  }
}

TEST_CASE("k_cut_partition emits a coarsening with the volume halving property") {
  SplitMix64 rng(10);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = 8 + rng.below(30);
    const WeightedGraph g = random_weighted_graph(n, n + rng.below(2 * n), 5, rng());
    const Weight k = 2 + rng.below(6);
    const ScheduleParams sp = parameter_schedule(g.num_edges(), n, Variant::volume);
    KCutOptions opts;
    opts.variant = Variant::volume;
    opts.nu = std::min<std::uint64_t>(*sp.nu, std::max<std::size_t>(1, (g.num_edges() + 1) / 2));
    opts.sigma = *opts.nu;
    opts.trials = sp.trials;
    opts.half_threshold = (g.num_edges() + 1) / 2;
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    const auto emitted = k_cut_partition(g, k, opts, VertexSet(all), SeedStream(rng()));
    const Partition truth = rec_mincut(g, k);
    std::vector<VertexSet> sets;
    for (const EmittedSet& s : emitted) {
      sets.push_back(s.vertices);
      const Subgraph sub = induced_subgraph(g, s.vertices);
      if (s.k_connected) {
        if (sub.graph.num_vertices() <= 14) CHECK(oracle::k_connected(sub.graph, oracle::all(sub.graph), k));
      } else {
        CHECK(sub.graph.num_edges() <= opts.half_threshold);
      }
    }
    CHECK(oracle::refines(truth.parts, sets));
    std::size_t covered = 0;
    for (const VertexSet& s : sets) covered += s.size();
    CHECK(covered == n);
  }
}

TEST_CASE("small worked examples") {
  std::vector<Edge> k4;
  for (Vertex a = 0; a < 4; ++a)
    for (Vertex b = a + 1; b < 4; ++b) k4.push_back({a, b, 1});
  const WeightedGraph g(4, k4);
  // A pair inside unit K4 is joined by a single unit edge.
  CHECK(verify_partition(g, make_partition({{0, 1}, {2, 3}}, 2), 2).failure ==
        VerifyReport::Failure::not_k_connected);
  std::vector<Edge> heavy = k4;
  for (Edge& e : heavy) e.w = 2;
  CHECK(verify_partition(WeightedGraph(4, heavy), make_partition({{0, 1}, {2, 3}}, 2), 2).failure ==
        VerifyReport::Failure::not_maximal);
  for (Variant v : {Variant::volume, Variant::cardinality})
    CHECK(maximal_partition(g, 3, v, SeedStream(2)).parts == std::vector<VertexSet>{{0, 1, 2, 3}});
  CHECK(maximal_partition(WeightedGraph(1, {}), 5, Variant::volume, SeedStream(2)).parts ==
        std::vector<VertexSet>{{0}});
  CHECK(parameter_schedule(1, 1, Variant::volume).nu == 2u);
  CHECK(parameter_schedule(1, 1, Variant::cardinality).sigma == 2u);
}

TEST_CASE("k_cut_partition on two triangles removes a triangle locally") {
  const WeightedGraph g = two_triangles();
  KCutOptions opts;
  opts.variant = Variant::volume;
  opts.nu = 6;
  opts.sigma = 6;
  opts.trials = 60;
  opts.half_threshold = 4;
  PartitionTrace trace;
  const auto out = k_cut_partition(g, 2, opts, {0, 1, 2, 3, 4, 5}, SeedStream(4), &trace);
  std::vector<VertexSet> sets;
  for (const EmittedSet& s : out) sets.push_back(s.vertices);
  std::sort(sets.begin(), sets.end());
  CHECK(sets == std::vector<VertexSet>{{0, 1, 2}, {3, 4, 5}});
  CHECK(std::any_of(trace.events.begin(), trace.events.end(),
                    [](const TraceEvent& e) { return e.kind == TraceEvent::Kind::local_set_removed; }));
}

TEST_CASE("k_cut_partition on a path keeps uncertified sets under the threshold") {
  const WeightedGraph g = path_graph(8);
  KCutOptions opts;
  opts.variant = Variant::volume;
  opts.nu = 2;
  opts.sigma = 2;
  opts.trials = 10;
  opts.half_threshold = 4;
  const auto out = k_cut_partition(g, 2, opts, {0, 1, 2, 3, 4, 5, 6, 7}, SeedStream(4));
  for (const EmittedSet& s : out)
    if (!s.k_connected) CHECK(induced_subgraph(g, s.vertices).graph.num_edges() <= 4);
}
