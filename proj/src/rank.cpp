#include "kec/rank.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace kec {

double sample_rank(Weight weight, double t) {
  if (weight < 1) throw std::invalid_argument("rank weight must be >= 1");
  if (!(t >= 0.0 && t < 1.0)) throw std::invalid_argument("uniform draw must lie in [0,1)");
  return -std::log1p(-t) / static_cast<double>(weight);
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t SeedStream::trial_seed(std::uint64_t trial) const {
  return mix64(mix64(master_seed_) ^ mix64(trial + 0x632BE59BD9B4E019ULL));
}

SeedStream SeedStream::derive(std::uint64_t tag) const {
  return SeedStream(mix64(master_seed_ ^ mix64(~tag)));
}

double edge_key(std::uint64_t trial_seed, EdgeId e, Weight w) {
  // SplitMix64 counter stream: draw e is mix64(seed + e * gamma).
  const std::uint64_t bits = mix64(trial_seed + std::uint64_t{e} * 0x9E3779B97F4A7C15ULL);
  // 53 random mantissa bits: t is a multiple of 2^-53 in [0,1).
  const double t = static_cast<double>(bits >> 11) * 0x1.0p-53;
  return sample_rank(w, t);
}

RankAssignment sample_assignment(const WeightedGraph& g, const SeedStream& stream,
                                 std::uint64_t trial) {
  const std::uint64_t base = stream.trial_seed(trial);
  std::vector<double> keys(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) keys[e] = edge_key(base, e, g.edge(e).w);
  return RankAssignment(std::move(keys), stream.master_seed(), trial);
}

namespace {

struct DisjointSets {
  std::vector<Vertex> parent;

  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), Vertex{0});
  }
  Vertex find(Vertex v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  bool unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

bool respects(const WeightedGraph& g, const VertexSet& s, const RankAssignment& r) {
  if (s.empty() || s.size() >= g.num_vertices())
    throw std::invalid_argument("respects: set must be non-empty and proper");
  std::size_t components = 0;
  connected_components(g, &components);
  if (components != 1) throw std::invalid_argument("respects: graph must be connected");

  std::vector<EdgeId> order(g.num_edges());
  std::iota(order.begin(), order.end(), EdgeId{0});
  std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) { return r.less(a, b); });

  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex v : s) in[v] = 1;

  DisjointSets dsu(g.num_vertices());
  std::size_t crossing = 0;
  RankKey crossing_key{};
  bool have_inside = false;
  RankKey max_inside{};
  for (EdgeId e : order) {
    const Edge& edge = g.edge(e);
    if (!dsu.unite(edge.u, edge.v)) continue;
    if (in[edge.u] != in[edge.v]) {
      ++crossing;
      crossing_key = r.key(e);
    } else if (in[edge.u]) {
      max_inside = have_inside ? std::max(max_inside, r.key(e)) : r.key(e);
      have_inside = true;
    }
  }
  if (crossing != 1) return false;
  return !have_inside || max_inside < crossing_key;
}

}  // namespace kec
