#pragma once

// Brute-force reference implementations. They share nothing with the
// library beyond the graph container, and enumerate vertex subsets as
// bitmasks, so they are only usable on small graphs.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "kec/graph.hpp"
#include "kec/rank.hpp"

namespace oracle {

using kec::Edge;
using kec::Vertex;
using kec::VertexSet;
using kec::Weight;
using kec::WeightedGraph;
using Mask = std::uint64_t;

inline Mask to_mask(const VertexSet& s) {
  Mask m = 0;
  for (Vertex v : s) m |= Mask{1} << v;
  return m;
}

inline VertexSet to_set(Mask m) {
  std::vector<Vertex> out;
  for (Vertex v = 0; m >> v; ++v)
    if (m >> v & 1) out.push_back(v);
  return VertexSet(std::move(out));
}

/// Weight of edges with exactly one endpoint in `s`, restricted to edges
/// inside `within`.
inline Weight cut(const WeightedGraph& g, Mask s, Mask within) {
  Weight total = 0;
  for (const Edge& e : g.edges()) {
    const bool iu = s >> e.u & 1, iv = s >> e.v & 1;
    const bool wu = within >> e.u & 1, wv = within >> e.v & 1;
    if (wu && wv && iu != iv) total += e.w;
  }
  return total;
}

inline Mask all(const WeightedGraph& g) { return (Mask{1} << g.num_vertices()) - 1; }

inline Weight cut(const WeightedGraph& g, Mask s) { return cut(g, s, all(g)); }

/// Edges with at least one endpoint in s.
inline std::size_t volume(const WeightedGraph& g, Mask s) {
  std::size_t total = 0;
  for (const Edge& e : g.edges())
    if ((s >> e.u & 1) || (s >> e.v & 1)) ++total;
  return total;
}

/// Minimum cut of the subgraph induced by `within` (at least 2 vertices),
/// enumerating every proper subset that contains its lowest vertex.
inline Weight min_cut(const WeightedGraph& g, Mask within) {
  const Mask low = within & (~within + 1);
  const Mask rest = within & ~low;
  Weight best = std::numeric_limits<Weight>::max();
  for (Mask sub = rest;; sub = (sub - 1) & rest) {
    if (sub != rest) best = std::min(best, cut(g, sub | low, within));
    if (sub == 0) break;
  }
  return best;
}

inline bool k_connected(const WeightedGraph& g, Mask within, Weight k) {
  if (std::popcount(within) <= 1) return true;
  return min_cut(g, within) >= k;
}

/// Maximal k-edge-connected partition by definition: each vertex belongs to
/// the largest k-connected induced subgraph containing it. Cost 3^n.
inline std::vector<VertexSet> partition(const WeightedGraph& g, Weight k) {
  const std::size_t n = g.num_vertices();
  std::vector<Mask> best(n, 0);
  for (Mask s = 1; s <= all(g); ++s) {
    if (!k_connected(g, s, k)) continue;
    for (Vertex v = 0; v < n; ++v)
      if ((s >> v & 1) && std::popcount(s) > std::popcount(best[v])) best[v] = s;
  }
  std::vector<VertexSet> parts;
  Mask covered = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (covered >> v & 1) continue;
    covered |= best[v];
    parts.push_back(to_set(best[v]));
  }
  return parts;
}

/// Strength of each edge: the largest connectivity of an induced subgraph
/// containing both endpoints.
inline std::vector<Weight> strengths(const WeightedGraph& g) {
  std::vector<Weight> out(g.num_edges(), 0);
  for (Mask s = 1; s <= all(g); ++s) {
    if (std::popcount(s) < 2) continue;
    bool relevant = false;
    for (const Edge& e : g.edges()) relevant = relevant || ((s >> e.u & 1) && (s >> e.v & 1));
    if (!relevant) continue;
    const Weight lambda = min_cut(g, s);
    for (kec::EdgeId e = 0; e < g.num_edges(); ++e) {
      const Edge& ed = g.edge(e);
      if ((s >> ed.u & 1) && (s >> ed.v & 1)) out[e] = std::max(out[e], lambda);
    }
  }
  return out;
}

/// Every non-empty strict subset has a strictly larger cut.
inline bool extreme(const WeightedGraph& g, Mask x) {
  const Weight dx = cut(g, x);
  for (Mask sub = (x - 1) & x; sub != 0; sub = (sub - 1) & x)
    if (cut(g, sub) <= dx) return false;
  return true;
}

/// Smallest extreme set X with x in X, |X| < sigma, vol(X) < nu (if given)
/// and cut < k, among proper subsets of V.
inline std::optional<VertexSet> minimal_extreme(const WeightedGraph& g, Vertex x, std::optional<std::uint64_t> nu,
                                                std::uint64_t sigma, Weight k) {
  std::optional<Mask> best;
  for (Mask s = 1; s < all(g); ++s) {
    if (!(s >> x & 1)) continue;
    if (static_cast<std::uint64_t>(std::popcount(s)) >= sigma) continue;
    if (nu && volume(g, s) >= *nu) continue;
    if (cut(g, s) >= k) continue;
    if (best && std::popcount(s) >= std::popcount(*best)) continue;
    if (extreme(g, s)) best = s;
  }
  if (!best) return std::nullopt;
  return to_set(*best);
}

/// Random simple graph, not necessarily connected: each pair is an edge with
/// probability `density`, weights uniform in [1, max_w].
inline WeightedGraph random_graph(std::size_t n, double density, Weight max_w, kec::SplitMix64& rng) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < density)
        edges.push_back({a, b, 1 + rng.below(max_w)});
  return WeightedGraph(n, edges);
}

/// Is every part of `fine` inside some part of `coarse`?
inline bool refines(const std::vector<VertexSet>& fine, const std::vector<VertexSet>& coarse) {
  for (const VertexSet& f : fine) {
    bool inside = false;
    for (const VertexSet& c : coarse) {
      if (!c.contains(f.front())) continue;
      inside = std::all_of(f.begin(), f.end(), [&](Vertex v) { return c.contains(v); });
      break;
    }
    if (!inside) return false;
  }
  return true;
}

}  // namespace oracle
