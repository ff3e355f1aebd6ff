#include "kec/strength.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace kec {

namespace {

std::vector<std::uint32_t> part_labels(const Partition& p, std::size_t n) {
  std::vector<std::uint32_t> label(n, 0);
  for (std::uint32_t i = 0; i < p.parts.size(); ++i)
    for (Vertex v : p.parts[i]) label[v] = i;
  return label;
}

Weight strength_limit(const WeightedGraph& g) {
  if (g.num_vertices() < 2) return 1;
  const long double limit =
      static_cast<long double>(g.num_vertices() - 1) * static_cast<long double>(g.max_weight());
  return limit >= static_cast<long double>(kMaxTotalWeight) ? kMaxTotalWeight : static_cast<Weight>(limit);
}

}  // namespace

std::vector<Weight> strength_grid(double epsilon, Weight limit) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  std::vector<Weight> grid;
  const long double ratio = 1.0L + static_cast<long double>(epsilon);
  long double power = 1.0L;
  while (true) {
    const long double rounded = std::ceil(power);
    const Weight value = rounded >= static_cast<long double>(kMaxTotalWeight)
                             ? kMaxTotalWeight
                             : static_cast<Weight>(rounded);
    if (grid.empty() || value > grid.back()) grid.push_back(value);
    if (value > limit || value == kMaxTotalWeight) break;
    power *= ratio;
  }
  return grid;
}

StrengthEstimates approx_strengths(const WeightedGraph& g, double epsilon, const SeedStream& stream,
                                   Algorithm algorithm) {
  StrengthEstimates out;
  out.epsilon = epsilon;
  out.edges.assign(g.num_edges(), {});
  const auto grid = strength_grid(epsilon, strength_limit(g));

  std::vector<char> separated(g.num_edges(), 0);
  std::size_t remaining = g.num_edges();
  for (std::size_t j = 0; j < grid.size() && remaining > 0; ++j) {
    const Weight k = grid[j];
    out.grid.push_back(k);
    const Partition p = compute_partition(g, k, algorithm, stream.derive(j));
    const auto label = part_labels(p, g.num_vertices());
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (separated[e]) continue;
      if (label[g.edge(e).u] == label[g.edge(e).v]) {
        out.edges[e].lower = k;
      } else {
        out.edges[e].upper = k;
        separated[e] = 1;
        --remaining;
      }
    }
  }
  return out;
}

std::vector<Weight> exact_strengths(const WeightedGraph& g) {
  std::map<Weight, std::vector<std::uint32_t>> cache;
  const auto labels_at = [&](Weight k) -> const std::vector<std::uint32_t>& {
    auto it = cache.find(k);
    if (it == cache.end())
      it = cache.emplace(k, part_labels(rec_mincut(g, k), g.num_vertices())).first;
    return it->second;
  };

  const Weight limit = strength_limit(g);
  std::vector<Weight> out(g.num_edges(), 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& edge = g.edge(e);
    // Invariant: endpoints together at lo, separated above hi.
    Weight lo = edge.w;
    Weight hi = std::max(limit, edge.w);
    while (lo < hi) {
      const Weight mid = lo + (hi - lo + 1) / 2;
      const auto& label = labels_at(mid);
      if (label[edge.u] == label[edge.v]) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    out[e] = lo;
  }
  return out;
}

}  // namespace kec
