#include "kec/mincut.hpp"

#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace kec {

namespace {

// Merged-vertex bookkeeping for the contraction phases. Adjacency entries
// keep their original endpoint ids and are resolved through `find`.
class ContractionState {
 public:
  explicit ContractionState(const WeightedGraph& g)
      : parent_(g.num_vertices()), adjacency_(g.num_vertices()), members_(g.num_vertices()) {
    std::iota(parent_.begin(), parent_.end(), Vertex{0});
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      members_[v].push_back(v);
      for (const Incidence& inc : g.neighbors(v))
        adjacency_[v].push_back({inc.other, g.edge(inc.edge).w});
    }
  }

  Vertex find(Vertex v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  void merge(Vertex into, Vertex from) {
    parent_[from] = into;
    auto& dst = adjacency_[into];
    auto& src = adjacency_[from];
    dst.insert(dst.end(), src.begin(), src.end());
    src.clear();
    src.shrink_to_fit();
    auto& mdst = members_[into];
    mdst.insert(mdst.end(), members_[from].begin(), members_[from].end());
    members_[from].clear();
  }

  const std::vector<std::pair<Vertex, Weight>>& adjacency(Vertex v) const { return adjacency_[v]; }
  const std::vector<Vertex>& members(Vertex v) const { return members_[v]; }

 private:
  std::vector<Vertex> parent_;
  std::vector<std::vector<std::pair<Vertex, Weight>>> adjacency_;
  std::vector<std::vector<Vertex>> members_;
};

}  // namespace

MincutResult global_mincut(const WeightedGraph& g) {
  const std::size_t n = g.num_vertices();
  if (n < 2) throw std::invalid_argument("global_mincut needs at least two vertices");

  std::size_t components = 0;
  const auto label = connected_components(g, &components);
  if (components > 1) {
    std::vector<Vertex> side;
    for (Vertex v = 0; v < n; ++v)
      if (label[v] == label[0]) side.push_back(v);
    return {Cut{VertexSet(std::move(side)), 0}, 0};
  }

  ContractionState state(g);
  std::vector<Vertex> active(n);
  std::iota(active.begin(), active.end(), Vertex{0});

  std::vector<Weight> connectivity(n, 0);
  std::vector<std::uint32_t> added_in_phase(n, 0);
  std::vector<std::uint32_t> seen_in_phase(n, 0);

  Weight best = std::numeric_limits<Weight>::max();
  std::vector<Vertex> best_side;

  using Entry = std::pair<Weight, Vertex>;
  for (std::uint32_t phase = 1; active.size() > 1; ++phase) {
    std::priority_queue<Entry> heap;
    const Vertex start = active.front();
    connectivity[start] = 0;
    seen_in_phase[start] = phase;
    heap.push({0, start});

    Vertex previous = start;
    Vertex last = start;
    std::size_t added = 0;
    while (added < active.size()) {
      const auto [conn, v] = heap.top();
      heap.pop();
      if (added_in_phase[v] == phase || conn != connectivity[v]) continue;
      added_in_phase[v] = phase;
      ++added;
      previous = last;
      last = v;
      for (const auto& [raw, w] : state.adjacency(v)) {
        const Vertex u = state.find(raw);
        if (u == v || added_in_phase[u] == phase) continue;
        if (seen_in_phase[u] != phase) {
          seen_in_phase[u] = phase;
          connectivity[u] = 0;
        }
        connectivity[u] += w;
        heap.push({connectivity[u], u});
      }
    }

    if (connectivity[last] < best) {
      best = connectivity[last];
      best_side = state.members(last);
    }
    state.merge(previous, last);
    std::erase(active, last);
  }

  VertexSet side(std::move(best_side));
  return {Cut{std::move(side), best}, best};
}

bool mincut_atleast(const WeightedGraph& g, Weight k) {
  if (g.num_vertices() <= 1) return true;
  return global_mincut(g).lambda >= k;
}

}  // namespace kec
