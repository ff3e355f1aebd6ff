#include "kec/sorted_adjacency.hpp"

#include <algorithm>
#include <stdexcept>

namespace kec {

namespace {

std::uint64_t pair_key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (std::uint64_t{u} << 32) | v;
}

}  // namespace

SortedAdjacency::SortedAdjacency(const WeightedGraph& g, RankAssignment ranks)
    : num_vertices_(g.num_vertices()), ranks_(std::move(ranks)) {
  if (ranks_.size() != g.num_edges())
    throw std::invalid_argument("rank assignment does not match graph");
  const std::size_t m = g.num_edges();
  edge_endpoints_.reserve(m);
  pair_index_.reserve(m);
  for (EdgeId e = 0; e < m; ++e) {
    edge_endpoints_.emplace_back(g.edge(e).u, g.edge(e).v);
    pair_index_.emplace(pair_key(g.edge(e).u, g.edge(e).v), e);
  }
  present_.assign(m, 1);
  prev_.resize(2 * m + num_vertices_);
  next_.resize(2 * m + num_vertices_);

  std::vector<EdgeId> order;
  for (Vertex v = 0; v < num_vertices_; ++v) {
    order.clear();
    for (const Incidence& inc : g.neighbors(v)) order.push_back(inc.edge);
    std::sort(order.begin(), order.end(),
              [&](EdgeId a, EdgeId b) { return ranks_.less(a, b); });
    Node tail = sentinel(v);
    for (EdgeId e : order) {
      const Node node = 2 * e + (edge_endpoints_[e].first == v ? 0 : 1);
      next_[tail] = node;
      prev_[node] = tail;
      tail = node;
    }
    next_[tail] = sentinel(v);
    prev_[sentinel(v)] = tail;
  }
}

std::optional<EdgeId> SortedAdjacency::find_edge(Vertex u, Vertex v) const {
  const auto it = pair_index_.find(pair_key(u, v));
  if (it == pair_index_.end() || !present_[it->second]) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> SortedAdjacency::head(Vertex v) const {
  const Node first = next_[sentinel(v)];
  if (first == sentinel(v)) return std::nullopt;
  return edge_of(first);
}

std::vector<EdgeId> SortedAdjacency::list(Vertex v) const {
  std::vector<EdgeId> out;
  for (Node node = next_[sentinel(v)]; node != sentinel(v); node = next_[node])
    out.push_back(edge_of(node));
  return out;
}

std::optional<EdgeId> SortedAdjacency::next_edge(std::span<const Vertex> members) const {
  std::optional<EdgeId> best;
  for (Vertex v : members) {
    const auto candidate = head(v);
    if (candidate && (!best || ranks_.less(*candidate, *best))) best = candidate;
  }
  return best;
}

void SortedAdjacency::unlink(Node node) {
  next_[prev_[node]] = next_[node];
  prev_[next_[node]] = prev_[node];
}

void SortedAdjacency::relink(Node node) {
  next_[prev_[node]] = node;
  prev_[next_[node]] = node;
}

void SortedAdjacency::erase(EdgeId e) {
  if (e >= present_.size() || !present_[e])
    throw std::logic_error("SortedAdjacency::erase: edge " + std::to_string(e) + " is not present");
  unlink(2 * e);
  unlink(2 * e + 1);
  present_[e] = 0;
  journal_.push_back(e);
}

void SortedAdjacency::undo_journal() {
  while (!journal_.empty()) {
    const EdgeId e = journal_.back();
    journal_.pop_back();
    relink(2 * e + 1);
    relink(2 * e);
    present_[e] = 1;
  }
}

bool SortedAdjacency::operator==(const SortedAdjacency& other) const {
  return num_vertices_ == other.num_vertices_ && ranks_ == other.ranks_ &&
         edge_endpoints_ == other.edge_endpoints_ && prev_ == other.prev_ &&
         next_ == other.next_ && present_ == other.present_ && journal_ == other.journal_;
}

}  // namespace kec
