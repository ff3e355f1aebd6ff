#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "kec/graph.hpp"
#include "kec/rank.hpp"

namespace kec {

/// Per-vertex incidence lists kept sorted by rank key, supporting O(1)
/// edge deletion and journaled undo.
///
/// Each edge owns two list nodes, one in each endpoint's list. Lists are
/// circular and doubly linked around a per-vertex sentinel. Deletion unlinks
/// both nodes but leaves the nodes' own links untouched, so replaying the
/// journal backwards relinks them exactly where they were.
class SortedAdjacency {
 public:
  SortedAdjacency() = default;
  SortedAdjacency(const WeightedGraph& g, RankAssignment ranks);

  std::size_t num_vertices() const { return num_vertices_; }
  const RankAssignment& ranks() const { return ranks_; }

  /// Edge id joining u and v if it is present (exists and not deleted).
  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;
  bool present(EdgeId e) const { return present_[e] != 0; }

  /// Minimum-key present edge at v.
  std::optional<EdgeId> head(Vertex v) const;

  /// Present edges at v in ascending key order.
  std::vector<EdgeId> list(Vertex v) const;

  /// Minimum-key present edge over the heads of the lists of `members`.
  std::optional<EdgeId> next_edge(std::span<const Vertex> members) const;

  /// Removes a present edge from both endpoint lists and journals it.
  /// Throws std::logic_error if the edge is absent.
  void erase(EdgeId e);

  /// Restores every journaled deletion, most recent first.
  void undo_journal();
  /// Makes every journaled deletion permanent.
  void commit_journal() { journal_.clear(); }
  std::size_t journal_size() const { return journal_.size(); }

  /// Structural equality: same links, same presence, same journal.
  bool operator==(const SortedAdjacency& other) const;

 private:
  using Node = std::uint32_t;

  Node sentinel(Vertex v) const { return static_cast<Node>(2 * edge_endpoints_.size() + v); }
  static EdgeId edge_of(Node node) { return node / 2; }
  void unlink(Node node);
  void relink(Node node);

  std::size_t num_vertices_ = 0;
  RankAssignment ranks_;
  std::vector<std::pair<Vertex, Vertex>> edge_endpoints_;
  std::vector<Node> prev_;
  std::vector<Node> next_;
  std::vector<char> present_;
  std::unordered_map<std::uint64_t, EdgeId> pair_index_;
  std::vector<EdgeId> journal_;
};

}  // namespace kec
