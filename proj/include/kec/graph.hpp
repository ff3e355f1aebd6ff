#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kec {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
/// Edge weights and cut values. Graph construction rejects inputs whose total
/// weight exceeds 2^63 - 1, so every cut value and weighted degree fits.
using Weight = std::uint64_t;

inline constexpr Weight kMaxTotalWeight = (Weight{1} << 63) - 1;

struct Edge {
  Vertex u;
  Vertex v;
  Weight w;

  Vertex other(Vertex x) const { return x == u ? v : u; }
  bool operator==(const Edge&) const = default;
};

struct Incidence {
  EdgeId edge;
  Vertex other;
};

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(std::vector<Vertex> members);

  bool contains(Vertex v) const;
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  Vertex front() const { return members_.front(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  const std::vector<Vertex>& members() const { return members_; }

  /// True when every member of this set is in `other` and other is larger.
  bool strict_subset_of(const VertexSet& other) const;

  auto operator<=>(const VertexSet&) const = default;

 private:
  std::vector<Vertex> members_;
};

struct Cut {
  VertexSet side;
  Weight value = 0;
};

/// Thrown by the edge-list reader; `line` is 1-based.
class GraphFormatError : public std::runtime_error {
 public:
  GraphFormatError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Immutable simple undirected graph with positive integer weights.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  /// Builds a simple graph. Parallel edges are merged by summing weights,
  /// keeping the position of the first occurrence. Throws
  /// std::invalid_argument on self-loops, zero weights, out-of-range ids or
  /// total weight above kMaxTotalWeight.
  WeightedGraph(std::size_t num_vertices, std::span<const Edge> edges);

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Incidence> neighbors(Vertex v) const { return adjacency_[v]; }

  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  Weight weighted_degree(Vertex v) const { return weighted_degree_[v]; }
  std::size_t max_degree() const;
  Weight max_weight() const;
  Weight total_weight() const { return total_weight_; }

  bool contains(Vertex v) const { return v < num_vertices(); }

  bool operator==(const WeightedGraph& other) const {
    return edges_ == other.edges_ && adjacency_.size() == other.adjacency_.size();
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::vector<Weight> weighted_degree_;
  Weight total_weight_ = 0;
};

/// A graph derived from a parent graph together with the map from its vertex
/// ids back to parent ids.
struct Subgraph {
  WeightedGraph graph;
  std::vector<Vertex> to_parent;

  VertexSet lift(const VertexSet& local) const;
};

/// Parses the edge-list document: first non-comment line "n m", then m lines
/// "u v w". Lines starting with '#' and blank lines are skipped.
WeightedGraph load_graph(std::string_view text);
WeightedGraph load_graph_file(const std::string& path);

/// Inverse of load_graph for a graph without comments.
std::string write_edge_list(const WeightedGraph& g);

/// Total weight of edges with exactly one endpoint in x. Requires
/// {} != x != V.
Weight cut_value(const WeightedGraph& g, const VertexSet& x);

/// Number of edges with at least one endpoint in x (unweighted).
std::size_t volume(const WeightedGraph& g, const VertexSet& x);

/// G with V \ x contracted into a single vertex. Members of x keep their
/// relative order and get ids 0..|x|-1; the contracted vertex gets id |x|
/// and maps to no parent vertex (its to_parent entry is the parent's
/// vertex count).
Subgraph contract_complement(const WeightedGraph& g, const VertexSet& x);

/// G[x], relabelled densely in ascending parent-id order.
Subgraph induced_subgraph(const WeightedGraph& g, const VertexSet& x);

/// V \ x.
VertexSet complement(const WeightedGraph& g, const VertexSet& x);

/// Connected component labels (0-based, in order of smallest member).
std::vector<std::uint32_t> connected_components(const WeightedGraph& g,
                                                std::size_t* count = nullptr);

}  // namespace kec
