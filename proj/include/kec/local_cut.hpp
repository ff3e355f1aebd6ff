#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "kec/graph.hpp"
#include "kec/rank.hpp"
#include "kec/sorted_adjacency.hpp"

namespace kec {

/// Search for a set X, a proper subset of V, with x in X, vol(X) < nu (when bounded), |X| < sigma
/// and w(delta(X)) < k.
struct LocalCutQuery {
  Vertex x = 0;
  std::optional<std::uint64_t> nu;  // nullopt: no volume bound
  std::uint64_t sigma = 1;
  Weight k = 1;
};

struct LocalCutFound {
  VertexSet set;
  Weight cut_value = 0;

  bool operator==(const LocalCutFound&) const = default;
};

/// Amplified answer: no (x,nu,sigma,k)-extreme set exists (w.h.p.).
struct NoExtremeSet {
  bool operator==(const NoExtremeSet&) const = default;
};

using LocalCutOutcome = std::variant<LocalCutFound, NoExtremeSet>;

/// Does `found` satisfy every bound of q against g?
bool satisfies_query(const WeightedGraph& g, const LocalCutQuery& q, const LocalCutFound& found);

/// ceil(c * sigma(sigma-1)/2 * ln n), at least 1.
std::uint64_t default_trials(std::uint64_t sigma, std::size_t n, double c = 2.0);

/// Reusable per-vertex scratch for repeated local growth on one graph. Marks
/// are epoch-stamped so a reset costs O(1).
class LocalScratch {
 public:
  explicit LocalScratch(std::size_t n = 0) : stamp_(n, 0) {}

  void begin(std::size_t n);
  void mark(Vertex v) { stamp_[v] = epoch_; }
  bool marked(Vertex v) const { return stamp_[v] == epoch_; }

 private:
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
};

/// One growth run under a fixed rank assignment: absorb the far endpoint of
/// the minimum-key cut edge until the cut drops below k or a bound is hit.
/// Cut edges live in an ordered set keyed by rank. nullopt is a single
/// trial's failure. A result is returned only if it satisfies every bound.
std::optional<LocalCutFound> local_prim_volume(const WeightedGraph& g, const LocalCutQuery& q,
                                               const RankAssignment& r,
                                               LocalScratch* scratch = nullptr);

/// local_prim_volume under `trials` assignments drawn from `stream`; first
/// hit wins.
LocalCutOutcome local_kcut_volume(const WeightedGraph& g, const LocalCutQuery& q,
                                  const SeedStream& stream, std::uint64_t trials);

/// A subgraph of g obtained by deleting vertices, represented by structures
/// from which every edge at a deleted vertex has been erased for good.
/// Cut values and the proper-subset test then refer to this subgraph.
struct ResidualView {
  std::span<const Weight> weighted_degree;  // indexed by g's vertex ids
  std::size_t num_vertices = 0;
};

/// Same growth with no volume bound, driven by a sorted adjacency
/// structure. Edges that become internal are erased from `sa`, and the
/// journal is undone before returning, so `sa` is left as it was found.
/// Cost O(|X|) per absorbed vertex. `journal_length`, when given, receives
/// the number of erasures made before the undo.
std::optional<LocalCutFound> local_prim_cardinality(const WeightedGraph& g, SortedAdjacency& sa,
                                                    const LocalCutQuery& q,
                                                    std::size_t* journal_length = nullptr,
                                                    const ResidualView* residual = nullptr);

/// local_prim_cardinality over each prepared structure in turn.
LocalCutOutcome local_kcut_cardinality(const WeightedGraph& g,
                                       std::span<SortedAdjacency> structures,
                                       const LocalCutQuery& q,
                                       const ResidualView* residual = nullptr);

/// Builds one structure per trial from `stream`.
std::vector<SortedAdjacency> build_structures(const WeightedGraph& g, const SeedStream& stream,
                                              std::uint64_t trials);

}  // namespace kec
