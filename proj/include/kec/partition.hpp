#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kec/graph.hpp"
#include "kec/rank.hpp"

namespace kec {

/// Maximal k-edge-connected partition. Parts are kept in canonical order
/// (ascending by smallest member) so partitions compare as sets of sets.
struct Partition {
  std::vector<VertexSet> parts;
  Weight k = 1;

  bool operator==(const Partition&) const = default;
};

Partition make_partition(std::vector<VertexSet> parts, Weight k);

/// Which local routine drives k_cut_partition.
enum class Variant { volume, cardinality, automatic };

enum class Algorithm { baseline, local_volume, local_cardinality, automatic };

const char* to_string(Algorithm a);
std::optional<Algorithm> parse_algorithm(const std::string& name);

struct ScheduleParams {
  Variant variant = Variant::volume;
  std::optional<std::uint64_t> nu;
  std::uint64_t sigma = 2;
  std::uint64_t trials = 1;
};

/// Volume: nu = max(2, ceil((m ln n)^(1/4))), sigma = nu.
/// Cardinality: sigma = max(2, ceil((n ln^2 n)^(1/5))), nu unbounded.
/// Automatic picks volume when m^(3/4) <= n^(4/5).
/// trials = ceil(c sigma(sigma-1)/2 ln n), at least 1.
ScheduleParams parameter_schedule(std::size_t m, std::size_t n, Variant variant, double c = 2.0);

struct TraceEvent {
  enum class Kind { local_set_removed, mincut_split, part_finalized };
  Kind kind;
  std::size_t depth = 0;
  VertexSet vertices;  // ids of the top-level graph
  Weight cut_value = 0;
};

const char* to_string(TraceEvent::Kind kind);

/// Counters of one k_cut_partition invocation, recursion included.
struct KCutRunStats {
  Variant variant = Variant::volume;
  std::size_t input_vertices = 0;
  std::size_t input_edges = 0;
  std::optional<std::uint64_t> nu;
  std::uint64_t sigma = 0;
  std::uint64_t trials = 0;
  std::size_t half_threshold = 0;
  std::size_t local_kcut_calls = 0;
  std::size_t mincut_calls = 0;
  std::size_t depth = 0;

  /// #LocalKCut calls <= m + n.
  bool within_call_budget() const;
  /// depth <= ceil(m/nu) + 1 (volume) or ceil(n/sigma) + 1 (cardinality).
  bool within_depth_bound() const;
  std::size_t depth_bound() const;
};

struct PartitionTrace {
  std::vector<TraceEvent> events;
  std::vector<KCutRunStats> runs;
  std::size_t mincut_calls = 0;
  std::size_t local_kcut_calls = 0;
  /// Deepest recursion level reached: the rec_mincut call tree for the
  /// baseline, k_cut_partition recursion for the local algorithms.
  std::size_t max_depth = 0;

  /// Partition formed by the part_finalized events.
  Partition replay(Weight k) const;
};

/// Baseline: split along a global minimum cut while it is below k.
Partition rec_mincut(const WeightedGraph& g, Weight k, PartitionTrace* trace = nullptr);

struct EmittedSet {
  VertexSet vertices;
  /// True when the set was certified k-edge-connected by a mincut and needs
  /// no further refinement.
  bool k_connected = false;
};

struct KCutOptions {
  Variant variant = Variant::volume;  // volume or cardinality
  std::optional<std::uint64_t> nu;
  std::uint64_t sigma = 2;
  std::uint64_t trials = 1;
  /// Volume variant: bound on internal edge count of any set emitted
  /// without certification. Cardinality variant: bound on its vertex count.
  std::size_t half_threshold = 0;
};

/// Coarse partition whose every part is a union of maximal k-edge-connected
/// sets. Repeatedly removes local sets found from the candidate list (FIFO),
/// then splits the residual graph along a global minimum cut, recursing on
/// the side above the half threshold.
std::vector<EmittedSet> k_cut_partition(const WeightedGraph& g, Weight k, const KCutOptions& options,
                                        const VertexSet& candidates, const SeedStream& stream,
                                        PartitionTrace* trace = nullptr);

struct PartitionOptions {
  double trials_constant = 2.0;
  /// Replaces the scheduled trial count when set.
  std::optional<std::uint64_t> trials;
};

/// k_cut_partition at each level with per-level parameters, recursing into
/// every uncertified set. Local sets are capped at half the level's volume
/// (volume variant) or vertex count (cardinality variant).
Partition maximal_partition(const WeightedGraph& g, Weight k, Variant variant,
                            const SeedStream& stream, PartitionTrace* trace = nullptr,
                            const PartitionOptions& options = {});

/// Dispatches to rec_mincut or maximal_partition.
Partition compute_partition(const WeightedGraph& g, Weight k, Algorithm algorithm,
                            const SeedStream& stream, PartitionTrace* trace = nullptr,
                            const PartitionOptions& options = {});

struct VerifyReport {
  enum class Failure { none, not_a_cover, not_k_connected, not_maximal };
  Failure failure = Failure::none;
  std::string detail;

  bool ok() const { return failure == Failure::none; }
};

/// Checks (a) the parts form a disjoint cover of V, (b) each part induces
/// a k-edge-connected subgraph, (c) no two adjacent parts have a
/// k-edge-connected union, and no larger union is k-edge-connected either
/// (rec_mincut on the graph with every part contracted yields singletons).
VerifyReport verify_partition(const WeightedGraph& g, const Partition& p, Weight k);

}  // namespace kec
