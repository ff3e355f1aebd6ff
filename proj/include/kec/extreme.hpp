#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>

#include "kec/graph.hpp"
#include "kec/local_cut.hpp"
#include "kec/rank.hpp"

namespace kec {

inline constexpr std::size_t kDefaultExtremeCap = 20;

/// X is extreme when every strict non-empty subset Y has a strictly larger
/// cut than X. Checked exactly by enumerating all 2^|X| - 2 subsets in Gray
/// code order. X = V is allowed (its cut is 0). Throws std::length_error
/// when |X| exceeds `cap`.
bool is_extreme(const WeightedGraph& g, const VertexSet& x, std::size_t cap = kDefaultExtremeCap);

struct ExtremeSetCertificate {
  VertexSet set;
  Weight cut_value = 0;
  bool verified_by_brute_force = false;
};

/// Certificate for `set`, with the flag set iff is_extreme holds.
ExtremeSetCertificate certify_extreme(const WeightedGraph& g, const VertexSet& set,
                                      std::size_t cap = kDefaultExtremeCap);

struct MinimalExtremeResult {
  std::optional<VertexSet> set;
  /// Candidates that met every other condition but exceeded the cap.
  std::size_t skipped_over_cap = 0;
};

/// Smallest extreme set containing q.x within the query bounds, w.h.p.
///
/// Each trial grows X by minimum-rank expansion. While X is within bounds,
/// X replaces the best set S when w(delta(X)) < k, X is a strict subset of
/// S and X is extreme; the trial then stops. Extreme sets are laminar, so
/// those containing x form a chain and the strict-subset test keeps the
/// smallest one seen.
MinimalExtremeResult minimal_extreme_set(const WeightedGraph& g, const LocalCutQuery& q,
                                         const SeedStream& stream, std::uint64_t trials,
                                         std::size_t cap = kDefaultExtremeCap);

}  // namespace kec
