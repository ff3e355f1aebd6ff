#pragma once

#include "kec/graph.hpp"

namespace kec {

struct MincutResult {
  Cut cut;
  Weight lambda = 0;
};

/// Global minimum cut by maximum-adjacency orderings (Stoer-Wagner).
/// Deterministic. A disconnected graph yields value 0 with the connected
/// component of vertex 0 as the side. Throws std::invalid_argument when the
/// graph has fewer than two vertices.
MincutResult global_mincut(const WeightedGraph& g);

/// True iff g is k-edge-connected; graphs with at most one vertex are.
bool mincut_atleast(const WeightedGraph& g, Weight k);

}  // namespace kec
