#pragma once

#include <vector>

#include "kec/graph.hpp"
#include "kec/partition.hpp"
#include "kec/rank.hpp"

namespace kec {

/// lower <= strength < upper, both on the integer grid.
struct StrengthBounds {
  Weight lower = 0;
  Weight upper = 0;

  bool operator==(const StrengthBounds&) const = default;
};

struct StrengthEstimates {
  std::vector<StrengthBounds> edges;  // indexed by edge id
  double epsilon = 0;
  /// Grid values of k at which a partition was computed, ascending.
  std::vector<Weight> grid;
};

/// Distinct values ceil((1+eps)^j), j >= 0, ascending, up to and including
/// the first value above `limit`. Throws std::invalid_argument if eps <= 0.
std::vector<Weight> strength_grid(double epsilon, Weight limit);

/// Sweeps k over strength_grid(eps, (n-1)W), computing one maximal
/// partition per grid point, and stops once every edge has been separated.
/// lower is the largest grid k keeping the endpoints together, upper the
/// smallest separating them. Consecutive grid values a < b satisfy
/// b <= (1+eps)a + 1, so upper <= (1+eps)lower + 1.
StrengthEstimates approx_strengths(const WeightedGraph& g, double epsilon, const SeedStream& stream,
                                   Algorithm algorithm = Algorithm::automatic);

/// Exact strength of every edge: the largest integer k whose rec_mincut
/// partition keeps both endpoints together, found by binary search over
/// [w(e), (n-1)W].
std::vector<Weight> exact_strengths(const WeightedGraph& g);

}  // namespace kec
