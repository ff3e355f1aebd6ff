#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "kec/graph.hpp"

namespace kec {

/// Comparison key of an edge under a rank assignment. Ordered by key first,
/// then by edge id, so distinct edges never compare equal.
struct RankKey {
  double key;
  EdgeId edge;

  auto operator<=>(const RankKey&) const = default;
};

/// Maps a uniform draw t in [0,1) to the key -ln(1-t)/w.
///
/// The key is a strictly increasing transform of the rank 1-(1-t)^(1/w):
/// -ln(1-rank) = -ln(1-t)/w. Under it, the edge holding the minimum key
/// over independent draws is distributed proportionally to weight. The
/// logarithmic form keeps full relative precision for large weights, where
/// the rank itself would underflow towards zero.
double sample_rank(Weight weight, double t);

/// Source of independent per-trial generators derived from one master seed.
class SeedStream {
 public:
  explicit SeedStream(std::uint64_t master_seed) : master_seed_(master_seed) {}

  std::uint64_t master_seed() const { return master_seed_; }

  /// Seed of the generator used for `trial`.
  std::uint64_t trial_seed(std::uint64_t trial) const;

  /// Independent child stream, e.g. one per recursion step or grid point.
  SeedStream derive(std::uint64_t tag) const;

 private:
  std::uint64_t master_seed_;
};

/// SplitMix64 finaliser.
std::uint64_t mix64(std::uint64_t x);

/// SplitMix64 generator; meets UniformRandomBitGenerator. Used for graph
/// generation, where a fixed, library-independent sequence per seed keeps
/// generated instances identical across standard libraries.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }

  /// Integer in [0, bound), bound > 0. Modulo bias is below bound / 2^64.
  std::uint64_t below(std::uint64_t bound) { return (*this)() % bound; }

 private:
  std::uint64_t state_;
};

class RankAssignment {
 public:
  RankAssignment() = default;
  RankAssignment(std::vector<double> keys, std::uint64_t seed, std::uint64_t trial)
      : keys_(std::move(keys)), seed_(seed), trial_(trial) {}

  RankKey key(EdgeId e) const { return {keys_[e], e}; }
  bool less(EdgeId a, EdgeId b) const { return key(a) < key(b); }

  std::size_t size() const { return keys_.size(); }
  const std::vector<double>& keys() const { return keys_; }
  std::uint64_t seed() const { return seed_; }
  std::uint64_t trial() const { return trial_; }

  bool operator==(const RankAssignment&) const = default;

 private:
  std::vector<double> keys_;
  std::uint64_t seed_ = 0;
  std::uint64_t trial_ = 0;
};

/// Key of edge `e` with weight `w` in the assignment whose trial seed is
/// `trial_seed`. Each key depends only on (trial seed, e, w), so a local
/// search can evaluate the keys of the edges it touches and skip the rest.
double edge_key(std::uint64_t trial_seed, EdgeId e, Weight w);

/// Independent key per edge for trial `trial` of `stream`. Deterministic in
/// (graph, master seed, trial); key(e) equals
/// edge_key(stream.trial_seed(trial), e, w(e)).
RankAssignment sample_assignment(const WeightedGraph& g, const SeedStream& stream,
                                 std::uint64_t trial);

/// Test oracle. True iff the minimum spanning tree under r has exactly one
/// edge crossing (s, V \ s) and that edge outranks every tree edge inside s.
/// Builds the full MST; throws std::invalid_argument if g is disconnected or
/// s is empty or all of V.
bool respects(const WeightedGraph& g, const VertexSet& s, const RankAssignment& r);

}  // namespace kec
