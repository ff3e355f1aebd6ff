#pragma once

#include <span>
#include <string>
#include <vector>

#include "kec/graph.hpp"
#include "kec/partition.hpp"
#include "kec/rank.hpp"

namespace kec {

struct BenchInstance {
  std::string name;
  WeightedGraph graph;
  Weight k = 1;
};

struct BenchRow {
  std::string instance;
  std::size_t n = 0;
  std::size_t m = 0;
  Weight k = 0;
  Algorithm algorithm = Algorithm::baseline;
  double wall_ms = 0;
  std::size_t mincut_calls = 0;
  std::size_t local_kcut_calls = 0;
  std::size_t kcut_runs = 0;
  std::size_t recursion_depth = 0;
  bool call_budget_ok = true;
  bool depth_bound_ok = true;
  bool verified = false;
  bool matches_baseline = false;
  std::size_t parts = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;

  /// Every row verified, agrees with the baseline and meets both counter
  /// bounds.
  bool all_ok() const;
};

/// Families: "path", "random", "lollipop", "planted". One instance per size.
std::vector<BenchInstance> bench_suite(const std::string& family, std::span<const std::size_t> sizes, Weight k,
                                       std::uint64_t seed);

/// Runs every algorithm on every instance. Timing discards one warmup run
/// when `warmup` is set; counters come from the timed run's trace.
BenchReport bench(std::span<const BenchInstance> instances, std::span<const Algorithm> algorithms,
                  const SeedStream& stream, bool warmup = true);

std::string to_csv(const BenchReport& report);

}  // namespace kec
