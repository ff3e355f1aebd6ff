#include "kec/bench.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "kec/generate.hpp"

namespace kec {

bool BenchReport::all_ok() const {
  for (const BenchRow& row : rows)
    if (!row.verified || !row.matches_baseline || !row.call_budget_ok || !row.depth_bound_ok) return false;
  return true;
}

std::vector<BenchInstance> bench_suite(const std::string& family, std::span<const std::size_t> sizes, Weight k,
                                       std::uint64_t seed) {
  std::vector<BenchInstance> out;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const std::size_t n = sizes[i];
    const std::string name = family + "-" + std::to_string(n);
    const std::uint64_t instance_seed = mix64(seed + i);
    if (family == "path") {
      out.push_back({name, path_graph(n), k});
    } else if (family == "random") {
      out.push_back({name, random_weighted_graph(n, 2 * n, 5, instance_seed), k});
    } else if (family == "lollipop") {
      const std::size_t clique = std::max<std::size_t>(2, n / 8);
      out.push_back({name, lollipop(n - clique, clique), k});
    } else if (family == "planted") {
      out.push_back({name, planted_extreme(n - n / 4, std::max<std::size_t>(2, n / 4), instance_seed).graph, k});
    } else {
      throw std::invalid_argument("unknown bench family '" + family + "'");
    }
  }
  return out;
}

BenchReport bench(std::span<const BenchInstance> instances, std::span<const Algorithm> algorithms,
                  const SeedStream& stream, bool warmup) {
  BenchReport report;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const BenchInstance& instance = instances[i];
    const Partition reference = rec_mincut(instance.graph, instance.k);
    for (Algorithm algorithm : algorithms) {
      const SeedStream row_stream = stream.derive(i);
      if (warmup) compute_partition(instance.graph, instance.k, algorithm, row_stream);

      PartitionTrace trace;
      const auto start = std::chrono::steady_clock::now();
      const Partition p = compute_partition(instance.graph, instance.k, algorithm, row_stream, &trace);
      const auto stop = std::chrono::steady_clock::now();

      BenchRow row;
      row.instance = instance.name;
      row.n = instance.graph.num_vertices();
      row.m = instance.graph.num_edges();
      row.k = instance.k;
      row.algorithm = algorithm;
      row.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
      row.mincut_calls = trace.mincut_calls;
      row.local_kcut_calls = trace.local_kcut_calls;
      row.kcut_runs = trace.runs.size();
      row.recursion_depth = trace.max_depth;
      for (const KCutRunStats& run : trace.runs) {
        row.call_budget_ok = row.call_budget_ok && run.within_call_budget();
        row.depth_bound_ok = row.depth_bound_ok && run.within_depth_bound();
      }
      row.verified = verify_partition(instance.graph, p, instance.k).ok();
      row.matches_baseline = p == reference;
      row.parts = p.parts.size();
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

std::string to_csv(const BenchReport& report) {
  std::ostringstream out;
  out << "instance,n,m,k,algo,wall_ms,mincut_calls,localkcut_calls,kcut_runs,recursion_depth,"
         "call_budget_ok,depth_bound_ok,verified,matches_baseline,parts\n";
  for (const BenchRow& r : report.rows) {
    out << r.instance << ',' << r.n << ',' << r.m << ',' << r.k << ',' << to_string(r.algorithm) << ','
        << r.wall_ms << ',' << r.mincut_calls << ',' << r.local_kcut_calls << ',' << r.kcut_runs << ','
        << r.recursion_depth << ',' << r.call_budget_ok << ',' << r.depth_bound_ok << ',' << r.verified
        << ',' << r.matches_baseline << ',' << r.parts << '\n';
  }
  return out.str();
}

}  // namespace kec
