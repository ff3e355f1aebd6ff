#include "kec/partition.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <stdexcept>
#include <variant>

#include "kec/local_cut.hpp"
#include "kec/mincut.hpp"

namespace kec {

Partition make_partition(std::vector<VertexSet> parts, Weight k) {
  std::sort(parts.begin(), parts.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
  return Partition{std::move(parts), k};
}

const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::baseline: return "baseline";
    case Algorithm::local_volume: return "local-volume";
    case Algorithm::local_cardinality: return "local-cardinality";
    case Algorithm::automatic: return "auto";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(const std::string& name) {
  for (Algorithm a : {Algorithm::baseline, Algorithm::local_volume, Algorithm::local_cardinality,
                      Algorithm::automatic})
    if (name == to_string(a)) return a;
  return std::nullopt;
}

const char* to_string(TraceEvent::Kind kind) {
  switch (kind) {
    case TraceEvent::Kind::local_set_removed: return "local_set_removed";
    case TraceEvent::Kind::mincut_split: return "mincut_split";
    case TraceEvent::Kind::part_finalized: return "part_finalized";
  }
  return "?";
}

ScheduleParams parameter_schedule(std::size_t m, std::size_t n, Variant variant, double c) {
  if (m < 1) m = 1;
  if (n < 1) n = 1;
  const double ln_n = std::log(static_cast<double>(n));
  if (variant == Variant::automatic) {
    variant = std::pow(static_cast<double>(m), 0.75) <= std::pow(static_cast<double>(n), 0.8)
                  ? Variant::volume
                  : Variant::cardinality;
  }
  ScheduleParams params;
  params.variant = variant;
  if (variant == Variant::volume) {
    const double nu = std::ceil(std::pow(static_cast<double>(m) * ln_n, 0.25));
    params.nu = std::max<std::uint64_t>(2, static_cast<std::uint64_t>(nu));
    params.sigma = *params.nu;
  } else {
    const double sigma = std::ceil(std::pow(static_cast<double>(n) * ln_n * ln_n, 0.2));
    params.sigma = std::max<std::uint64_t>(2, static_cast<std::uint64_t>(sigma));
  }
  params.trials = default_trials(params.sigma, n, c);
  return params;
}

bool KCutRunStats::within_call_budget() const {
  return local_kcut_calls <= input_edges + input_vertices;
}

std::size_t KCutRunStats::depth_bound() const {
  const auto ceil_div = [](std::size_t a, std::uint64_t b) {
    return static_cast<std::size_t>((a + b - 1) / b);
  };
  if (variant == Variant::volume) return ceil_div(input_edges, nu.value_or(1)) + 1;
  return ceil_div(input_vertices, std::max<std::uint64_t>(sigma, 1)) + 1;
}

bool KCutRunStats::within_depth_bound() const { return depth <= depth_bound(); }

Partition PartitionTrace::replay(Weight k) const {
  std::vector<VertexSet> parts;
  for (const TraceEvent& e : events)
    if (e.kind == TraceEvent::Kind::part_finalized) parts.push_back(e.vertices);
  return make_partition(std::move(parts), k);
}

namespace {

VertexSet lift(std::span<const Vertex> to_original, const VertexSet& local) {
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(to_original[v]);
  return VertexSet(std::move(out));
}

VertexSet all_vertices(std::size_t n) {
  std::vector<Vertex> v(n);
  for (Vertex i = 0; i < n; ++i) v[i] = i;
  return VertexSet(std::move(v));
}

void record(PartitionTrace* trace, TraceEvent::Kind kind, std::size_t depth, VertexSet vertices,
            Weight cut = 0) {
  if (!trace) return;
  trace->events.push_back({kind, depth, std::move(vertices), cut});
}

std::size_t internal_edges(const WeightedGraph& g, const std::vector<char>& in) {
  std::size_t count = 0;
  for (const Edge& e : g.edges())
    if (in[e.u] && in[e.v]) ++count;
  return count;
}

// Residual graph of k_cut_partition: a fresh graph plus maps to and from the
// ids of the invocation's input graph.
struct Residual {
  static constexpr Vertex kAbsent = std::numeric_limits<Vertex>::max();

  WeightedGraph graph;
  std::vector<Vertex> to_input;
  std::vector<Vertex> from_input;

  Residual(const WeightedGraph& g) : graph(g), to_input(g.num_vertices()), from_input(g.num_vertices()) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) to_input[v] = from_input[v] = v;
  }

  // Keeps only the vertices in `keep` (ids of the residual graph).
  void restrict_to(const VertexSet& keep) {
    Subgraph sub = induced_subgraph(graph, keep);
    for (Vertex v : to_input) from_input[v] = kAbsent;
    std::vector<Vertex> mapped(sub.to_parent.size());
    for (Vertex i = 0; i < sub.to_parent.size(); ++i) {
      mapped[i] = to_input[sub.to_parent[i]];
      from_input[mapped[i]] = i;
    }
    to_input = std::move(mapped);
    graph = std::move(sub.graph);
  }

  void clear() {
    for (Vertex v : to_input) from_input[v] = kAbsent;
    to_input.clear();
    graph = WeightedGraph();
  }
};

std::vector<EmittedSet> k_cut_partition_impl(const WeightedGraph& g, Weight k, const KCutOptions& options,
                                             const VertexSet& candidates, const SeedStream& stream,
                                             PartitionTrace* trace, std::span<const Vertex> to_original,
                                             std::size_t base_depth) {
  if (options.variant == Variant::automatic)
    throw std::invalid_argument("k_cut_partition needs a concrete variant");
  const bool volume_variant = options.variant == Variant::volume;

  KCutRunStats stats;
  stats.variant = options.variant;
  stats.input_vertices = g.num_vertices();
  stats.input_edges = g.num_edges();
  stats.nu = volume_variant ? options.nu : std::nullopt;
  stats.sigma = options.sigma;
  stats.trials = options.trials;
  stats.half_threshold = options.half_threshold;

  std::vector<EmittedSet> out;
  const auto original = [&](const VertexSet& input_ids) { return lift(to_original, input_ids); };
  const auto emit = [&](VertexSet input_ids, bool certified) {
    if (certified) record(trace, TraceEvent::Kind::part_finalized, base_depth + stats.depth, original(input_ids));
    out.push_back({std::move(input_ids), certified});
  };

  Residual residual(g);
  std::deque<Vertex> pending;
  std::vector<char> queued(g.num_vertices(), 0);
  for (Vertex v : candidates) {
    if (!g.contains(v)) throw std::out_of_range("candidate vertex not in graph");
    pending.push_back(v);
    queued[v] = 1;
  }

  // Cardinality variant: one set of structures over g for the whole run.
  // Vertices leaving the residual graph have their edges erased for good,
  // so the structures always describe the residual graph.
  std::vector<SortedAdjacency> structures;
  std::vector<Weight> residual_degree;
  if (!volume_variant) {
    structures = build_structures(g, stream.derive(~std::uint64_t{0}), options.trials);
    residual_degree.resize(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) residual_degree[v] = g.weighted_degree(v);
  }
  const auto drop = [&](const VertexSet& input_ids) {
    if (volume_variant) return;
    for (Vertex v : input_ids) {
      for (const Incidence& inc : g.neighbors(v)) {
        if (!structures.front().present(inc.edge)) continue;
        for (SortedAdjacency& sa : structures) sa.erase(inc.edge);
        residual_degree[v] -= g.edge(inc.edge).w;
        residual_degree[inc.other] -= g.edge(inc.edge).w;
      }
    }
    for (SortedAdjacency& sa : structures) sa.commit_journal();
  };

  while (true) {
    ++stats.depth;

    while (!pending.empty() && residual.graph.num_vertices() > 0) {
      const Vertex x = pending.front();
      pending.pop_front();
      queued[x] = 0;
      const Vertex local_x = residual.from_input[x];
      if (local_x == Residual::kAbsent) continue;

      LocalCutOutcome outcome;
      if (volume_variant) {
        const LocalCutQuery query{local_x, options.nu, options.sigma, k};
        outcome = local_kcut_volume(residual.graph, query, stream.derive(stats.local_kcut_calls),
                                    options.trials);
      } else {
        const LocalCutQuery query{x, std::nullopt, options.sigma, k};
        const ResidualView view{residual_degree, residual.graph.num_vertices()};
        outcome = local_kcut_cardinality(g, structures, query, &view);
      }
      ++stats.local_kcut_calls;

      const auto* found = std::get_if<LocalCutFound>(&outcome);
      if (!found) continue;
      // Residual ids of the found set.
      VertexSet local_set = found->set;
      if (!volume_variant) {
        std::vector<Vertex> ids;
        for (Vertex v : found->set) ids.push_back(residual.from_input[v]);
        local_set = VertexSet(std::move(ids));
      }

      std::vector<Vertex> removed;
      std::vector<char> in_set(residual.graph.num_vertices(), 0);
      for (Vertex v : local_set) in_set[v] = 1;
      for (Vertex v : local_set) {
        removed.push_back(residual.to_input[v]);
        for (const Incidence& inc : residual.graph.neighbors(v)) {
          const Vertex neighbor = residual.to_input[inc.other];
          if (!in_set[inc.other] && !queued[neighbor]) {
            pending.push_back(neighbor);
            queued[neighbor] = 1;
          }
        }
      }
      VertexSet removed_set(std::move(removed));
      record(trace, TraceEvent::Kind::local_set_removed, base_depth + stats.depth, original(removed_set),
             found->cut_value);
      drop(removed_set);
      emit(removed_set, false);

      if (local_set.size() == residual.graph.num_vertices()) {
        residual.clear();
      } else {
        residual.restrict_to(complement(residual.graph, local_set));
      }
    }

    const std::size_t n_hat = residual.graph.num_vertices();
    if (n_hat == 0) break;
    const VertexSet residual_input_ids(residual.to_input);
    if (n_hat == 1) {
      emit(residual_input_ids, true);
      break;
    }

    const MincutResult cut = global_mincut(residual.graph);
    ++stats.mincut_calls;
    if (cut.lambda >= k) {
      emit(residual_input_ids, true);
      break;
    }

    const VertexSet& a = cut.cut.side;
    const VertexSet b = complement(residual.graph, a);
    record(trace, TraceEvent::Kind::mincut_split, base_depth + stats.depth,
           original(lift(residual.to_input, a)), cut.lambda);

    std::vector<char> in_a(n_hat, 0);
    for (Vertex v : a) in_a[v] = 1;
    std::vector<char> in_b(n_hat, 0);
    for (Vertex v : b) in_b[v] = 1;
    const auto measure = [&](const VertexSet& side, const std::vector<char>& in) {
      return volume_variant ? internal_edges(residual.graph, in) : side.size();
    };

    const VertexSet* larger = nullptr;
    const VertexSet* smaller = nullptr;
    if (measure(a, in_a) > options.half_threshold) {
      larger = &a;
      smaller = &b;
    } else if (measure(b, in_b) > options.half_threshold) {
      larger = &b;
      smaller = &a;
    }
    if (!larger) {
      emit(lift(residual.to_input, a), false);
      emit(lift(residual.to_input, b), false);
      break;
    }

    const VertexSet smaller_input = lift(residual.to_input, *smaller);
    drop(smaller_input);
    emit(smaller_input, false);
    const std::vector<char>& in_larger = larger == &a ? in_a : in_b;
    for (const Edge& e : residual.graph.edges()) {
      if (in_larger[e.u] == in_larger[e.v]) continue;
      const Vertex endpoint = residual.to_input[in_larger[e.u] ? e.u : e.v];
      if (!queued[endpoint]) {
        pending.push_back(endpoint);
        queued[endpoint] = 1;
      }
    }
    residual.restrict_to(*larger);
  }

  if (trace) {
    trace->mincut_calls += stats.mincut_calls;
    trace->local_kcut_calls += stats.local_kcut_calls;
    trace->max_depth = std::max(trace->max_depth, stats.depth);
    trace->runs.push_back(stats);
  }
  return out;
}

}  // namespace

Partition rec_mincut(const WeightedGraph& g, Weight k, PartitionTrace* trace) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  std::vector<VertexSet> parts;
  struct Item {
    Subgraph sub;
    std::size_t depth;
  };
  std::vector<Item> stack;
  if (g.num_vertices() == 0) return make_partition({}, k);
  stack.push_back({induced_subgraph(g, all_vertices(g.num_vertices())), 1});

  while (!stack.empty()) {
    Item item = std::move(stack.back());
    stack.pop_back();
    const WeightedGraph& h = item.sub.graph;
    const VertexSet everything = lift(item.sub.to_parent, all_vertices(h.num_vertices()));
    if (trace) trace->max_depth = std::max(trace->max_depth, item.depth);
    if (h.num_vertices() == 1) {
      record(trace, TraceEvent::Kind::part_finalized, item.depth, everything);
      parts.push_back(everything);
      continue;
    }
    const MincutResult cut = global_mincut(h);
    if (trace) ++trace->mincut_calls;
    if (cut.lambda >= k) {
      record(trace, TraceEvent::Kind::part_finalized, item.depth, everything);
      parts.push_back(everything);
      continue;
    }
    record(trace, TraceEvent::Kind::mincut_split, item.depth, lift(item.sub.to_parent, cut.cut.side),
           cut.lambda);
    for (const VertexSet& side : {cut.cut.side, complement(h, cut.cut.side)}) {
      Subgraph child = induced_subgraph(h, side);
      for (Vertex& v : child.to_parent) v = item.sub.to_parent[v];
      stack.push_back({std::move(child), item.depth + 1});
    }
  }
  return make_partition(std::move(parts), k);
}

std::vector<EmittedSet> k_cut_partition(const WeightedGraph& g, Weight k, const KCutOptions& options,
                                        const VertexSet& candidates, const SeedStream& stream,
                                        PartitionTrace* trace) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  std::vector<Vertex> identity(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) identity[v] = v;
  if (g.num_vertices() == 0) return {};
  return k_cut_partition_impl(g, k, options, candidates, stream, trace, identity, 0);
}

Partition maximal_partition(const WeightedGraph& g, Weight k, Variant variant, const SeedStream& stream,
                            PartitionTrace* trace, const PartitionOptions& options) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  std::vector<VertexSet> parts;
  if (g.num_vertices() == 0) return make_partition({}, k);

  struct Item {
    Subgraph sub;
    std::size_t depth;
  };
  std::vector<Item> stack;
  stack.push_back({induced_subgraph(g, all_vertices(g.num_vertices())), 0});
  std::uint64_t level_index = 0;

  while (!stack.empty()) {
    Item item = std::move(stack.back());
    stack.pop_back();
    const WeightedGraph& h = item.sub.graph;
    const std::size_t n0 = h.num_vertices();
    const std::size_t m0 = h.num_edges();

    if (n0 == 1 || m0 == 0) {
      for (Vertex v : item.sub.to_parent) {
        record(trace, TraceEvent::Kind::part_finalized, item.depth, VertexSet{v});
        parts.push_back(VertexSet{v});
      }
      continue;
    }

    const ScheduleParams schedule = parameter_schedule(m0, n0, variant, options.trials_constant);
    KCutOptions kcut;
    kcut.variant = schedule.variant;
    if (schedule.variant == Variant::volume) {
      kcut.half_threshold = (m0 + 1) / 2;
      kcut.nu = std::min<std::uint64_t>(*schedule.nu, std::max<std::size_t>(1, kcut.half_threshold));
      kcut.sigma = *kcut.nu;
    } else {
      kcut.half_threshold = n0 / 2;
      kcut.sigma = std::min<std::uint64_t>(schedule.sigma, n0 / 2 + 1);
    }
    kcut.trials = options.trials.value_or(default_trials(kcut.sigma, n0, options.trials_constant));

    const auto emitted = k_cut_partition_impl(h, k, kcut, all_vertices(n0), stream.derive(level_index++),
                                              trace, item.sub.to_parent, item.depth);
    for (const EmittedSet& set : emitted) {
      if (set.k_connected) {
        parts.push_back(lift(item.sub.to_parent, set.vertices));
        continue;
      }
      Subgraph child = induced_subgraph(h, set.vertices);
      for (Vertex& v : child.to_parent) v = item.sub.to_parent[v];
      stack.push_back({std::move(child), item.depth + 1});
    }
  }
  return make_partition(std::move(parts), k);
}

Partition compute_partition(const WeightedGraph& g, Weight k, Algorithm algorithm, const SeedStream& stream,
                            PartitionTrace* trace, const PartitionOptions& options) {
  switch (algorithm) {
    case Algorithm::baseline: return rec_mincut(g, k, trace);
    case Algorithm::local_volume: return maximal_partition(g, k, Variant::volume, stream, trace, options);
    case Algorithm::local_cardinality:
      return maximal_partition(g, k, Variant::cardinality, stream, trace, options);
    case Algorithm::automatic: return maximal_partition(g, k, Variant::automatic, stream, trace, options);
  }
  throw std::invalid_argument("unknown algorithm");
}

VerifyReport verify_partition(const WeightedGraph& g, const Partition& p, Weight k) {
  using Failure = VerifyReport::Failure;
  const std::size_t n = g.num_vertices();
  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> owner(n, kNone);
  for (std::uint32_t i = 0; i < p.parts.size(); ++i) {
    if (p.parts[i].empty()) return {Failure::not_a_cover, "part " + std::to_string(i) + " is empty"};
    for (Vertex v : p.parts[i]) {
      if (v >= n) return {Failure::not_a_cover, "vertex " + std::to_string(v) + " is not in the graph"};
      if (owner[v] != kNone)
        return {Failure::not_a_cover, "vertex " + std::to_string(v) + " appears in two parts"};
      owner[v] = i;
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (owner[v] == kNone) return {Failure::not_a_cover, "vertex " + std::to_string(v) + " is uncovered"};

  for (std::uint32_t i = 0; i < p.parts.size(); ++i) {
    if (!mincut_atleast(induced_subgraph(g, p.parts[i]).graph, k))
      return {Failure::not_k_connected, "part " + std::to_string(i) + " has a cut below k"};
  }

  // Quotient graph: one vertex per part, crossing weights summed.
  std::vector<Edge> quotient_edges;
  std::map<std::pair<std::uint32_t, std::uint32_t>, bool> adjacent_pairs;
  for (const Edge& e : g.edges()) {
    const auto a = owner[e.u];
    const auto b = owner[e.v];
    if (a == b) continue;
    quotient_edges.push_back({a, b, e.w});
    adjacent_pairs[{std::min(a, b), std::max(a, b)}] = true;
  }
  for (const auto& [pair, unused] : adjacent_pairs) {
    std::vector<Vertex> joined(p.parts[pair.first].begin(), p.parts[pair.first].end());
    joined.insert(joined.end(), p.parts[pair.second].begin(), p.parts[pair.second].end());
    if (mincut_atleast(induced_subgraph(g, VertexSet(std::move(joined))).graph, k))
      return {Failure::not_maximal, "parts " + std::to_string(pair.first) + " and " +
                                        std::to_string(pair.second) + " form a k-edge-connected union"};
  }
  const WeightedGraph quotient(p.parts.size(), quotient_edges);
  const Partition merged = rec_mincut(quotient, k);
  for (const VertexSet& group : merged.parts)
    if (group.size() > 1)
      return {Failure::not_maximal, "a union of " + std::to_string(group.size()) +
                                        " parts is k-edge-connected"};
  return {};
}

}  // namespace kec
