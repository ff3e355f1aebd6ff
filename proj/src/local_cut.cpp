#include "kec/local_cut.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "growth.hpp"

namespace kec {

bool satisfies_query(const WeightedGraph& g, const LocalCutQuery& q, const LocalCutFound& found) {
  const VertexSet& s = found.set;
  if (s.empty() || s.size() >= g.num_vertices() || !s.contains(q.x) || s.size() >= q.sigma) return false;
  if (q.nu && volume(g, s) >= *q.nu) return false;
  const Weight actual = cut_value(g, s);
  return actual == found.cut_value && actual < q.k;
}

std::uint64_t default_trials(std::uint64_t sigma, std::size_t n, double c) {
  const double pairs = static_cast<double>(sigma) * static_cast<double>(sigma - (sigma > 0)) / 2.0;
  const double log_n = n > 1 ? std::log(static_cast<double>(n)) : 0.0;
  const double trials = std::ceil(c * pairs * log_n);
  return trials < 1.0 ? 1 : static_cast<std::uint64_t>(trials);
}

void LocalScratch::begin(std::size_t n) {
  if (stamp_.size() < n) stamp_.resize(n, 0);
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
}

namespace {

void require_vertex(const WeightedGraph& g, Vertex x) {
  if (!g.contains(x)) throw std::out_of_range("seed vertex " + std::to_string(x) + " not in graph");
}

bool within_bounds(const LocalCutQuery& q, std::size_t size, std::size_t vol) {
  return size < q.sigma && (!q.nu || vol < *q.nu);
}

// V itself has an empty boundary but is not a cut.
bool answer(std::size_t universe, const LocalCutQuery& q, std::size_t size, std::size_t vol, Weight cut) {
  return cut < q.k && size < universe && within_bounds(q, size, vol);
}

}  // namespace

namespace {

template <class KeyOf>
std::optional<LocalCutFound> grow_volume(const WeightedGraph& g, const LocalCutQuery& q, KeyOf key_of,
                                         LocalScratch& scratch) {
  detail::FrontierGrowth growth(g, std::move(key_of), scratch, q.x);
  while (growth.cut() >= q.k && within_bounds(q, growth.size(), growth.volume())) {
    if (!growth.step()) break;
  }
  // The last absorption may both drop the cut below k and reach a bound;
  // such a set is not an answer.
  if (answer(g.num_vertices(), q, growth.size(), growth.volume(), growth.cut()))
    return LocalCutFound{VertexSet(growth.members()), growth.cut()};
  return std::nullopt;
}

}  // namespace

std::optional<LocalCutFound> local_prim_volume(const WeightedGraph& g, const LocalCutQuery& q,
                                               const RankAssignment& r, LocalScratch* scratch) {
  require_vertex(g, q.x);
  if (q.sigma <= 1) return std::nullopt;
  LocalScratch local;
  return grow_volume(g, q, [&r](EdgeId e) { return r.key(e); }, scratch ? *scratch : local);
}

LocalCutOutcome local_kcut_volume(const WeightedGraph& g, const LocalCutQuery& q,
                                  const SeedStream& stream, std::uint64_t trials) {
  require_vertex(g, q.x);
  if (q.sigma <= 1) return NoExtremeSet{};
  LocalScratch scratch(g.num_vertices());
  for (std::uint64_t i = 0; i < trials; ++i) {
    // Keys are evaluated on demand, so a trial costs O(vol(X) log vol(X))
    // rather than O(m). They equal sample_assignment(g, stream, i).
    const std::uint64_t seed = stream.trial_seed(i);
    const auto key_of = [&g, seed](EdgeId e) { return RankKey{edge_key(seed, e, g.edge(e).w), e}; };
    if (auto found = grow_volume(g, q, key_of, scratch)) return *std::move(found);
  }
  return NoExtremeSet{};
}

std::optional<LocalCutFound> local_prim_cardinality(const WeightedGraph& g, SortedAdjacency& sa,
                                                    const LocalCutQuery& q,
                                                    std::size_t* journal_length,
                                                    const ResidualView* residual) {
  require_vertex(g, q.x);
  if (q.nu) throw std::invalid_argument("cardinality variant takes no volume bound");
  if (sa.num_vertices() != g.num_vertices())
    throw std::invalid_argument("sorted adjacency built for a different graph");
  if (q.sigma <= 1) return std::nullopt;

  const auto degree = [&](Vertex v) { return residual ? residual->weighted_degree[v] : g.weighted_degree(v); };
  const std::size_t universe = residual ? residual->num_vertices : g.num_vertices();

  std::vector<Vertex> members{q.x};
  Weight cut = degree(q.x);
  while (cut >= q.k && members.size() < q.sigma) {
    const auto e = sa.next_edge(members);
    if (!e) break;
    const Edge& edge = g.edge(*e);
    // Heads are always cut edges: internal edges were erased on absorption.
    const bool u_inside = std::find(members.begin(), members.end(), edge.u) != members.end();
    const Vertex v = u_inside ? edge.v : edge.u;
    cut += degree(v);
    for (Vertex u : members) {
      if (const auto internal = sa.find_edge(u, v)) {
        cut -= 2 * g.edge(*internal).w;
        sa.erase(*internal);
      }
    }
    members.push_back(v);
  }
  if (journal_length) *journal_length = sa.journal_size();
  sa.undo_journal();
  if (answer(universe, q, members.size(), 0, cut)) return LocalCutFound{VertexSet(std::move(members)), cut};
  return std::nullopt;
}

LocalCutOutcome local_kcut_cardinality(const WeightedGraph& g,
                                       std::span<SortedAdjacency> structures,
                                       const LocalCutQuery& q, const ResidualView* residual) {
  require_vertex(g, q.x);
  if (q.sigma <= 1) return NoExtremeSet{};
  for (SortedAdjacency& sa : structures) {
    if (auto found = local_prim_cardinality(g, sa, q, nullptr, residual)) return *std::move(found);
  }
  return NoExtremeSet{};
}

std::vector<SortedAdjacency> build_structures(const WeightedGraph& g, const SeedStream& stream,
                                              std::uint64_t trials) {
  std::vector<SortedAdjacency> out;
  out.reserve(trials);
  for (std::uint64_t i = 0; i < trials; ++i) out.emplace_back(g, sample_assignment(g, stream, i));
  return out;
}

}  // namespace kec
