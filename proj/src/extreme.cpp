#include "kec/extreme.hpp"

#include <bit>
#include <vector>

#include "growth.hpp"

namespace kec {

bool is_extreme(const WeightedGraph& g, const VertexSet& x, std::size_t cap) {
  if (x.empty()) throw std::invalid_argument("is_extreme: empty set");
  if (x.size() > cap)
    throw std::length_error("is_extreme: |X| = " + std::to_string(x.size()) + " exceeds cap " +
                            std::to_string(cap));
  const std::size_t s = x.size();
  if (s >= 32) throw std::length_error("is_extreme: enumeration limited to 31 vertices");
  if (s == 1) return true;

  constexpr std::uint32_t kOutside = ~std::uint32_t{0};
  std::vector<std::uint32_t> local(g.num_vertices(), kOutside);
  for (std::uint32_t i = 0; i < s; ++i) local[x.members()[i]] = i;

  // Edges among members of x, per member.
  std::vector<std::vector<std::pair<std::uint32_t, Weight>>> inner_edges(s);
  Weight x_cut = 0;
  for (std::uint32_t i = 0; i < s; ++i) {
    for (const Incidence& inc : g.neighbors(x.members()[i])) {
      const Weight w = g.edge(inc.edge).w;
      if (local[inc.other] == kOutside) {
        x_cut += w;
      } else {
        inner_edges[i].emplace_back(local[inc.other], w);
      }
    }
  }

  // inner_weight[i] = total weight from member i into the current subset Y.
  std::vector<Weight> inner_weight(s, 0);
  std::uint32_t mask = 0;
  Weight cut = 0;
  const std::uint32_t full = (1u << s) - 1;
  for (std::uint64_t step = 1; step < (std::uint64_t{1} << s); ++step) {
    const unsigned bit = static_cast<unsigned>(std::countr_zero(step));
    const Weight wdeg = g.weighted_degree(x.members()[bit]);
    if (mask & (1u << bit)) {
      mask &= ~(1u << bit);
      cut = cut + 2 * inner_weight[bit] - wdeg;
      for (const auto& [j, w] : inner_edges[bit]) inner_weight[j] -= w;
    } else {
      cut = cut + wdeg - 2 * inner_weight[bit];
      mask |= 1u << bit;
      for (const auto& [j, w] : inner_edges[bit]) inner_weight[j] += w;
    }
    if (mask != full && cut <= x_cut) return false;
  }
  return true;
}

ExtremeSetCertificate certify_extreme(const WeightedGraph& g, const VertexSet& set, std::size_t cap) {
  ExtremeSetCertificate cert;
  cert.set = set;
  cert.cut_value = set.size() == g.num_vertices() ? 0 : cut_value(g, set);
  cert.verified_by_brute_force = is_extreme(g, set, cap);
  return cert;
}

MinimalExtremeResult minimal_extreme_set(const WeightedGraph& g, const LocalCutQuery& q,
                                         const SeedStream& stream, std::uint64_t trials,
                                         std::size_t cap) {
  if (!g.contains(q.x)) throw std::out_of_range("seed vertex " + std::to_string(q.x) + " not in graph");
  MinimalExtremeResult result;
  // best == nullopt stands for S = V.
  std::optional<VertexSet> best;
  const auto in_bounds = [&](std::size_t size, std::size_t vol) {
    return size < q.sigma && (!q.nu || vol < *q.nu);
  };

  LocalScratch scratch(g.num_vertices());
  for (std::uint64_t i = 0; i < trials; ++i) {
    const std::uint64_t seed = stream.trial_seed(i);
    const auto key_of = [&g, seed](EdgeId e) { return RankKey{edge_key(seed, e, g.edge(e).w), e}; };
    detail::FrontierGrowth growth(g, key_of, scratch, q.x);
    while (in_bounds(growth.size(), growth.volume())) {
      if (growth.cut() < q.k) {
        VertexSet candidate(growth.members());
        const bool smaller = best ? candidate.strict_subset_of(*best)
                                  : candidate.size() < g.num_vertices();
        if (smaller) {
          if (candidate.size() > cap) {
            ++result.skipped_over_cap;
          } else if (is_extreme(g, candidate, cap)) {
            best = std::move(candidate);
            break;
          }
        }
      }
      if (!growth.step()) break;
    }
  }
  result.set = std::move(best);
  return result;
}

}  // namespace kec
