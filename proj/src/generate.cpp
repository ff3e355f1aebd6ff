#include "kec/generate.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "kec/rank.hpp"

namespace kec {

namespace {

// Random connected graph on vertices [offset, offset + n).
void add_random_connected(std::vector<Edge>& edges, std::set<std::pair<Vertex, Vertex>>& used, Vertex offset,
                          std::size_t n, std::size_t m, Weight max_weight, SplitMix64& rng) {
  const auto add = [&](Vertex a, Vertex b) {
    if (a == b) return false;
    const auto key = std::minmax(a, b);
    if (!used.insert(key).second) return false;
    edges.push_back({a, b, 1 + rng.below(max_weight)});
    return true;
  };
  std::vector<Vertex> order(n);
  for (Vertex i = 0; i < n; ++i) order[i] = offset + i;
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  for (std::size_t i = 1; i < n; ++i) add(order[i], order[rng.below(i)]);

  const std::size_t max_edges = n * (n - 1) / 2;
  std::size_t added = n > 0 ? n - 1 : 0;
  m = std::min(m, max_edges);
  while (added < m) {
    if (add(offset + static_cast<Vertex>(rng.below(n)), offset + static_cast<Vertex>(rng.below(n)))) ++added;
  }
}

}  // namespace

WeightedGraph random_weighted_graph(std::size_t n, std::size_t m, Weight max_weight, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("random graph needs at least one vertex");
  if (max_weight < 1) throw std::invalid_argument("max weight must be at least 1");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  std::set<std::pair<Vertex, Vertex>> used;
  add_random_connected(edges, used, 0, n, m, max_weight, rng);
  return WeightedGraph(n, edges);
}

GeneratedInstance planted_extreme(std::size_t background_size, std::size_t planted_size, std::uint64_t seed) {
  if (background_size < 1 || planted_size < 2)
    throw std::invalid_argument("planted-extreme needs a background vertex and a planted set of size >= 2");
  if (planted_size > kDefaultExtremeCap)
    throw std::invalid_argument("planted set larger than the brute-force cap");
  SplitMix64 rng(seed);
  const std::size_t n = background_size + planted_size;
  std::vector<Edge> edges;
  std::set<std::pair<Vertex, Vertex>> used;
  add_random_connected(edges, used, 0, background_size, 2 * background_size, 3, rng);

  const Vertex first = static_cast<Vertex>(background_size);
  const std::size_t links = 1 + rng.below(std::min<std::size_t>(planted_size, 3));
  // Any strict subset of the clique cuts at least (planted_size - 1) clique
  // edges, so this weight keeps the clique extreme.
  const Weight inner = links + 1;
  for (Vertex a = 0; a < planted_size; ++a)
    for (Vertex b = a + 1; b < planted_size; ++b) edges.push_back({first + a, first + b, inner});
  for (std::size_t i = 0; i < links; ++i) {
    const Vertex inside = first + static_cast<Vertex>(i);
    const Vertex outside = static_cast<Vertex>(rng.below(background_size));
    edges.push_back({inside, outside, 1});
  }

  GeneratedInstance out;
  out.graph = WeightedGraph(n, edges);
  std::vector<Vertex> planted(planted_size);
  for (Vertex i = 0; i < planted_size; ++i) planted[i] = first + i;
  out.certificate = certify_extreme(out.graph, VertexSet(std::move(planted)));
  if (!out.certificate->verified_by_brute_force)
    throw std::logic_error("planted set failed the extremeness check");
  out.seed_vertex = first + static_cast<Vertex>(rng.below(planted_size));
  return out;
}

WeightedGraph lollipop(std::size_t path_length, std::size_t clique) {
  if (clique < 1) throw std::invalid_argument("lollipop needs a clique of at least one vertex");
  std::vector<Edge> edges;
  for (Vertex a = 0; a < clique; ++a)
    for (Vertex b = a + 1; b < clique; ++b) edges.push_back({a, b, 1});
  Vertex previous = static_cast<Vertex>(clique - 1);
  for (std::size_t i = 0; i < path_length; ++i) {
    const Vertex next = static_cast<Vertex>(clique + i);
    edges.push_back({previous, next, 1});
    previous = next;
  }
  return WeightedGraph(clique + path_length, edges);
}

WeightedGraph parallel_paths() {
  const std::vector<Edge> edges{{0, 1, 1}, {1, 4, 1}, {0, 2, 1}, {2, 4, 1}, {0, 3, 1}, {3, 4, 1}};
  return WeightedGraph(5, edges);
}

WeightedGraph two_triangles() {
  const std::vector<Edge> edges{{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, 1}, {4, 5, 1}, {3, 5, 1}, {2, 3, 1}};
  return WeightedGraph(6, edges);
}

WeightedGraph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i < n; ++i) edges.push_back({i - 1, i, 1});
  return WeightedGraph(n, edges);
}

std::string to_document(const GeneratedInstance& instance) {
  std::ostringstream out;
  if (instance.certificate) {
    out << "# extreme-set certificate: cut " << instance.certificate->cut_value << ", verified "
        << (instance.certificate->verified_by_brute_force ? "yes" : "no") << '\n';
    out << "# set:";
    for (Vertex v : instance.certificate->set) out << ' ' << v;
    out << '\n';
  }
  if (instance.seed_vertex) out << "# seed vertex: " << *instance.seed_vertex << '\n';
  out << write_edge_list(instance.graph);
  return out.str();
}

}  // namespace kec
