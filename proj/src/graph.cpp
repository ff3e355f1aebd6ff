#include "kec/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <tuple>
#include <unordered_map>

namespace kec {

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::strict_subset_of(const VertexSet& other) const {
  return size() < other.size() &&
         std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

GraphFormatError::GraphFormatError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

WeightedGraph::WeightedGraph(std::size_t num_vertices, std::span<const Edge> edges)
    : adjacency_(num_vertices), weighted_degree_(num_vertices, 0) {
  std::unordered_map<std::uint64_t, EdgeId> index;
  index.reserve(edges.size());
  for (const Edge& input : edges) {
    if (input.u >= num_vertices || input.v >= num_vertices)
      throw std::invalid_argument("edge endpoint out of range");
    if (input.u == input.v) throw std::invalid_argument("self-loop");
    if (input.w == 0) throw std::invalid_argument("edge weight must be positive");
    if (input.w > kMaxTotalWeight - total_weight_)
      throw std::invalid_argument("total edge weight exceeds 2^63 - 1");
    total_weight_ += input.w;

    const Vertex lo = std::min(input.u, input.v);
    const Vertex hi = std::max(input.u, input.v);
    const std::uint64_t key = (std::uint64_t{lo} << 32) | hi;
    auto [it, inserted] = index.try_emplace(key, static_cast<EdgeId>(edges_.size()));
    if (inserted) {
      edges_.push_back({lo, hi, input.w});
    } else {
      edges_[it->second].w += input.w;
    }
  }
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const Edge& edge = edges_[e];
    adjacency_[edge.u].push_back({e, edge.v});
    adjacency_[edge.v].push_back({e, edge.u});
    weighted_degree_[edge.u] += edge.w;
    weighted_degree_[edge.v] += edge.w;
  }
}

std::size_t WeightedGraph::max_degree() const {
  std::size_t best = 0;
  for (const auto& list : adjacency_) best = std::max(best, list.size());
  return best;
}

Weight WeightedGraph::max_weight() const {
  Weight best = 0;
  for (const Edge& e : edges_) best = std::max(best, e.w);
  return best;
}

VertexSet Subgraph::lift(const VertexSet& local) const {
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(to_parent[v]);
  return VertexSet(std::move(out));
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::uint64_t> parse_fields(std::string_view line, std::size_t line_no) {
  std::vector<std::uint64_t> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos == line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    const std::string_view token = line.substr(pos, end - pos);
    if (token.front() == '-') throw GraphFormatError(line_no, "negative value '" + std::string(token) + "'");
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw GraphFormatError(line_no, "not a non-negative integer: '" + std::string(token) + "'");
    fields.push_back(value);
    pos = end;
  }
  return fields;
}

}  // namespace

WeightedGraph load_graph(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<Edge> edges;

  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = trim(text.substr(pos, end - pos));
    ++line_no;
    pos = end + 1;
    if (line.empty() || line.front() == '#') {
      if (end == text.size()) break;
      continue;
    }

    const auto fields = parse_fields(line, line_no);
    if (!have_header) {
      if (fields.size() != 2) throw GraphFormatError(line_no, "expected header 'n m'");
      n = fields[0];
      m = fields[1];
      if (n > std::numeric_limits<Vertex>::max()) throw GraphFormatError(line_no, "vertex count too large");
      edges.reserve(m);
      have_header = true;
    } else {
      if (fields.size() != 3) throw GraphFormatError(line_no, "expected edge 'u v w'");
      if (edges.size() == m) throw GraphFormatError(line_no, "more edges than declared in header");
      const auto [u, v, w] = std::tuple{fields[0], fields[1], fields[2]};
      if (u >= n || v >= n) throw GraphFormatError(line_no, "vertex id out of range");
      if (u == v) throw GraphFormatError(line_no, "self-loop");
      if (w == 0) throw GraphFormatError(line_no, "non-positive weight");
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), w});
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw GraphFormatError(line_no, "missing header 'n m'");
  if (edges.size() != m)
    throw GraphFormatError(line_no, "expected " + std::to_string(m) + " edges, found " +
                                        std::to_string(edges.size()));
  try {
    return WeightedGraph(n, edges);
  } catch (const std::invalid_argument& e) {
    throw GraphFormatError(line_no, e.what());
  }
}

WeightedGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_graph(buffer.str());
}

std::string write_edge_list(const WeightedGraph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.w << '\n';
  return out.str();
}

namespace {

std::vector<char> membership(const WeightedGraph& g, const VertexSet& x) {
  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex v : x) {
    if (!g.contains(v)) throw std::out_of_range("vertex " + std::to_string(v) + " not in graph");
    in[v] = 1;
  }
  return in;
}

void require_proper(const WeightedGraph& g, const VertexSet& x) {
  if (x.empty()) throw std::invalid_argument("vertex set must be non-empty");
  if (x.size() >= g.num_vertices()) throw std::invalid_argument("vertex set must not be all of V");
}

}  // namespace

Weight cut_value(const WeightedGraph& g, const VertexSet& x) {
  require_proper(g, x);
  const auto in = membership(g, x);
  Weight value = 0;
  for (const Edge& e : g.edges())
    if (in[e.u] != in[e.v]) value += e.w;
  return value;
}

std::size_t volume(const WeightedGraph& g, const VertexSet& x) {
  const auto in = membership(g, x);
  std::size_t count = 0;
  for (const Edge& e : g.edges())
    if (in[e.u] || in[e.v]) ++count;
  return count;
}

Subgraph contract_complement(const WeightedGraph& g, const VertexSet& x) {
  require_proper(g, x);
  std::vector<Vertex> local(g.num_vertices(), static_cast<Vertex>(x.size()));
  Subgraph out;
  out.to_parent.reserve(x.size() + 1);
  for (Vertex v : x) {
    if (!g.contains(v)) throw std::out_of_range("vertex " + std::to_string(v) + " not in graph");
    local[v] = static_cast<Vertex>(out.to_parent.size());
    out.to_parent.push_back(v);
  }
  out.to_parent.push_back(static_cast<Vertex>(g.num_vertices()));
  const Vertex outside = static_cast<Vertex>(x.size());

  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const Vertex a = local[e.u];
    const Vertex b = local[e.v];
    if (a == outside && b == outside) continue;
    edges.push_back({a, b, e.w});
  }
  out.graph = WeightedGraph(x.size() + 1, edges);
  return out;
}

Subgraph induced_subgraph(const WeightedGraph& g, const VertexSet& x) {
  if (x.empty()) throw std::invalid_argument("vertex set must be non-empty");
  constexpr Vertex kAbsent = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> local(g.num_vertices(), kAbsent);
  Subgraph out;
  out.to_parent.reserve(x.size());
  for (Vertex v : x) {
    if (!g.contains(v)) throw std::out_of_range("vertex " + std::to_string(v) + " not in graph");
    local[v] = static_cast<Vertex>(out.to_parent.size());
    out.to_parent.push_back(v);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (local[e.u] != kAbsent && local[e.v] != kAbsent) edges.push_back({local[e.u], local[e.v], e.w});
  out.graph = WeightedGraph(x.size(), edges);
  return out;
}

VertexSet complement(const WeightedGraph& g, const VertexSet& x) {
  const auto in = membership(g, x);
  std::vector<Vertex> rest;
  rest.reserve(g.num_vertices() - x.size());
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (!in[v]) rest.push_back(v);
  return VertexSet(std::move(rest));
}

std::vector<std::uint32_t> connected_components(const WeightedGraph& g, std::size_t* count) {
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> label(g.num_vertices(), kUnset);
  std::vector<Vertex> stack;
  std::uint32_t next = 0;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (label[s] != kUnset) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (const Incidence& inc : g.neighbors(v)) {
        if (label[inc.other] == kUnset) {
          label[inc.other] = next;
          stack.push_back(inc.other);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return label;
}

}  // namespace kec
