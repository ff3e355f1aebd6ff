#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "kec/extreme.hpp"
#include "kec/graph.hpp"

namespace kec {

struct GeneratedInstance {
  WeightedGraph graph;
  /// planted-extreme only: the planted set, verified at generation time.
  std::optional<ExtremeSetCertificate> certificate;
  std::optional<Vertex> seed_vertex;
};

/// Connected random simple graph: a random spanning tree plus extra random
/// edges until `m` edges (capped at n(n-1)/2). Weights uniform in
/// [1, max_weight].
WeightedGraph random_weighted_graph(std::size_t n, std::size_t m, Weight max_weight, std::uint64_t seed);

/// Random background graph with a heavy clique of `planted_size` vertices
/// attached by a few unit edges. The clique is an extreme set; its
/// certificate is checked with is_extreme before returning.
GeneratedInstance planted_extreme(std::size_t background_size, std::size_t planted_size,
                                  std::uint64_t seed);

/// Unit clique on vertices 0..clique-1 with a unit path of `path_length`
/// further vertices hanging off vertex clique-1.
WeightedGraph lollipop(std::size_t path_length, std::size_t clique);

/// s=0, u1..u3 = 1..3, t=4; unit edges s-ui and ui-t.
WeightedGraph parallel_paths();

/// Unit triangles {0,1,2} and {3,4,5} joined by the unit bridge 2-3.
WeightedGraph two_triangles();

/// Unit path 0-1-...-(n-1).
WeightedGraph path_graph(std::size_t n);

/// Edge list, preceded by '#' comment lines describing any certificate.
std::string to_document(const GeneratedInstance& instance);

}  // namespace kec
