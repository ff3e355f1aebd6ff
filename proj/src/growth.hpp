#pragma once

#include <set>
#include <utility>
#include <vector>

#include "kec/graph.hpp"
#include "kec/local_cut.hpp"
#include "kec/rank.hpp"

namespace kec::detail {

// Prim-style growth of X from a seed along minimum-key cut edges, tracking
// |X|, vol(X) and w(delta(X)) incrementally. KeyOf maps an edge id to its
// RankKey and must return the same key on every call.
template <class KeyOf>
class FrontierGrowth {
 public:
  FrontierGrowth(const WeightedGraph& g, KeyOf key_of, LocalScratch& scratch, Vertex seed)
      : g_(g), key_of_(std::move(key_of)), in_(scratch) {
    in_.begin(g.num_vertices());
    absorb(seed);
  }

  // Absorbs the far endpoint of the minimum-key cut edge. False when X has
  // no cut edges left.
  bool step() {
    if (frontier_.empty()) return false;
    const Edge& e = g_.edge(frontier_.begin()->edge);
    absorb(in_.marked(e.u) ? e.v : e.u);
    return true;
  }

  Weight cut() const { return cut_; }
  std::size_t volume() const { return volume_; }
  std::size_t size() const { return members_.size(); }
  const std::vector<Vertex>& members() const { return members_; }

 private:
  void absorb(Vertex v) {
    in_.mark(v);
    members_.push_back(v);
    std::size_t internal = 0;
    for (const Incidence& inc : g_.neighbors(v)) {
      const Weight w = g_.edge(inc.edge).w;
      if (in_.marked(inc.other) && inc.other != v) {
        cut_ -= w;
        ++internal;
        frontier_.erase(key_of_(inc.edge));
      } else {
        cut_ += w;
        frontier_.insert(key_of_(inc.edge));
      }
    }
    volume_ += g_.degree(v) - internal;
  }

  const WeightedGraph& g_;
  KeyOf key_of_;
  LocalScratch& in_;
  std::vector<Vertex> members_;
  std::set<RankKey> frontier_;
  Weight cut_ = 0;
  std::size_t volume_ = 0;
};

}  // namespace kec::detail
