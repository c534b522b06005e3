#pragma once

#include <compare>
#include <set>
#include <vector>

#include "valquiv/graph.hpp"

namespace valquiv {

using VertexSet = std::set<int>;

// Acyclic orientation of the underlying graph. Owns a copy of the edge list,
// so sequence-level code never needs a separate graph handle; the valuation
// stays with ValuedGraph.
class Orientation {
public:
  static Orientation from_arrows(const ValuedGraph& g, const std::vector<std::pair<int, int>>& arrows);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::pair<int, int> edge(int k) const { return edges_[static_cast<std::size_t>(k)]; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool has_edge(int i, int j) const;

  // Arrow of edge k as (source, target).
  std::pair<int, int> arrow(int k) const;
  std::vector<std::pair<int, int>> arrows() const;

  bool is_sink(int x) const;
  bool is_source(int x) const;
  std::vector<int> sinks() const;  // ascending

  const std::vector<int>& out(int v) const;
  const std::vector<int>& in(int v) const;
  const std::vector<int>& neighbors(int v) const;

  // sigma_x: reverse every arrow incident to x. Throws OrientedCycle if the
  // result has a directed cycle (never happens for x a sink or source).
  Orientation reflected(int x) const;

  bool operator==(const Orientation&) const = default;

private:
  Orientation() = default;
  void rebuild_adjacency();
  void check_acyclic() const;
  void check_vertex(int v) const;
  int edge_index(int i, int j) const;

  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;  // normalized (i < j), sorted
  std::vector<bool> toward_second_;         // arrow i -> j iff true
  std::vector<std::vector<int>> out_, in_, nbr_;
};

// x <= y iff there is a directed path x -> y.
class VertexPoset {
public:
  explicit VertexPoset(const Orientation& o);

  int vertex_count() const { return n_; }
  bool leq(int x, int y) const;

private:
  int n_;
  std::vector<std::vector<bool>> reach_;
};

bool is_filter(const VertexPoset& p, const VertexSet& f);

// Upward closure <X> = { y : y >= x for some x in X }.
VertexSet filter_generated(const VertexPoset& p, const VertexSet& xs);

// Smallest filter containing f together with every outside vertex that is
// adjacent (by an edge, ignoring direction) to f. Throws NotAFilter.
VertexSet hull(const Orientation& o, const VertexSet& f);

struct TqVertex {
  int level = 0;   // 0-based
  int vertex = 0;  // 1-based
  auto operator<=>(const TqVertex&) const = default;
};

// Reachability in the translation quiver N(Gamma, Lambda^op): every arrow
// u -> v of (Gamma, Lambda) contributes (m,v) -> (m,u) and (m,u) -> (m+1,v).
bool tq_reachable(const Orientation& o, TqVertex from, TqVertex to);

// The unique orientation for which perm, read left to right, is a complete
// (+)-admissible sequence: edge {perm_i, perm_j} with i < j points perm_j -> perm_i.
Orientation orientation_from_coxeter_order(const ValuedGraph& g, const std::vector<int>& perm);

}  // namespace valquiv
