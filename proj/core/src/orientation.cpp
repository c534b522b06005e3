#include "valquiv/orientation.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace valquiv {

Orientation Orientation::from_arrows(const ValuedGraph& g,
                                     const std::vector<std::pair<int, int>>& arrows) {
  Orientation o;
  o.n_ = g.vertex_count();
  o.edges_ = g.edges();
  o.toward_second_.assign(o.edges_.size(), false);

  std::vector<bool> oriented(o.edges_.size(), false);
  for (auto [s, e] : arrows) {
    int k = s >= 1 && s <= o.n_ && e >= 1 && e <= o.n_ ? g.edge_index(s, e) : -1;
    if (k < 0)
      fail(Errc::UnknownEdge,
           "arrow " + std::to_string(s) + " -> " + std::to_string(e) + " matches no edge");
    if (oriented[static_cast<std::size_t>(k)])
      fail(Errc::ParseError, "edge {" + std::to_string(std::min(s, e)) + "," +
                                 std::to_string(std::max(s, e)) + "} oriented twice");
    oriented[static_cast<std::size_t>(k)] = true;
    o.toward_second_[static_cast<std::size_t>(k)] = s < e;
  }
  for (std::size_t k = 0; k < oriented.size(); ++k)
    if (!oriented[k])
      fail(Errc::UnorientedEdge, "edge {" + std::to_string(o.edges_[k].first) + "," +
                                     std::to_string(o.edges_[k].second) + "} carries no arrow");

  o.rebuild_adjacency();
  o.check_acyclic();
  return o;
}

void Orientation::rebuild_adjacency() {
  out_.assign(static_cast<std::size_t>(n_), {});
  in_.assign(static_cast<std::size_t>(n_), {});
  nbr_.assign(static_cast<std::size_t>(n_), {});
  for (int k = 0; k < edge_count(); ++k) {
    auto [s, e] = arrow(k);
    out_[static_cast<std::size_t>(s - 1)].push_back(e);
    in_[static_cast<std::size_t>(e - 1)].push_back(s);
    nbr_[static_cast<std::size_t>(s - 1)].push_back(e);
    nbr_[static_cast<std::size_t>(e - 1)].push_back(s);
  }
  for (auto& v : out_) std::sort(v.begin(), v.end());
  for (auto& v : in_) std::sort(v.begin(), v.end());
  for (auto& v : nbr_) std::sort(v.begin(), v.end());
}

void Orientation::check_acyclic() const {
  std::vector<int> indeg(static_cast<std::size_t>(n_), 0);
  for (int v = 1; v <= n_; ++v) indeg[static_cast<std::size_t>(v - 1)] = static_cast<int>(in(v).size());
  std::queue<int> q;
  for (int v = 1; v <= n_; ++v)
    if (indeg[static_cast<std::size_t>(v - 1)] == 0) q.push(v);
  int done = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    ++done;
    for (int w : out(u))
      if (--indeg[static_cast<std::size_t>(w - 1)] == 0) q.push(w);
  }
  if (done != n_) fail(Errc::OrientedCycle, "orientation has a directed cycle");
}

void Orientation::check_vertex(int v) const {
  if (v < 1 || v > n_) fail(Errc::ParseError, "vertex " + std::to_string(v) + " out of range");
}

int Orientation::edge_index(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(i, j));
  if (it == edges_.end() || *it != std::make_pair(i, j)) return -1;
  return static_cast<int>(it - edges_.begin());
}

bool Orientation::has_edge(int i, int j) const { return edge_index(i, j) >= 0; }

std::pair<int, int> Orientation::arrow(int k) const {
  auto [i, j] = edges_[static_cast<std::size_t>(k)];
  return toward_second_[static_cast<std::size_t>(k)] ? std::make_pair(i, j) : std::make_pair(j, i);
}

std::vector<std::pair<int, int>> Orientation::arrows() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edges_.size());
  for (int k = 0; k < edge_count(); ++k) out.push_back(arrow(k));
  return out;
}

bool Orientation::is_sink(int x) const {
  check_vertex(x);
  return out_[static_cast<std::size_t>(x - 1)].empty();
}

bool Orientation::is_source(int x) const {
  check_vertex(x);
  return in_[static_cast<std::size_t>(x - 1)].empty();
}

std::vector<int> Orientation::sinks() const {
  std::vector<int> out;
  for (int v = 1; v <= n_; ++v)
    if (is_sink(v)) out.push_back(v);
  return out;
}

const std::vector<int>& Orientation::out(int v) const {
  check_vertex(v);
  return out_[static_cast<std::size_t>(v - 1)];
}

const std::vector<int>& Orientation::in(int v) const {
  check_vertex(v);
  return in_[static_cast<std::size_t>(v - 1)];
}

const std::vector<int>& Orientation::neighbors(int v) const {
  check_vertex(v);
  return nbr_[static_cast<std::size_t>(v - 1)];
}

Orientation Orientation::reflected(int x) const {
  check_vertex(x);
  Orientation o = *this;
  for (std::size_t k = 0; k < edges_.size(); ++k)
    if (edges_[k].first == x || edges_[k].second == x) o.toward_second_[k] = !o.toward_second_[k];
  o.rebuild_adjacency();
  o.check_acyclic();
  return o;
}

VertexPoset::VertexPoset(const Orientation& o) : n_(o.vertex_count()) {
  reach_.assign(static_cast<std::size_t>(n_),
                std::vector<bool>(static_cast<std::size_t>(n_), false));
  for (int s = 1; s <= n_; ++s) {
    std::vector<int> stack{s};
    auto& row = reach_[static_cast<std::size_t>(s - 1)];
    row[static_cast<std::size_t>(s - 1)] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : o.out(u))
        if (!row[static_cast<std::size_t>(w - 1)]) {
          row[static_cast<std::size_t>(w - 1)] = true;
          stack.push_back(w);
        }
    }
  }
}

bool VertexPoset::leq(int x, int y) const {
  if (x < 1 || x > n_ || y < 1 || y > n_) fail(Errc::ParseError, "vertex out of range");
  return reach_[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(y - 1)];
}

bool is_filter(const VertexPoset& p, const VertexSet& f) {
  for (int x : f)
    for (int y = 1; y <= p.vertex_count(); ++y)
      if (p.leq(x, y) && !f.count(y)) return false;
  return true;
}

VertexSet filter_generated(const VertexPoset& p, const VertexSet& xs) {
  VertexSet out;
  for (int x : xs)
    for (int y = 1; y <= p.vertex_count(); ++y)
      if (p.leq(x, y)) out.insert(y);
  return out;
}

VertexSet hull(const Orientation& o, const VertexSet& f) {
  VertexPoset p(o);
  for (int v : f)
    if (v < 1 || v > o.vertex_count()) fail(Errc::ParseError, "vertex out of range");
  if (!is_filter(p, f)) fail(Errc::NotAFilter, "hull argument is not a filter");
  VertexSet grown = f;
  for (int v = 1; v <= o.vertex_count(); ++v) {
    if (f.count(v)) continue;
    for (int w : o.neighbors(v))
      if (f.count(w)) {
        grown.insert(v);
        break;
      }
  }
  return filter_generated(p, grown);
}

bool tq_reachable(const Orientation& o, TqVertex from, TqVertex to) {
  if (from.level < 0 || to.level < 0) fail(Errc::ParseError, "negative translation quiver level");
  if (from.vertex < 1 || from.vertex > o.vertex_count() || to.vertex < 1 ||
      to.vertex > o.vertex_count())
    fail(Errc::ParseError, "vertex out of range");
  if (from == to) return true;
  if (from.level > to.level) return false;

  int levels = to.level + 1;
  int n = o.vertex_count();
  std::vector<bool> seen(static_cast<std::size_t>(levels) * static_cast<std::size_t>(n), false);
  auto id = [n](TqVertex t) {
    return static_cast<std::size_t>(t.level) * static_cast<std::size_t>(n) +
           static_cast<std::size_t>(t.vertex - 1);
  };
  std::queue<TqVertex> q;
  q.push(from);
  seen[id(from)] = true;
  while (!q.empty()) {
    TqVertex cur = q.front();
    q.pop();
    if (cur == to) return true;
    // (m, v) -> (m, u) for each arrow u -> v; (m, u) -> (m+1, v) likewise
    for (int u : o.in(cur.vertex)) {
      TqVertex nxt{cur.level, u};
      if (!seen[id(nxt)]) {
        seen[id(nxt)] = true;
        q.push(nxt);
      }
    }
    if (cur.level + 1 <= to.level)
      for (int v : o.out(cur.vertex)) {
        TqVertex nxt{cur.level + 1, v};
        if (!seen[id(nxt)]) {
          seen[id(nxt)] = true;
          q.push(nxt);
        }
      }
  }
  return false;
}

Orientation orientation_from_coxeter_order(const ValuedGraph& g, const std::vector<int>& perm) {
  check_permutation(g.vertex_count(), perm);
  std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (int k = 0; k < g.vertex_count(); ++k) pos[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])] = k;
  std::vector<std::pair<int, int>> arrows;
  for (int k = 0; k < g.edge_count(); ++k) {
    auto [i, j] = g.edge(k);
    if (pos[static_cast<std::size_t>(i)] < pos[static_cast<std::size_t>(j)])
      arrows.push_back({j, i});
    else
      arrows.push_back({i, j});
  }
  return Orientation::from_arrows(g, arrows);
}

}  // namespace valquiv
