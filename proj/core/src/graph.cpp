#include "valquiv/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace valquiv {

namespace {

struct Frac {
  Int num = 0;
  Int den = 1;
};

Frac reduced(Int num, Int den) {
  Int g = std::gcd(num, den);
  return {num / g, den / g};
}

}  // namespace

ValuedGraph ValuedGraph::validate(int n, const std::vector<EdgeSpec>& edges) {
  if (n < 1) fail(Errc::ParseError, "vertex count must be positive");
  if (n == 1) fail(Errc::RankOne, "valued graphs need at least two vertices");

  ValuedGraph g;
  g.n_ = n;

  std::vector<std::pair<std::pair<int, int>, std::pair<Int, Int>>> collected;
  for (const EdgeSpec& e : edges) {
    if (e.i < 1 || e.i > n || e.j < 1 || e.j > n)
      fail(Errc::ParseError, "edge endpoint out of range");
    if (e.i == e.j) fail(Errc::LoopEdge, "loop at vertex " + std::to_string(e.i));
    if (e.bij < 0 || e.bji < 0) fail(Errc::ParseError, "edge valuations must be nonnegative");
    if ((e.bij == 0) != (e.bji == 0))
      fail(Errc::AsymmetricZero, "one-sided zero valuation on edge {" + std::to_string(e.i) + "," +
                                     std::to_string(e.j) + "}");
    if (e.bij == 0 && e.bji == 0)
      fail(Errc::ParseError, "declared edge carries zero valuation");
    if (e.i < e.j)
      collected.push_back({{e.i, e.j}, {e.bij, e.bji}});
    else
      collected.push_back({{e.j, e.i}, {e.bji, e.bij}});
  }
  std::sort(collected.begin(), collected.end());
  for (std::size_t k = 1; k < collected.size(); ++k)
    if (collected[k].first == collected[k - 1].first)
      fail(Errc::ParseError, "duplicate edge {" + std::to_string(collected[k].first.first) + "," +
                                 std::to_string(collected[k].first.second) + "}");

  g.adj_.assign(static_cast<std::size_t>(n), {});
  for (const auto& [e, v] : collected) {
    g.edges_.push_back(e);
    g.val_.push_back(v);
    g.adj_[static_cast<std::size_t>(e.first - 1)].push_back(e.second);
    g.adj_[static_cast<std::size_t>(e.second - 1)].push_back(e.first);
  }
  for (auto& a : g.adj_) std::sort(a.begin(), a.end());

  // connectivity
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::queue<int> q;
  q.push(1);
  seen[0] = true;
  int reached = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.neighbors(u))
      if (!seen[static_cast<std::size_t>(w - 1)]) {
        seen[static_cast<std::size_t>(w - 1)] = true;
        ++reached;
        q.push(w);
      }
  }
  if (reached != n) fail(Errc::Disconnected, "underlying graph is not connected");

  symmetrizer(g);  // throws NoSymmetrizer when d does not exist
  return g;
}

int ValuedGraph::edge_index(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(i, j));
  if (it == edges_.end() || *it != std::make_pair(i, j)) return -1;
  return static_cast<int>(it - edges_.begin());
}

Int ValuedGraph::b(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) fail(Errc::ParseError, "vertex out of range");
  if (i == j) return 0;
  int k = edge_index(i, j);
  if (k < 0) return 0;
  const auto& v = val_[static_cast<std::size_t>(k)];
  return i < j ? v.first : v.second;
}

const std::vector<int>& ValuedGraph::neighbors(int v) const {
  if (v < 1 || v > n_) fail(Errc::ParseError, "vertex out of range");
  return adj_[static_cast<std::size_t>(v - 1)];
}

std::vector<Int> symmetrizer(const ValuedGraph& g) {
  int n = g.vertex_count();
  std::vector<Frac> d(static_cast<std::size_t>(n), Frac{0, 1});
  d[0] = {1, 1};
  std::queue<int> q;
  q.push(1);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.neighbors(u)) {
      if (d[static_cast<std::size_t>(w - 1)].num != 0) continue;
      // d_w = d_u * b(u,w) / b(w,u)
      const Frac& du = d[static_cast<std::size_t>(u - 1)];
      Frac f = reduced(checked_mul(du.num, g.b(u, w)), checked_mul(du.den, g.b(w, u)));
      d[static_cast<std::size_t>(w - 1)] = f;
      q.push(w);
    }
  }
  // cross-edge consistency: d_i b_ij == d_j b_ji as exact fractions
  for (int k = 0; k < g.edge_count(); ++k) {
    auto [i, j] = g.edge(k);
    const Frac& di = d[static_cast<std::size_t>(i - 1)];
    const Frac& dj = d[static_cast<std::size_t>(j - 1)];
    Int lhs = checked_mul(checked_mul(di.num, g.b(i, j)), dj.den);
    Int rhs = checked_mul(checked_mul(dj.num, g.b(j, i)), di.den);
    if (lhs != rhs) fail(Errc::NoSymmetrizer, "no symmetrizer: inconsistent cycle through edge {" +
                                                  std::to_string(i) + "," + std::to_string(j) + "}");
  }
  Int lcm = 1;
  for (const Frac& f : d) lcm = checked_mul(lcm / std::gcd(lcm, f.den), f.den);
  std::vector<Int> out(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    out[static_cast<std::size_t>(v)] = checked_mul(d[static_cast<std::size_t>(v)].num,
                                                   lcm / d[static_cast<std::size_t>(v)].den);
  Int gg = 0;
  for (Int v : out) gg = std::gcd(gg, v);
  for (Int& v : out) v /= gg;
  return out;
}

CartanMatrix::CartanMatrix(const ValuedGraph& g) : n_(g.vertex_count()), m_(g.vertex_count()) {
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) m_.at(i - 1, j - 1) = i == j ? 2 : checked_neg(g.b(i, j));
}

bool is_finite_type(const ValuedGraph& g) {
  int n = g.vertex_count();
  std::vector<Int> d = symmetrizer(g);
  CartanMatrix a(g);
  IntMatrix s(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      s.at(i, j) = checked_mul(d[static_cast<std::size_t>(i)], a.matrix().at(i, j));
  for (int k = 1; k <= n; ++k)
    if (leading_principal_minor(s, k) <= 0) return false;
  return true;
}

void check_permutation(int n, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != n)
    fail(Errc::NotPermutation, "permutation length differs from vertex count");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : perm) {
    if (v < 1 || v > n) fail(Errc::NotPermutation, "permutation entry out of range");
    if (seen[static_cast<std::size_t>(v - 1)]) fail(Errc::NotPermutation, "repeated permutation entry");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

}  // namespace valquiv
