#pragma once

#include <utility>
#include <vector>

#include "valquiv/matrix.hpp"

namespace valquiv {

// One `edge i j bij bji` entry of the input format.
struct EdgeSpec {
  int i = 0;
  int j = 0;
  Int bij = 0;
  Int bji = 0;
};

// Finite connected valued graph on vertices 1..n with no loops.
// Invariants established by validate(): n >= 2, b_ij > 0 exactly on edges,
// b_ii = 0, connected, and a positive symmetrizer d exists.
class ValuedGraph {
public:
  static ValuedGraph validate(int n, const std::vector<EdgeSpec>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Edge k as (i, j) with i < j; edges sorted lexicographically.
  std::pair<int, int> edge(int k) const { return edges_[static_cast<std::size_t>(k)]; }
  int edge_index(int i, int j) const;  // -1 when {i,j} is not an edge
  bool has_edge(int i, int j) const { return edge_index(i, j) >= 0; }
  Int b(int i, int j) const;  // 0 when {i,j} is not an edge
  const std::vector<int>& neighbors(int v) const;
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

private:
  ValuedGraph() = default;

  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::pair<Int, Int>> val_;  // (b_ij, b_ji) for edge (i, j), i < j
  std::vector<std::vector<int>> adj_;
};

// Least positive integer vector d with d_i b_ij = d_j b_ji (gcd 1).
std::vector<Int> symmetrizer(const ValuedGraph& g);

// Generalized Cartan matrix: a_ii = 2, a_ij = -b_ij for i != j.
class CartanMatrix {
public:
  explicit CartanMatrix(const ValuedGraph& g);

  int rank() const { return n_; }
  Int at(int i, int j) const { return m_.at(i - 1, j - 1); }  // 1-based
  const IntMatrix& matrix() const { return m_; }

private:
  int n_;
  IntMatrix m_;
};

// True iff D*A is positive definite (all leading principal minors positive,
// exact integer arithmetic); equivalently the Weyl group is finite.
bool is_finite_type(const ValuedGraph& g);

// perm must list each vertex 1..n exactly once; throws NotPermutation.
void check_permutation(int n, const std::vector<int>& perm);

}  // namespace valquiv
