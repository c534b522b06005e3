#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "valquiv/checked.hpp"

namespace valquiv {

// Dense square integer matrix, row-major, 0-based indices.
class IntMatrix {
public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}

  static IntMatrix identity(int n);

  int size() const { return n_; }
  Int at(int i, int j) const { return a_[idx(i, j)]; }
  Int& at(int i, int j) { return a_[idx(i, j)]; }

  IntMatrix operator*(const IntMatrix& rhs) const;  // overflow-checked

  bool is_identity() const;

  bool operator==(const IntMatrix&) const = default;
  auto operator<=>(const IntMatrix&) const = default;

  std::size_t hash() const;

private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }

  int n_ = 0;
  std::vector<Int> a_;
};

// Exact determinant, fraction-free elimination.
Int determinant(const IntMatrix& m);

// det of the leading k x k submatrix.
Int leading_principal_minor(const IntMatrix& m, int k);

// Exact inverse for matrices with determinant +1 or -1 (adjugate route).
IntMatrix unimodular_inverse(const IntMatrix& m);

}  // namespace valquiv
