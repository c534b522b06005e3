#pragma once

#include <cstddef>
#include <vector>

#include "valquiv/graph.hpp"

namespace valquiv {

// Integer vector in the root lattice, coordinates indexed by vertices 1..n.
class RootVector {
public:
  RootVector() = default;
  explicit RootVector(int n) : c_(static_cast<std::size_t>(n), 0) {}
  explicit RootVector(std::vector<Int> coords) : c_(std::move(coords)) {}
  static RootVector simple(int n, int i);

  int dimension() const { return static_cast<int>(c_.size()); }
  Int coord(int v) const { return c_[static_cast<std::size_t>(v - 1)]; }
  Int& coord(int v) { return c_[static_cast<std::size_t>(v - 1)]; }
  const std::vector<Int>& coords() const { return c_; }

  bool is_zero() const;
  bool is_positive() const;  // nonzero and every coordinate >= 0
  bool is_negative() const;  // nonzero and every coordinate <= 0
  bool has_mixed_signs() const;

  bool operator==(const RootVector&) const = default;

private:
  std::vector<Int> c_;
};

// sigma_i(v) = v - (sum_j a_ij v_j) e_i
RootVector reflect(const CartanMatrix& a, int i, const RootVector& v);

// Letters x_1 .. x_s, x_1 first; the element is sigma_{x_s} ... sigma_{x_1}.
struct Word {
  std::vector<int> letters;
};

class WeylElement {
public:
  static WeylElement identity(int n);
  static WeylElement simple_reflection(const CartanMatrix& a, int i);
  // No validation: for oracles and tests that already hold a matrix.
  static WeylElement from_matrix(IntMatrix m);

  int rank() const { return m_.size(); }
  const IntMatrix& matrix() const { return m_; }
  bool is_identity() const { return m_.is_identity(); }

  RootVector apply(const RootVector& v) const;
  RootVector image_of_simple(int i) const;  // column i

  // Composition: (*this) after rhs.
  WeylElement operator*(const WeylElement& rhs) const;
  WeylElement inverse() const;

  bool operator==(const WeylElement&) const = default;
  auto operator<=>(const WeylElement&) const = default;

private:
  explicit WeylElement(IntMatrix m) : m_(std::move(m)) {}
  IntMatrix m_;
};

WeylElement element_of(const CartanMatrix& a, const Word& w);

// Right-to-left root-sign criterion; MixedSignRoot guards corrupt input.
bool is_reduced(const CartanMatrix& a, const Word& w);

inline long default_length_cap(int n, std::size_t word_len) {
  return 10L * n * (static_cast<long>(word_len) + 1);
}

// Coxeter length by the descent algorithm (least descent first). Throws
// CapExceeded when e is not reached from the identity within cap steps.
long length(const CartanMatrix& a, WeylElement e, long cap);

// sigma_{perm_n} ... sigma_{perm_1}.
WeylElement coxeter_element(const CartanMatrix& a, const std::vector<int>& perm);

// Lengths of c^m for m = 1..max_m, computed with cap max_m * n + 1.
std::vector<long> coxeter_power_lengths(const CartanMatrix& a, const std::vector<int>& perm,
                                        int max_m);

}  // namespace valquiv
