#include "valquiv/matrix.hpp"

#include <utility>

namespace valquiv {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  IntMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      Int lik = at(i, k);
      if (lik == 0) continue;
      for (int j = 0; j < n_; ++j)
        out.at(i, j) = checked_add(out.at(i, j), checked_mul(lik, rhs.at(k, j)));
    }
  return out;
}

bool IntMatrix::is_identity() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

std::size_t IntMatrix::hash() const {
  // FNV-1a over the raw entries; good enough for dedup tables.
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::size_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::size_t>(n_));
  for (Int v : a_) mix(static_cast<std::size_t>(v));
  return h;
}

// Bareiss: all intermediate divisions are exact, result fits whenever the
// checked multiplications do.
static Int bareiss(IntMatrix w, int n) {
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w.at(k, k) == 0) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r)
        if (w.at(r, k) != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(w.at(k, c), w.at(pivot, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int num = checked_sub(checked_mul(w.at(i, j), w.at(k, k)), checked_mul(w.at(i, k), w.at(k, j)));
        w.at(i, j) = num / prev;
      }
      w.at(i, k) = 0;
    }
    prev = w.at(k, k);
  }
  return checked_mul(sign, w.at(n - 1, n - 1));
}

Int determinant(const IntMatrix& m) { return bareiss(m, m.size()); }

Int leading_principal_minor(const IntMatrix& m, int k) {
  IntMatrix sub(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) sub.at(i, j) = m.at(i, j);
  return bareiss(std::move(sub), k);
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  int n = m.size();
  Int det = determinant(m);
  if (det != 1 && det != -1)
    fail(Errc::ParseError, "unimodular_inverse: determinant is not a unit");
  IntMatrix inv(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      IntMatrix minor(n - 1);
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor.at(rr, cc) = m.at(r, c);
          ++cc;
        }
        ++rr;
      }
      Int cof = determinant(minor);
      if ((i + j) % 2 != 0) cof = checked_neg(cof);
      // adjugate transposes the cofactor grid; dividing by det = +-1 stays integral
      inv.at(j, i) = det == 1 ? cof : checked_neg(cof);
    }
  return inv;
}

}  // namespace valquiv
