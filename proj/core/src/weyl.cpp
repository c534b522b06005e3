#include "valquiv/weyl.hpp"

#include <string>

namespace valquiv {

namespace {

void check_letter(int n, int i) {
  if (i < 1 || i > n) fail(Errc::ParseError, "word letter " + std::to_string(i) + " out of range");
}

}  // namespace

RootVector RootVector::simple(int n, int i) {
  RootVector v(n);
  v.coord(i) = 1;
  return v;
}

bool RootVector::is_zero() const {
  for (Int x : c_)
    if (x != 0) return false;
  return true;
}

bool RootVector::is_positive() const {
  bool nonzero = false;
  for (Int x : c_) {
    if (x < 0) return false;
    if (x > 0) nonzero = true;
  }
  return nonzero;
}

bool RootVector::is_negative() const {
  bool nonzero = false;
  for (Int x : c_) {
    if (x > 0) return false;
    if (x < 0) nonzero = true;
  }
  return nonzero;
}

bool RootVector::has_mixed_signs() const {
  bool pos = false, neg = false;
  for (Int x : c_) {
    pos = pos || x > 0;
    neg = neg || x < 0;
  }
  return pos && neg;
}

RootVector reflect(const CartanMatrix& a, int i, const RootVector& v) {
  check_letter(a.rank(), i);
  Int coeff = 0;
  for (int j = 1; j <= a.rank(); ++j) coeff = checked_add(coeff, checked_mul(a.at(i, j), v.coord(j)));
  RootVector out = v;
  out.coord(i) = checked_sub(out.coord(i), coeff);
  return out;
}

WeylElement WeylElement::identity(int n) { return WeylElement(IntMatrix::identity(n)); }

WeylElement WeylElement::simple_reflection(const CartanMatrix& a, int i) {
  check_letter(a.rank(), i);
  IntMatrix m = IntMatrix::identity(a.rank());
  for (int j = 1; j <= a.rank(); ++j)
    m.at(i - 1, j - 1) = checked_sub(i == j ? 1 : 0, a.at(i, j));
  return WeylElement(std::move(m));
}

WeylElement WeylElement::from_matrix(IntMatrix m) { return WeylElement(std::move(m)); }

RootVector WeylElement::apply(const RootVector& v) const {
  int n = rank();
  RootVector out(n);
  for (int i = 1; i <= n; ++i) {
    Int acc = 0;
    for (int j = 1; j <= n; ++j) acc = checked_add(acc, checked_mul(m_.at(i - 1, j - 1), v.coord(j)));
    out.coord(i) = acc;
  }
  return out;
}

RootVector WeylElement::image_of_simple(int i) const {
  int n = rank();
  RootVector out(n);
  for (int r = 1; r <= n; ++r) out.coord(r) = m_.at(r - 1, i - 1);
  return out;
}

WeylElement WeylElement::operator*(const WeylElement& rhs) const {
  return WeylElement(m_ * rhs.m_);
}

WeylElement WeylElement::inverse() const { return WeylElement(unimodular_inverse(m_)); }

WeylElement element_of(const CartanMatrix& a, const Word& w) {
  WeylElement acc = WeylElement::identity(a.rank());
  for (int x : w.letters) acc = WeylElement::simple_reflection(a, x) * acc;
  return acc;
}

bool is_reduced(const CartanMatrix& a, const Word& w) {
  // Maintain p = sigma_{x_s} ... sigma_{x_{j+1}}; the word is reduced iff
  // p(e_{x_j}) stays positive at every step.
  WeylElement p = WeylElement::identity(a.rank());
  for (std::size_t idx = w.letters.size(); idx-- > 0;) {
    int x = w.letters[idx];
    check_letter(a.rank(), x);
    RootVector img = p.image_of_simple(x);
    if (img.has_mixed_signs())
      fail(Errc::MixedSignRoot, "image of simple root has mixed signs", static_cast<int>(idx) + 1);
    if (img.is_negative()) return false;
    p = p * WeylElement::simple_reflection(a, x);
  }
  return true;
}

long length(const CartanMatrix& a, WeylElement e, long cap) {
  long len = 0;
  while (!e.is_identity()) {
    if (len >= cap) fail(Errc::CapExceeded, "length cap exceeded");
    int descent = 0;
    for (int i = 1; i <= a.rank(); ++i) {
      RootVector img = e.image_of_simple(i);
      if (img.has_mixed_signs())
        fail(Errc::MixedSignRoot, "image of simple root has mixed signs");
      if (img.is_negative()) {
        descent = i;
        break;
      }
    }
    if (descent == 0)
      fail(Errc::CapExceeded, "no descent found: matrix is not a Weyl group element");
    e = e * WeylElement::simple_reflection(a, descent);
    ++len;
  }
  return len;
}

WeylElement coxeter_element(const CartanMatrix& a, const std::vector<int>& perm) {
  check_permutation(a.rank(), perm);
  return element_of(a, Word{perm});
}

std::vector<long> coxeter_power_lengths(const CartanMatrix& a, const std::vector<int>& perm,
                                        int max_m) {
  if (max_m < 1) fail(Errc::ParseError, "max_m must be positive");
  WeylElement c = coxeter_element(a, perm);
  long cap = static_cast<long>(max_m) * a.rank() + 1;
  std::vector<long> out;
  out.reserve(static_cast<std::size_t>(max_m));
  WeylElement e = WeylElement::identity(a.rank());
  for (int m = 1; m <= max_m; ++m) {
    e = c * e;
    out.push_back(length(a, e, cap));
  }
  return out;
}

}  // namespace valquiv
