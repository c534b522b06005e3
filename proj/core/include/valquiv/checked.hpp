#pragma once

#include <cstdint>

#include "valquiv/errors.hpp"

namespace valquiv {

using Int = std::int64_t;

// All root/matrix coordinate arithmetic goes through these helpers: entries
// must either be exact or the operation must fail loudly, never wrap.

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) fail(Errc::Overflow, "integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) fail(Errc::Overflow, "integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) fail(Errc::Overflow, "integer overflow in multiplication");
  return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

}  // namespace valquiv
