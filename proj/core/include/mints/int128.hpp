#ifndef MINTS_INT128_HPP
#define MINTS_INT128_HPP

#include <string>

#include "mints/errors.hpp"

namespace mints {

// Subset sums and cross products are computed in 128-bit signed integers.
// Overflow is detected and raised, never wrapped.
using Int128 = __int128;

inline Int128 checked_add(Int128 a, Int128 b) {
  Int128 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("128-bit addition overflow");
  return r;
}

inline Int128 checked_sub(Int128 a, Int128 b) {
  Int128 r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("128-bit subtraction overflow");
  return r;
}

inline Int128 checked_mul(Int128 a, Int128 b) {
  Int128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("128-bit multiplication overflow");
  return r;
}

// |v| as unsigned, valid for the full range including the minimum value.
inline unsigned __int128 abs128(Int128 v) {
  return v < 0 ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
}

// gcd of absolute values; gcd128(0, 0) == 0.
inline Int128 gcd128(Int128 a, Int128 b) {
  unsigned __int128 x = abs128(a);
  unsigned __int128 y = abs128(b);
  while (y != 0) {
    unsigned __int128 t = x % y;
    x = y;
    y = t;
  }
  return static_cast<Int128>(x);
}

std::string to_string(Int128 v);

}  // namespace mints

#endif  // MINTS_INT128_HPP
