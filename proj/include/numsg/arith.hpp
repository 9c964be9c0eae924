#pragma once

// Checked 128-bit helpers used by the identity checks and products.

#include <cstdint>
#include <string>

#include "numsg/error.hpp"

namespace numsg {

using i128 = __int128;
using u128 = unsigned __int128;

inline i128 checked_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw error(errc::overflow, "128-bit multiplication overflow");
  return r;
}

inline i128 checked_add(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw error(errc::overflow, "128-bit addition overflow");
  return r;
}

inline i128 checked_sub(i128 a, i128 b) {
  i128 r;
  if (__builtin_sub_overflow(a, b, &r)) throw error(errc::overflow, "128-bit subtraction overflow");
  return r;
}

inline i128 checked_pow(i128 base, int exp) {
  i128 r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

inline std::string to_string(i128 v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  u128 u = neg ? u128(0) - u128(v) : u128(v);
  std::string s;
  while (u != 0) {
    s.insert(s.begin(), char('0' + int(u % 10)));
    u /= 10;
  }
  if (neg) s.insert(s.begin(), '-');
  return s;
}

}  // namespace numsg
