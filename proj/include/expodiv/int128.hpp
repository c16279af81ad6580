#pragma once

#include <cstdint>
#include <string>

namespace expodiv {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using u32 = std::uint32_t;
using i128 = __int128;
using u128 = unsigned __int128;

std::string to_string_i128(i128 v);
std::string to_string_u128(u128 v);

constexpr u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// base^exp in u64; caller guarantees the result fits
constexpr u64 ipow_u64(u64 base, unsigned exp) {
  u64 r = 1;
  while (exp) {
    if (exp & 1u) r *= base;
    base *= base;
    exp >>= 1u;
  }
  return r;
}

}  // namespace expodiv
