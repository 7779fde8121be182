#pragma once

// Width-checked 64-bit integer helpers. Overflow is a hard failure
// (Errc::Overflow), never wraparound.

#include <cstdint>
#include <numeric>
#include <span>

#include "ehrk/error.hpp"

namespace ehrk {

using Int = std::int64_t;

[[noreturn]] void throw_overflow(const char* op);

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw_overflow("add");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw_overflow("sub");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw_overflow("mul");
  return r;
}

// Floor division and the least nonnegative residue; b > 0.
constexpr Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

constexpr Int mod_floor(Int a, Int b) {
  Int m = a % b;
  return m < 0 ? m + b : m;
}

inline Int gcd(Int a, Int b) { return std::gcd(a, b); }

inline Int lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  Int g = std::gcd(a, b);
  return checked_mul(a / g, b < 0 ? -b : b);
}

Int lcm_of(std::span<const Int> values);
Int gcd_of(std::span<const Int> values);

struct ExtendedGcd {
  Int gcd;
  Int x;  // a*x + b*y == gcd
  Int y;
};

ExtendedGcd extended_gcd(Int a, Int b);

// Largest s with s*s <= n, n >= 0.
Int isqrt(Int n);

}  // namespace ehrk
