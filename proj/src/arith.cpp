#include "ehrk/arith.hpp"

#include <cmath>
#include <string>

namespace ehrk {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::Overflow: return "Overflow";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::NotRMultiplicity: return "NotRMultiplicity";
    case Errc::NotReflexive: return "NotReflexive";
    case Errc::NotDesirable: return "NotDesirable";
    case Errc::InconsistentResidues: return "InconsistentResidues";
    case Errc::InvalidParameters: return "InvalidParameters";
    case Errc::DegreeExceedsDimension: return "DegreeExceedsDimension";
    case Errc::ScaleExceeded: return "ScaleExceeded";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void throw_overflow(const char* op) {
  throw Error(Errc::Overflow, std::string("64-bit integer overflow in ") + op);
}

Int lcm_of(std::span<const Int> values) {
  Int acc = 1;
  for (Int v : values) acc = lcm(acc, v);
  return acc;
}

Int gcd_of(std::span<const Int> values) {
  Int acc = 0;
  for (Int v : values) acc = std::gcd(acc, v);
  return acc;
}

ExtendedGcd extended_gcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

Int isqrt(Int n) {
  if (n < 0) throw Error(Errc::InvalidInput, "isqrt of negative value");
  auto s = static_cast<Int>(std::sqrt(static_cast<long double>(n)));
  while (s > 0 && (s > n / s || s * s > n)) --s;
  while ((s + 1) <= n / (s + 1)) ++s;
  return s;
}

}  // namespace ehrk
