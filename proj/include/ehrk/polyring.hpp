#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ehrk/arith.hpp"

namespace ehrk {

using Coeff = Int;

/// Dense univariate polynomial over the integers, coefficient i at index i.
/// Trailing zeros are always trimmed, so the zero polynomial is the empty
/// vector. All arithmetic is overflow-checked.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Coeff> coeffs);
  IntPoly(std::initializer_list<Coeff> coeffs);

  static IntPoly constant(Coeff c);
  static IntPoly monomial(Coeff c, std::size_t exponent);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Coeff leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
  Coeff operator[](std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  const std::vector<Coeff>& coeffs() const noexcept { return coeffs_; }

  bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool is_monic() const noexcept { return leading() == 1; }
  bool has_nonnegative_coeffs() const noexcept;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim() noexcept;
  std::vector<Coeff> coeffs_;
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);

/// Quotient q with a == q*b, or nullopt when the division leaves a remainder
/// (or the quotient would not have integer coefficients). Throws
/// DivisionByZero for b == 0.
std::optional<IntPoly> poly_exact_div(const IntPoly& a, const IntPoly& b);

Coeff eval_at(const IntPoly& f, Coeff t);

/// 1 + z^e + ... + z^{(gamma-1)e}
IntPoly geometric_series(Int exponent, Int length);

struct GeomSeries {
  Int exponent = 1;
  Int length = 2;

  IntPoly expand() const { return geometric_series(exponent, length); }
  friend auto operator<=>(const GeomSeries&, const GeomSeries&) = default;
};

Int euler_phi(Int d);

/// Every d >= 1 with phi(d) <= max_degree, ascending.
std::vector<Int> indices_with_totient_at_most(Int max_degree);

/// d-th cyclotomic polynomial. Memoized per process; safe to call from
/// concurrent workers.
const IntPoly& cyclotomic(Int d);

struct CyclotomicFactor {
  Int d = 1;
  Int multiplicity = 1;

  friend auto operator<=>(const CyclotomicFactor&, const CyclotomicFactor&) = default;
};

/// Sorted ascending by d, one entry per distinct index.
using CyclotomicMultiset = std::vector<CyclotomicFactor>;

IntPoly expand(const CyclotomicMultiset& factors);

/// Merges two multisets, summing multiplicities of shared indices.
CyclotomicMultiset merge(const CyclotomicMultiset& a, const CyclotomicMultiset& b);

struct KroneckerResult {
  bool kronecker = false;
  std::optional<CyclotomicMultiset> factors;
};

/// True iff f is monic and a product of cyclotomic polynomials, decided by
/// exact trial division. Throws ZeroPolynomial for f == 0.
KroneckerResult is_kronecker(const IntPoly& f);

/// "1 + 2z + 2z^2 + z^3"
std::string to_string(const IntPoly& f);
/// "Phi1*Phi3^2"
std::string to_string(const CyclotomicMultiset& m);

/// Accepts "1,2,2,1" (coefficients ascending).
IntPoly parse_coeff_list(const std::string& text);

}  // namespace ehrk
