#pragma once

// The q-vector data model for the simplices conv(e_1, ..., e_n, -q) and the
// closed forms that produce their h*-polynomials and g-polynomials.

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ehrk/polyring.hpp"

namespace ehrk {

/// q = (r_1^{x_1}, ..., r_d^{x_d}) stored as its distinct support r (strictly
/// ascending) with positive multiplicities x.
class SupportedQ {
 public:
  /// Sorts the pairs by r. Throws InvalidInput for repeated or nonpositive
  /// support entries or nonpositive multiplicities, LengthMismatch when the
  /// vectors differ in length, EmptyInput when both are empty.
  SupportedQ(std::vector<Int> r, std::vector<Int> x);

  const std::vector<Int>& r() const noexcept { return r_; }
  const std::vector<Int>& x() const noexcept { return x_; }
  /// s_i = lcm(r) / r_i
  const std::vector<Int>& s() const noexcept { return s_; }
  Int lcm() const noexcept { return lcm_; }
  /// n = sum x_i
  Int dimension() const noexcept { return dimension_; }
  /// sum x_i r_i
  Int qsum() const noexcept { return qsum_; }
  std::size_t support_size() const noexcept { return r_.size(); }

  /// The multiset q written out, ascending.
  std::vector<Int> expand() const;

  friend bool operator==(const SupportedQ& a, const SupportedQ& b) { return a.r_ == b.r_ && a.x_ == b.x_; }
  friend std::strong_ordering operator<=>(const SupportedQ& a, const SupportedQ& b) {
    if (auto c = a.r_ <=> b.r_; c != 0) return c;
    return a.x_ <=> b.x_;
  }

 private:
  std::vector<Int> r_;
  std::vector<Int> x_;
  std::vector<Int> s_;
  Int lcm_ = 1;
  Int dimension_ = 0;
  Int qsum_ = 0;
};

/// Groups a multiset of positive integers into support and multiplicities.
SupportedQ support(std::span<const Int> q);

/// Parses "2^7,5^5" or "2,2,5" (whitespace ignored, the two forms may mix).
SupportedQ parse_qspec(std::string_view text);
/// "2^7,5^5"
std::string to_string(const SupportedQ& q);

/// Every q_i divides 1 + sum q_j.
bool is_reflexive(const SupportedQ& q);
bool is_r_multiplicity(std::span<const Int> r, std::span<const Int> x);

/// (1 + qsum) / lcm(r); throws NotRMultiplicity.
Int ell(const SupportedQ& q);

/// x_i = c_i s_i + rho_i; desirable when sum rho_i r_i = -1.
struct SDivision {
  std::vector<Int> c;
  std::vector<Int> rho;
  bool desirable = false;

  friend bool operator==(const SDivision&, const SDivision&) = default;
};

/// Builds the division determined by rho (c_i = (x_i - rho_i) / s_i). Throws
/// InvalidInput when some x_i - rho_i is not a multiple of s_i.
SDivision make_division(const SupportedQ& q, std::vector<Int> rho);

/// The canonical desirable division: reduce x mod s, then move the m lowest
/// indices into [-s_i] where sum rho_i r_i = m*lcm - 1.
SDivision desirable_division(const SupportedQ& q);

/// All desirable divisions with rho_i in [0, s_i) or [-s_i, -1]; there are at
/// most 2^d of them.
std::vector<SDivision> bounded_desirable_divisions(const SupportedQ& q);

/// h*-polynomial: sum_{b=0}^{qsum} z^{w(b)}, w(b) = b - sum_i floor(b q_i / (1+qsum)).
/// Works for any q, reflexive or not.
IntPoly hstar(const SupportedQ& q);

/// g-polynomial: sum_{alpha < lcm} z^{u(alpha)},
/// u(alpha) = alpha*ell - sum_i x_i floor(alpha / s_i). Throws NotRMultiplicity.
IntPoly g_poly(const SupportedQ& q);

/// Whether residues i (i_j in [0, m_j)) satisfy gcd(m_j, m_k) | i_j - i_k for
/// every pair, which is exactly solvability of the congruence system.
bool is_crt_index(std::span<const Int> moduli, std::span<const Int> residues);

/// The unique alpha in [0, lcm(m)) with alpha = i_j mod m_j for all j, by
/// pairwise merging with the extended gcd. Throws InconsistentResidues.
Int crt_alpha(std::span<const Int> moduli, std::span<const Int> residues);

/// omega_j = floor(alpha(i) / m_j).
std::vector<Int> omega(std::span<const Int> moduli, std::span<const Int> residues);

/// g computed over the index set I(r) with the exponents
/// sum_j (c_j i_j - rho_j omega_j(i)). Throws NotDesirable.
IntPoly g_poly_via_crt(const SupportedQ& q, const SDivision& division);

/// The q with r = (a, ka-1), x = (c1(ka-1) - k, c2 a + 1) (normalized
/// ascending). Throws InvalidParameters when a < 2, k < 1, c2 < 0, or x_1 < 1.
SupportedQ two_support_q(Int a, Int k, Int c1, Int c2);

/// g for r = (a, ka-1) by the double sum over [0, ka-1) x [0, a) of
/// z^{c1 i1 + c2 i2 - floor((i1 - i2) / a)}.
IntPoly g_two_support_fast(Int a, Int k, Int c1, Int c2);

/// Appends lcm(r) with multiplicity y (merging when lcm(r) is already in
/// the support). g is unchanged and ell grows by y.
SupportedQ extend_by_lcm(const SupportedQ& q, Int y);

/// q-vector of the free sum of two reflexive simplices:
/// (p_1, ..., p_n, s q_1, ..., s q_m) with s = 1 + sum p_j.
SupportedQ free_sum(const SupportedQ& p, const SupportedQ& q);

}  // namespace ehrk
