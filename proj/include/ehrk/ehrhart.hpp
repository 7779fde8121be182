#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ehrk/polyring.hpp"
#include "ehrk/simplex.hpp"

namespace ehrk {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Polynomial in t with exact rational coefficients, coefficient i at index i.
struct RationalPoly {
  std::vector<Rational> coeffs;

  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  Rational operator()(const Rational& t) const;

  friend bool operator==(const RationalPoly&, const RationalPoly&) = default;
};

/// "3/2 t^2 + 3/2 t + 1", descending powers, zero terms omitted.
std::string to_string(const RationalPoly& p);

/// L(t) = sum_j h_j C(t + n - j, n) expanded in powers of t. Throws
/// DegreeExceedsDimension when deg h > n, InvalidInput when h(0) != 1.
RationalPoly ehrhart_from_hstar(const IntPoly& h, Int n);

/// All coefficients of the Ehrhart polynomial of conv(e_1, ..., e_n, -q) are
/// strictly positive.
bool is_ehrhart_positive(const SupportedQ& q);

/// Integer points of t conv(e_1, ..., e_n, -q) by branch and bound over the
/// box prod [-t q_i, t], with facet inequalities from exact linear solves.
/// Throws ScaleExceeded beyond n <= 6, t <= 5.
Int count_lattice_points(const SupportedQ& q, Int t);

/// Integer points strictly inside t conv(e_1, ..., e_n, -q); same limits.
Int count_interior_lattice_points(const SupportedQ& q, Int t);

}  // namespace ehrk
