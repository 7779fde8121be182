#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ehrk/polyring.hpp"
#include "ehrk/simplex.hpp"

namespace ehrk {

/// Product of geometric series, factors sorted ascending by (exponent, length).
/// The empty product is the constant 1.
struct GeomFactorization {
  std::vector<GeomSeries> factors;

  GeomFactorization() = default;
  explicit GeomFactorization(std::vector<GeomSeries> fs);

  IntPoly expand() const;
  /// Product of the lengths, i.e. the expansion at z = 1.
  Int value_at_one() const;

  friend bool operator==(const GeomFactorization&, const GeomFactorization&) = default;
};

/// "(1+z)(1+z+z^2)"; "1" for the empty product.
std::string to_string(const GeomFactorization& f);

/// Complete depth-first search: the smallest positive exponent of f must be
/// the exponent of some factor, lengths are tried in ascending order, and the
/// first success is returned. nullopt means no factorization exists. Throws
/// InvalidInput for a negative coefficient or constant term other than 1.
std::optional<GeomFactorization> find_geometric_factorization(const IntPoly& f);

enum class Family { Case0, Case1, Case2, Case3, Thm532Case1, Thm532Case2, Thm532Case3, Fibonacci };

std::string_view to_string(Family f) noexcept;

struct FamilyInstance {
  Family family = Family::Case0;
  std::vector<Int> params;
  SupportedQ q;
  GeomFactorization expected;
};

/// r = (1, a); x_one and x_a are the multiplicities of 1 and a. Expected g is
/// the single series of length a and exponent (x_one + 1) / a.
FamilyInstance family_case0(Int a, Int x_one, Int x_a);

/// r = (a, ka-1), x = ((ka-1)c - k, a((ka-1)c - k) + 1). With a = 2, k = 1 the
/// support contains 1 and the instance is built by family_case0.
FamilyInstance family_case1(Int a, Int k, Int c);

/// r = (a, a-1), x = ((a-1)c - 1, ac + 1). With a = 2 this is a case0 instance.
FamilyInstance family_case2(Int a, Int c);

/// r = (a, a^2-1), x = ((a^2-1)c - a, a(ac-1) + 1).
FamilyInstance family_case3(Int a, Int c);

/// r = (6, 10, 15). Case 1 is x = (4, 8, 3) and ignores c; case 2 is
/// x = (5c-1, 3c-1, 8c-1); case 3 is x = (5c-1, 9c-1, 14c-1).
FamilyInstance family_532(int which, Int c);

/// r = x = (a_{n+1}, a_n); expected (1+...+z^{a_n - 1})(1+...+z^{a_{n+1} - 1}).
FamilyInstance fibonacci_instance(Int n);

/// Whether q with r = (2, 2k-1), x = ((2k-1)c1 - k, 2c2 + 1) has a geometric
/// factorization of g. Throws InvalidParameters unless k >= 2, c1 >= 1, c2 >= 0.
bool classify_2_2km1(Int k, Int c1, Int c2);

/// Which family produces q by exact parameter solving: case0..case3 for two
/// supports (both orders of the support are tried), the (6,10,15) cases for
/// three. nullopt when nothing matches.
std::optional<Family> match_family(const SupportedQ& q);

}  // namespace ehrk
