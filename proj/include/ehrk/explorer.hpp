#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ehrk/factorizer.hpp"
#include "ehrk/polyring.hpp"
#include "ehrk/simplex.hpp"

namespace ehrk {

/// Worker count from EHRK_THREADS, else the hardware concurrency (at least 1).
unsigned default_worker_count();

struct SearchRecord {
  SupportedQ q;
  bool reflexive = false;
  Int ell = 0;
  bool kronecker = false;
  /// Cyclotomic factors of h* when Kronecker.
  std::optional<CyclotomicMultiset> cyclotomics;
  std::optional<GeomFactorization> geom_fact_hstar;
  std::optional<GeomFactorization> geom_fact_g;
  /// A family name, "exceptional" for unmatched Kronecker instances, "none"
  /// otherwise.
  std::string family_tag;

  friend bool operator==(const SearchRecord&, const SearchRecord&) = default;
};

/// Full classification of one reflexive q. Throws NotRMultiplicity.
SearchRecord classify_q(const SupportedQ& q);

/// Every reflexive q on r_1 < r_2 <= r_max with multiplicities <= x_max,
/// sorted by (r, x). workers == 0 means default_worker_count().
std::vector<SearchRecord> search_two_support(Int r_max, Int x_max, unsigned workers = 0);

/// Kronecker records of search_two_support whose h* has no geometric factorization.
std::vector<SearchRecord> find_kronecker_without_geomfact(Int r_max, Int x_max, unsigned workers = 0);

/// Kronecker records over r_j = prod_{j' != j} s_{j'} for pairwise coprime
/// s_1 > s_2 > s_3 >= 2 with s_1 <= s_max and multiplicities <= x_max.
std::vector<SearchRecord> search_three_support(Int s_max, Int x_max, unsigned workers = 0);

struct VerificationReport {
  Int checks = 0;
  std::vector<std::string> failures;

  bool ok() const noexcept { return failures.empty(); }
};

/// classify_2_2km1 against the factorization search for 2 <= k <= k_max,
/// 1 <= c1 <= c_max, 0 <= c2 <= c_max.
VerificationReport verify_classification_2odd(Int k_max, Int c_max, unsigned workers = 0);

struct FamilyBounds {
  Int a_max = 6;
  Int k_max = 4;
  Int c_max = 5;
  Int n_max = 5;
  Int c532_max = 4;
};

/// Every family instance in range: expected expansion equals g and g is Kronecker.
VerificationReport verify_family_theorems(const FamilyBounds& bounds);

/// Every q on one or two support values <= r_max with multiplicities <= x_max,
/// reflexive or not, has a positive Ehrhart polynomial.
VerificationReport verify_ehrhart_positivity(Int r_max, Int x_max, unsigned workers = 0);

struct FibReport {
  Int n = 0;
  bool identities_ok = false;
  bool factorization_ok = false;
  bool shift_ok = false;
  bool boundary_ok = false;
  bool stability_ok = false;
  /// u(alpha(i1, i2)) for i1 < a_n (rows), i2 < a_{n+1} (columns).
  std::vector<std::vector<Int>> u_table;

  bool all_ok() const noexcept { return identities_ok && factorization_ok && shift_ok && boundary_ok && stability_ok; }
  friend bool operator==(const FibReport&, const FibReport&) = default;
};

/// u(alpha(i1, i2)) for r = x = (a_{n+1}, a_n) from the definition of g.
std::vector<std::vector<Int>> fib_u_table(Int n);

std::vector<FibReport> verify_fibonacci(Int n_max, unsigned workers = 0);

struct Table1Row {
  Int r1 = 0, r2 = 0, x1 = 0, x2 = 0;
  std::string column;
};

/// The exceptional pairs of the two-support search table (29 rows).
const std::vector<Table1Row>& table1_rows();

struct Table1Diff {
  std::vector<SupportedQ> matched;
  std::vector<SupportedQ> missing;
  std::vector<SupportedQ> extra;

  bool exact() const noexcept { return missing.empty() && extra.empty(); }
};

/// Compares the "exceptional" records against the table rows with
/// r_2 <= r_max and x_i <= x_max.
Table1Diff diff_table1(const std::vector<SearchRecord>& records, Int r_max, Int x_max);

}  // namespace ehrk
