#include "ehrk/factorizer.hpp"

#include <algorithm>
#include <array>

#include "ehrk/sequences.hpp"

namespace ehrk {

namespace {

std::vector<GeomSeries> drop_trivial(std::vector<GeomSeries> fs) {
  std::erase_if(fs, [](const GeomSeries& g) { return g.length == 1; });
  return fs;
}

// f / (1 + z^e + ... + z^{(gamma-1)e}) when exact with nonnegative
// coefficients, via f (1 - z^e) = q (1 - z^{gamma e}).
std::optional<IntPoly> divide_series(const std::vector<Coeff>& f, Int e, Int gamma) {
  const Int deg = static_cast<Int>(f.size()) - 1;
  const Int span = e * gamma;
  const Int qdeg = deg - (gamma - 1) * e;
  const Int top = deg + e;
  std::vector<Coeff> q(static_cast<std::size_t>(top + 1), 0);
  for (Int i = 0; i <= top; ++i) {
    Coeff h = (i <= deg ? f[static_cast<std::size_t>(i)] : 0) - (i >= e && i - e <= deg ? f[static_cast<std::size_t>(i - e)] : 0);
    Coeff v = i >= span ? checked_add(h, q[static_cast<std::size_t>(i - span)]) : h;
    if (i <= qdeg) {
      if (v < 0) return std::nullopt;
    } else if (v != 0) {
      return std::nullopt;
    }
    q[static_cast<std::size_t>(i)] = v;
  }
  q.resize(static_cast<std::size_t>(qdeg + 1));
  return IntPoly(std::move(q));
}

bool search(const IntPoly& f, std::vector<GeomSeries>& acc) {
  if (f.is_one()) return true;
  const auto& c = f.coeffs();
  Int e = 1;
  while (c[static_cast<std::size_t>(e)] == 0) ++e;
  Int total = 0;
  for (Coeff v : c) total = checked_add(total, v);
  const Int deg = f.degree();
  for (Int gamma = 2; gamma <= total && (gamma - 1) * e <= deg; ++gamma) {
    if (total % gamma != 0) continue;
    auto q = divide_series(c, e, gamma);
    if (!q) continue;
    acc.push_back({e, gamma});
    if (search(*q, acc)) return true;
    acc.pop_back();
  }
  return false;
}

Int positive_quotient(Int num, Int den) {
  if (den <= 0 || num <= 0 || num % den != 0) return 0;
  return num / den;
}

}  // namespace

GeomFactorization::GeomFactorization(std::vector<GeomSeries> fs) : factors(std::move(fs)) {
  for (const auto& g : factors)
    if (g.exponent < 1 || g.length < 2) throw Error(Errc::InvalidInput, "geometric series needs exponent >= 1 and length >= 2");
  std::sort(factors.begin(), factors.end());
}

IntPoly GeomFactorization::expand() const {
  IntPoly out = IntPoly::constant(1);
  for (const auto& g : factors) out = poly_mul(out, g.expand());
  return out;
}

Int GeomFactorization::value_at_one() const {
  Int v = 1;
  for (const auto& g : factors) v = checked_mul(v, g.length);
  return v;
}

std::string to_string(const GeomFactorization& f) {
  if (f.factors.empty()) return "1";
  std::string out;
  for (const auto& g : f.factors) {
    out += "(1";
    for (Int j = 1; j < g.length; ++j) {
      Int power = j * g.exponent;
      out += power == 1 ? "+z" : "+z^" + std::to_string(power);
    }
    out += ')';
  }
  return out;
}

std::optional<GeomFactorization> find_geometric_factorization(const IntPoly& f) {
  if (f.is_zero() || f[0] != 1) throw Error(Errc::InvalidInput, "factorization needs constant term 1");
  if (!f.has_nonnegative_coeffs()) throw Error(Errc::InvalidInput, "factorization needs nonnegative coefficients");
  std::vector<GeomSeries> acc;
  if (!search(f, acc)) return std::nullopt;
  return GeomFactorization(std::move(acc));
}

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::Case0: return "case0";
    case Family::Case1: return "case1";
    case Family::Case2: return "case2";
    case Family::Case3: return "case3";
    case Family::Thm532Case1: return "thm532-1";
    case Family::Thm532Case2: return "thm532-2";
    case Family::Thm532Case3: return "thm532-3";
    case Family::Fibonacci: return "fib";
  }
  return "unknown";
}

FamilyInstance family_case0(Int a, Int x_one, Int x_a) {
  if (a < 2 || x_one < 1 || x_a < 1) throw Error(Errc::InvalidParameters, "case0 needs a >= 2 and positive multiplicities");
  SupportedQ q({1, a}, {x_one, x_a});
  if (!is_r_multiplicity(q.r(), q.x())) throw Error(Errc::NotRMultiplicity, to_string(q) + " is not an R-multiplicity");
  Int c1 = (x_one + 1) / a;
  return {Family::Case0, {a, x_one, x_a}, q, GeomFactorization({{c1, a}})};
}

FamilyInstance family_case1(Int a, Int k, Int c) {
  if (a < 2 || k < 1 || c < 1) throw Error(Errc::InvalidParameters, "case1 needs a >= 2, k >= 1, c >= 1");
  const Int b = checked_sub(checked_mul(k, a), 1);
  const Int xa = checked_sub(checked_mul(b, c), k);
  const Int xb = checked_add(checked_mul(a, xa), 1);
  if (xa < 1) throw Error(Errc::InvalidParameters, "case1 multiplicity (ka-1)c - k must be positive");
  if (b == 1) {
    auto inst = family_case0(a, xb, xa);
    inst.params = {a, k, c};
    return inst;
  }
  return {Family::Case1, {a, k, c}, SupportedQ({a, b}, {xa, xb}),
          GeomFactorization(drop_trivial({{c, a}, {checked_sub(checked_mul(a, c), 1), b}}))};
}

FamilyInstance family_case2(Int a, Int c) {
  if (a < 2 || c < 1) throw Error(Errc::InvalidParameters, "case2 needs a >= 2, c >= 1");
  const Int xa = checked_sub(checked_mul(a - 1, c), 1);
  const Int xb = checked_add(checked_mul(a, c), 1);
  if (xa < 1) throw Error(Errc::InvalidParameters, "case2 multiplicity (a-1)c - 1 must be positive");
  if (a == 2) {
    auto inst = family_case0(2, xb, xa);
    inst.params = {a, c};
    return inst;
  }
  std::vector<GeomSeries> fs{{c + 1, 2}, {c, 2 * ((a - 1) / 2) + 1}, {2 * c, a / 2}};
  return {Family::Case2, {a, c}, SupportedQ({a, a - 1}, {xa, xb}), GeomFactorization(drop_trivial(std::move(fs)))};
}

FamilyInstance family_case3(Int a, Int c) {
  if (a < 2 || c < 1) throw Error(Errc::InvalidParameters, "case3 needs a >= 2, c >= 1");
  const Int b = checked_sub(checked_mul(a, a), 1);
  const Int xa = checked_sub(checked_mul(b, c), a);
  const Int xb = checked_add(checked_mul(a, checked_sub(checked_mul(a, c), 1)), 1);
  std::vector<GeomSeries> fs{{a * c - 1, a}, {c, a + 1}, {a * c + c - 1, a - 1}};
  return {Family::Case3, {a, c}, SupportedQ({a, b}, {xa, xb}), GeomFactorization(drop_trivial(std::move(fs)))};
}

FamilyInstance family_532(int which, Int c) {
  if (which == 1)
    return {Family::Thm532Case1, {1, 1}, SupportedQ({6, 10, 15}, {4, 8, 3}), GeomFactorization({{3, 2}, {2, 3}, {1, 5}})};
  if (c < 1) throw Error(Errc::InvalidParameters, "family 532 needs c >= 1");
  if (which == 2)
    return {Family::Thm532Case2, {2, c}, SupportedQ({6, 10, 15}, {5 * c - 1, 3 * c - 1, 8 * c - 1}),
            GeomFactorization({{4 * c - 1, 2}, {c, 3}, {c, 5}})};
  if (which == 3)
    return {Family::Thm532Case3, {3, c}, SupportedQ({6, 10, 15}, {5 * c - 1, 9 * c - 1, 14 * c - 1}),
            GeomFactorization({{7 * c - 1, 2}, {3 * c, 3}, {c, 5}})};
  throw Error(Errc::InvalidParameters, "family 532 case must be 1, 2 or 3");
}

FamilyInstance fibonacci_instance(Int n) {
  if (n < 0) throw Error(Errc::InvalidParameters, "fibonacci index must be nonnegative");
  const Int lo = fib_sequence(n), hi = fib_sequence(n + 1);
  return {Family::Fibonacci, {n}, SupportedQ({hi, lo}, {hi, lo}), GeomFactorization(drop_trivial({{1, lo}, {1, hi}}))};
}

bool classify_2_2km1(Int k, Int c1, Int c2) {
  if (k < 2 || c1 < 1 || c2 < 0) throw Error(Errc::InvalidParameters, "classification needs k >= 2, c1 >= 1, c2 >= 0");
  if (k == 5 && c1 == 1 && c2 == 1) return true;
  if (k == 2 && (c1 == 2 * (c2 + 1) || (c2 == c1 - 2 && c1 >= 2) || c2 + 1 == 2 * c1)) return true;
  return c2 == (2 * k - 1) * c1 - k;
}

namespace {

std::optional<Family> match_532(const SupportedQ& q) {
  if (q.r() != std::vector<Int>{6, 10, 15}) return std::nullopt;
  const auto& x = q.x();
  if (x == std::vector<Int>{4, 8, 3}) return Family::Thm532Case1;
  Int c = positive_quotient(x[0] + 1, 5);
  if (c == 0) return std::nullopt;
  if (x[1] == 3 * c - 1 && x[2] == 8 * c - 1) return Family::Thm532Case2;
  if (x[1] == 9 * c - 1 && x[2] == 14 * c - 1) return Family::Thm532Case3;
  return std::nullopt;
}

}  // namespace

std::optional<Family> match_family(const SupportedQ& q) {
  if (q.support_size() == 3) return match_532(q);
  if (q.support_size() != 2) return std::nullopt;
  if (q.r()[0] == 1) return Family::Case0;
  const std::array<std::array<Int, 4>, 2> orders{{{q.r()[0], q.x()[0], q.r()[1], q.x()[1]},
                                                  {q.r()[1], q.x()[1], q.r()[0], q.x()[0]}}};
  for (const auto& [A, xA, B, xB] : orders) {
    if (xB != A * xA + 1) continue;
    if ((B + 1) % A == 0) {
      Int k = (B + 1) / A;
      if (positive_quotient(xA + k, B) > 0) return Family::Case1;
    }
  }
  for (const auto& [A, xA, B, xB] : orders) {
    if (B == A - 1) {
      Int c = positive_quotient(xA + 1, A - 1);
      if (c > 0 && xB == A * c + 1) return Family::Case2;
    }
  }
  for (const auto& [A, xA, B, xB] : orders) {
    if (B == A * A - 1) {
      Int c = positive_quotient(xA + A, B);
      if (c > 0 && xB == A * (A * c - 1) + 1) return Family::Case3;
    }
  }
  return std::nullopt;
}

}  // namespace ehrk
