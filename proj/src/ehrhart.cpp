#include "ehrk/ehrhart.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace ehrk {

namespace {

struct BinomialBasis {
  BigInt factorial;
  // rows[j] holds the coefficients of (t+n-j)(t+n-j-1)...(t+1-j) = n! C(t+n-j, n).
  std::vector<std::vector<BigInt>> rows;
};

BinomialBasis build_basis(Int n) {
  BinomialBasis basis;
  basis.factorial = 1;
  for (Int i = 2; i <= n; ++i) basis.factorial *= i;
  basis.rows.resize(static_cast<std::size_t>(n + 1));
  for (Int j = 0; j <= n; ++j) {
    std::vector<BigInt> poly{1};
    for (Int i = 0; i < n; ++i) {
      const Int shift = n - j - i;
      std::vector<BigInt> next(poly.size() + 1, 0);
      for (std::size_t p = 0; p < poly.size(); ++p) {
        next[p + 1] += poly[p];
        next[p] += poly[p] * shift;
      }
      poly = std::move(next);
    }
    basis.rows[static_cast<std::size_t>(j)] = std::move(poly);
  }
  return basis;
}

const BinomialBasis& basis_for(Int n) {
  static std::mutex mutex;
  static std::map<Int, std::unique_ptr<BinomialBasis>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<BinomialBasis>(build_basis(n));
  return *slot;
}

// n! L(t) as integer coefficients.
std::vector<BigInt> scaled_ehrhart(const IntPoly& h, Int n, const BinomialBasis& basis) {
  std::vector<BigInt> acc(static_cast<std::size_t>(n + 1), 0);
  for (Int j = 0; j <= h.degree(); ++j) {
    const Coeff hj = h[static_cast<std::size_t>(j)];
    if (hj == 0) continue;
    const auto& row = basis.rows[static_cast<std::size_t>(j)];
    for (std::size_t p = 0; p < row.size(); ++p) acc[p] += row[p] * hj;
  }
  return acc;
}

void check_hstar(const IntPoly& h, Int n) {
  if (n < 0) throw Error(Errc::InvalidInput, "dimension must be nonnegative");
  if (h.degree() > n) throw Error(Errc::DegreeExceedsDimension, "h* degree exceeds the dimension");
  if (h[0] != 1) throw Error(Errc::InvalidInput, "h* must have constant term 1");
}

// a with a . v = 1 for every row v of m (m square, nonsingular).
std::vector<Rational> solve_unit_rhs(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  for (auto& row : m) row.push_back(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) throw Error(Errc::InvalidInput, "degenerate simplex");
    std::swap(m[pivot], m[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c <= n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  std::vector<Rational> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = m[i][n] / m[i][i];
  return a;
}

struct Facet {
  std::vector<Int> normal;
  Int bound = 0;  // normal . x <= bound * t
};

std::vector<Facet> facets_of(const std::vector<Int>& q) {
  const std::size_t n = q.size();
  std::vector<std::vector<Rational>> vertices;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> e(n, 0);
    e[i] = 1;
    vertices.push_back(std::move(e));
  }
  std::vector<Rational> apex;
  for (Int v : q) apex.emplace_back(-v);
  vertices.push_back(std::move(apex));

  std::vector<Facet> out;
  for (std::size_t skip = 0; skip <= n; ++skip) {
    std::vector<std::vector<Rational>> rows;
    for (std::size_t v = 0; v <= n; ++v)
      if (v != skip) rows.push_back(vertices[v]);
    auto a = solve_unit_rhs(std::move(rows));
    BigInt den = 1;
    for (const auto& c : a) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(c));
    Facet f;
    for (const auto& c : a) f.normal.push_back(static_cast<Int>(boost::multiprecision::numerator(c) * (den / boost::multiprecision::denominator(c))));
    f.bound = static_cast<Int>(den);
    out.push_back(std::move(f));
  }
  return out;
}

struct Scan {
  const std::vector<Facet>& facets;
  std::vector<Int> lo, hi, rhs;
  std::vector<std::vector<Int>> rest_min;  // rest_min[k][i]: least contribution of coordinates i.. to facet k
  Int count = 0;

  void run(std::size_t i, std::vector<Int>& partial) {
    const std::size_t n = lo.size();
    for (std::size_t k = 0; k < facets.size(); ++k)
      if (partial[k] + rest_min[k][i] > rhs[k]) return;
    if (i == n) {
      ++count;
      return;
    }
    for (Int v = lo[i]; v <= hi[i]; ++v) {
      for (std::size_t k = 0; k < facets.size(); ++k) partial[k] += facets[k].normal[i] * v;
      run(i + 1, partial);
      for (std::size_t k = 0; k < facets.size(); ++k) partial[k] -= facets[k].normal[i] * v;
    }
  }
};

}  // namespace

Rational RationalPoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::string to_string(const RationalPoly& p) {
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p.coeffs[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string term = mag.str();
    if (i == 0)
      out += term;
    else {
      if (mag != 1) out += term + " ";
      out += i == 1 ? "t" : "t^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

RationalPoly ehrhart_from_hstar(const IntPoly& h, Int n) {
  check_hstar(h, n);
  const auto& basis = basis_for(n);
  auto scaled = scaled_ehrhart(h, n, basis);
  RationalPoly out;
  out.coeffs.reserve(scaled.size());
  for (auto& c : scaled) out.coeffs.emplace_back(c, basis.factorial);
  while (!out.coeffs.empty() && out.coeffs.back() == 0) out.coeffs.pop_back();
  return out;
}

bool is_ehrhart_positive(const SupportedQ& q) {
  const IntPoly h = hstar(q);
  const Int n = q.dimension();
  check_hstar(h, n);
  auto scaled = scaled_ehrhart(h, n, basis_for(n));
  for (const auto& c : scaled)
    if (c <= 0) return false;
  return true;
}

namespace {

Int count_points(const SupportedQ& q, Int t, bool interior) {
  const Int n = q.dimension();
  if (t < 0) throw Error(Errc::InvalidInput, "dilation must be nonnegative");
  if (n > 6 || t > 5) throw Error(Errc::ScaleExceeded, "lattice count oracle limited to n <= 6, t <= 5");
  const std::vector<Int> qv = q.expand();
  long double box = 1;
  for (Int v : qv) box *= static_cast<long double>(t * (v + 1) + 1);
  if (box > 1e13L) throw Error(Errc::ScaleExceeded, "bounding box too large");

  const auto facets = facets_of(qv);
  Scan scan{facets, {}, {}, {}, {}, 0};
  for (Int v : qv) {
    scan.lo.push_back(-t * v);
    scan.hi.push_back(t);
  }
  for (const auto& f : facets) {
    scan.rhs.push_back(checked_mul(f.bound, t) - (interior ? 1 : 0));
    std::vector<Int> suffix(static_cast<std::size_t>(n) + 1, 0);
    for (Int i = n - 1; i >= 0; --i) {
      const auto u = static_cast<std::size_t>(i);
      suffix[u] = suffix[u + 1] + std::min(f.normal[u] * scan.lo[u], f.normal[u] * scan.hi[u]);
    }
    scan.rest_min.push_back(std::move(suffix));
  }
  std::vector<Int> partial(facets.size(), 0);
  scan.run(0, partial);
  return scan.count;
}

}  // namespace

Int count_lattice_points(const SupportedQ& q, Int t) { return count_points(q, t, false); }

Int count_interior_lattice_points(const SupportedQ& q, Int t) { return count_points(q, t, true); }

}  // namespace ehrk
