#include "ehrk/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

namespace ehrk {

IntPoly::IntPoly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }

IntPoly IntPoly::constant(Coeff c) { return IntPoly(std::vector<Coeff>{c}); }

IntPoly IntPoly::monomial(Coeff c, std::size_t exponent) {
  std::vector<Coeff> v(exponent + 1, 0);
  v[exponent] = c;
  return IntPoly(std::move(v));
}

bool IntPoly::has_nonnegative_coeffs() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Coeff c) { return c >= 0; });
}

void IntPoly::trim() noexcept {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Coeff> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_add(a[i], b[i]);
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Coeff> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_sub(a[i], b[i]);
  return IntPoly(std::move(out));
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  std::vector<Coeff> out(ac.size() + bc.size() - 1, 0);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) {
      if (bc[j] == 0) continue;
      out[i + j] = checked_add(out[i + j], checked_mul(ac[i], bc[j]));
    }
  }
  return IntPoly(std::move(out));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) { return poly_mul(a, b); }

std::optional<IntPoly> poly_exact_div(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  if (a.is_zero()) return IntPoly{};
  if (a.degree() < b.degree()) return std::nullopt;

  const auto& bc = b.coeffs();
  const int db = b.degree();
  const Coeff lead = b.leading();
  std::vector<Coeff> rem = a.coeffs();
  std::vector<Coeff> quot(static_cast<std::size_t>(a.degree() - db + 1), 0);

  // Nonzero positions of the divisor below its leading term.
  std::vector<int> support;
  for (int j = 0; j < db; ++j)
    if (bc[j] != 0) support.push_back(j);

  for (int i = a.degree() - db; i >= 0; --i) {
    Coeff top = rem[i + db];
    if (top == 0) continue;
    if (top % lead != 0) return std::nullopt;
    Coeff q = top / lead;
    quot[i] = q;
    rem[i + db] = 0;
    for (int j : support) rem[i + j] = checked_sub(rem[i + j], checked_mul(q, bc[j]));
  }
  for (int j = 0; j < db; ++j)
    if (rem[j] != 0) return std::nullopt;
  return IntPoly(std::move(quot));
}

Coeff eval_at(const IntPoly& f, Coeff t) {
  Coeff acc = 0;
  const auto& c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = checked_add(checked_mul(acc, t), *it);
  return acc;
}

IntPoly geometric_series(Int exponent, Int length) {
  if (exponent < 1 || length < 2)
    throw Error(Errc::InvalidInput, "geometric series needs exponent >= 1 and length >= 2");
  std::vector<Coeff> v(static_cast<std::size_t>(checked_mul(length - 1, exponent) + 1), 0);
  for (Int i = 0; i < length; ++i) v[static_cast<std::size_t>(i * exponent)] = 1;
  return IntPoly(std::move(v));
}

Int euler_phi(Int d) {
  if (d < 1) throw Error(Errc::InvalidInput, "euler_phi needs d >= 1");
  Int result = d;
  for (Int p = 2; p * p <= d; ++p) {
    if (d % p == 0) {
      while (d % p == 0) d /= p;
      result -= result / p;
    }
  }
  if (d > 1) result -= result / d;
  return result;
}

namespace {

std::vector<Int> primes_up_to(Int n) {
  std::vector<bool> composite(static_cast<std::size_t>(n + 1), false);
  std::vector<Int> primes;
  for (Int i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (Int j = i * i; j <= n; j += i) composite[j] = true;
  }
  return primes;
}

// Builds every d whose totient stays within the budget by choosing prime
// powers in increasing prime order.
void collect_totient_preimages(const std::vector<Int>& primes, std::size_t start, Int d, Int phi,
                               Int budget, std::vector<Int>& out) {
  out.push_back(d);
  for (std::size_t i = start; i < primes.size(); ++i) {
    const Int p = primes[i];
    Int next_phi = phi * (p - 1);
    if (next_phi > budget) break;
    Int next_d = d * p;
    while (next_phi <= budget) {
      collect_totient_preimages(primes, i + 1, next_d, next_phi, budget, out);
      next_phi *= p;
      next_d *= p;
    }
  }
}

Int mobius(Int n) {
  Int result = 1;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

IntPoly compute_cyclotomic(Int d) {
  if (d == 1) return IntPoly{-1, 1};
  // Phi_d = prod_{e | d} (1 - z^e)^{mu(d/e)} for d > 1.
  std::vector<Int> numer, denom;
  for (Int e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    Int mu = mobius(d / e);
    if (mu == 1) numer.push_back(e);
    if (mu == -1) denom.push_back(e);
  }
  std::vector<Coeff> p{1};
  for (Int e : numer) {
    std::vector<Coeff> next(p.size() + static_cast<std::size_t>(e), 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i] = checked_add(next[i], p[i]);
      next[i + e] = checked_sub(next[i + e], p[i]);
    }
    p = std::move(next);
  }
  for (Int e : denom) {
    // Series division by (1 - z^e): q_i = p_i + q_{i-e}.
    std::vector<Coeff> q(p.size() - static_cast<std::size_t>(e), 0);
    for (std::size_t i = 0; i < q.size(); ++i)
      q[i] = i >= static_cast<std::size_t>(e) ? checked_add(p[i], q[i - e]) : p[i];
    p = std::move(q);
  }
  return IntPoly(std::move(p));
}

struct CyclotomicCache {
  std::shared_mutex mutex;
  std::unordered_map<Int, std::unique_ptr<IntPoly>> polys;
};

CyclotomicCache& cyclotomic_cache() {
  static CyclotomicCache cache;
  return cache;
}

// Modular pre-filter for Phi_d | f: a prime p = 1 (mod d) and an element w of
// exact multiplicative order d. If Phi_d divides f over Z then f(w) = 0 mod p,
// so a nonzero evaluation rules d out without a full division.
struct RootOfUnityModP {
  std::uint64_t p = 0;
  std::uint64_t w = 0;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) { return (a * b) % m; }

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime_u32(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2ULL, 7ULL, 61ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::vector<Int> prime_factors(Int n) {
  std::vector<Int> out;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

RootOfUnityModP find_root_of_unity(Int d) {
  // Primes below 2^31 keep products inside 64 bits.
  constexpr std::uint64_t kLow = 1ULL << 30;
  const auto ud = static_cast<std::uint64_t>(d);
  const auto factors = prime_factors(d);
  for (std::uint64_t k = kLow / ud + 1;; ++k) {
    std::uint64_t p = k * ud + 1;
    if (p >= (1ULL << 31)) throw Error(Errc::Overflow, "no 31-bit prime for cyclotomic filter");
    if (!is_prime_u32(p)) continue;
    for (std::uint64_t a = 2; a < 200; ++a) {
      std::uint64_t w = powmod(a, (p - 1) / ud, p);
      bool primitive = w != 1 || d == 1;
      for (Int q : factors) {
        if (powmod(w, ud / static_cast<std::uint64_t>(q), p) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) return {p, w};
    }
  }
}

struct RootCache {
  std::shared_mutex mutex;
  std::unordered_map<Int, RootOfUnityModP> roots;
};

RootOfUnityModP root_of_unity(Int d) {
  static RootCache cache;
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.roots.find(d);
    if (it != cache.roots.end()) return it->second;
  }
  RootOfUnityModP root = find_root_of_unity(d);
  std::unique_lock lock(cache.mutex);
  cache.roots.emplace(d, root);
  return root;
}

bool vanishes_mod_p(const std::vector<Coeff>& coeffs, RootOfUnityModP root) {
  const auto p = static_cast<Int>(root.p);
  std::uint64_t acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    auto c = static_cast<std::uint64_t>(mod_floor(*it, p));
    acc = (mulmod(acc, root.w, root.p) + c) % root.p;
  }
  return acc == 0;
}

struct TotientTable {
  std::mutex mutex;
  Int budget = 0;
  std::vector<std::pair<Int, Int>> entries;  // (d, phi(d)) sorted by d
};

}  // namespace

std::vector<Int> indices_with_totient_at_most(Int max_degree) {
  static TotientTable table;
  std::lock_guard lock(table.mutex);
  if (max_degree > table.budget) {
    // The largest prime that can appear has p - 1 <= budget.
    const auto primes = primes_up_to(max_degree + 1);
    std::vector<Int> ds;
    collect_totient_preimages(primes, 0, 1, 1, max_degree, ds);
    std::sort(ds.begin(), ds.end());
    table.entries.clear();
    for (Int d : ds) table.entries.emplace_back(d, euler_phi(d));
    table.budget = max_degree;
  }
  std::vector<Int> out;
  for (const auto& [d, phi] : table.entries)
    if (phi <= max_degree) out.push_back(d);
  return out;
}

const IntPoly& cyclotomic(Int d) {
  if (d < 1) throw Error(Errc::InvalidInput, "cyclotomic index must be >= 1");
  auto& cache = cyclotomic_cache();
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.polys.find(d);
    if (it != cache.polys.end()) return *it->second;
  }
  auto poly = std::make_unique<IntPoly>(compute_cyclotomic(d));
  std::unique_lock lock(cache.mutex);
  auto [it, inserted] = cache.polys.emplace(d, std::move(poly));
  return *it->second;
}

IntPoly expand(const CyclotomicMultiset& factors) {
  IntPoly acc = IntPoly::constant(1);
  for (const auto& f : factors)
    for (Int i = 0; i < f.multiplicity; ++i) acc = poly_mul(acc, cyclotomic(f.d));
  return acc;
}

CyclotomicMultiset merge(const CyclotomicMultiset& a, const CyclotomicMultiset& b) {
  std::map<Int, Int> counts;
  for (const auto& f : a) counts[f.d] += f.multiplicity;
  for (const auto& f : b) counts[f.d] += f.multiplicity;
  CyclotomicMultiset out;
  for (const auto& [d, m] : counts) out.push_back({d, m});
  return out;
}

KroneckerResult is_kronecker(const IntPoly& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "is_kronecker of the zero polynomial");
  if (!f.is_monic()) return {};
  if (f.is_one()) return {true, CyclotomicMultiset{}};
  // Every cyclotomic factor has constant term +-1.
  if (f[0] != 1 && f[0] != -1) return {};

  IntPoly rest = f;
  CyclotomicMultiset factors;
  for (Int d : indices_with_totient_at_most(f.degree())) {
    const Int phi = euler_phi(d);
    if (phi > rest.degree()) continue;
    const RootOfUnityModP root = root_of_unity(d);
    Int count = 0;
    while (rest.degree() >= phi && vanishes_mod_p(rest.coeffs(), root)) {
      auto q = poly_exact_div(rest, cyclotomic(d));
      if (!q) break;
      rest = std::move(*q);
      ++count;
    }
    if (count > 0) factors.push_back({d, count});
    if (rest.is_one()) return {true, std::move(factors)};
  }
  return {};
}

std::string to_string(const IntPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    Coeff c = f[i];
    if (c == 0) continue;
    Coeff mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag;
    out << "z";
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

std::string to_string(const CyclotomicMultiset& m) {
  if (m.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i > 0) out << "*";
    out << "Phi" << m[i].d;
    if (m[i].multiplicity > 1) out << "^" << m[i].multiplicity;
  }
  return out.str();
}

IntPoly parse_coeff_list(const std::string& text) {
  std::vector<Coeff> coeffs;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char ch) { return std::isspace(ch); }),
                token.end());
    if (token.empty()) throw Error(Errc::InvalidInput, "empty coefficient in '" + text + "'");
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(token, &used);
    } catch (const std::exception&) {
      throw Error(Errc::InvalidInput, "bad coefficient '" + token + "'");
    }
    if (used != token.size()) throw Error(Errc::InvalidInput, "bad coefficient '" + token + "'");
    coeffs.push_back(v);
  }
  if (coeffs.empty()) throw Error(Errc::EmptyInput, "empty coefficient list");
  return IntPoly(std::move(coeffs));
}

}  // namespace ehrk
