#include "ehrk/simplex.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <string>

namespace ehrk {

namespace {

IntPoly from_exponent_counts(std::vector<Coeff> counts) { return IntPoly(std::move(counts)); }

void bump(std::vector<Coeff>& counts, Int exponent) {
  if (exponent < 0) throw Error(Errc::InvalidInput, "negative exponent " + std::to_string(exponent));
  auto e = static_cast<std::size_t>(exponent);
  if (e >= counts.size()) counts.resize(e + 1, 0);
  ++counts[e];
}

Int parse_positive(std::string_view token, std::string_view whole) {
  if (token.empty()) throw Error(Errc::InvalidInput, "malformed q-spec '" + std::string(whole) + "'");
  Int value = 0;
  for (char ch : token) {
    if (ch < '0' || ch > '9') throw Error(Errc::InvalidInput, "malformed q-spec '" + std::string(whole) + "'");
    value = checked_add(checked_mul(value, 10), ch - '0');
  }
  if (value <= 0) throw Error(Errc::InvalidInput, "q-spec entries must be positive");
  return value;
}

}  // namespace

SupportedQ::SupportedQ(std::vector<Int> r, std::vector<Int> x) {
  if (r.size() != x.size()) throw Error(Errc::LengthMismatch, "support and multiplicities differ in length");
  if (r.empty()) throw Error(Errc::EmptyInput, "empty support");
  std::vector<std::size_t> order(r.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return r[a] < r[b]; });
  r_.reserve(r.size());
  x_.reserve(x.size());
  for (std::size_t i : order) {
    if (r[i] <= 0) throw Error(Errc::InvalidInput, "support entries must be positive");
    if (x[i] <= 0) throw Error(Errc::InvalidInput, "multiplicities must be positive");
    if (!r_.empty() && r_.back() == r[i]) throw Error(Errc::InvalidInput, "repeated support entry " + std::to_string(r[i]));
    r_.push_back(r[i]);
    x_.push_back(x[i]);
  }
  lcm_ = lcm_of(r_);
  s_.reserve(r_.size());
  for (std::size_t i = 0; i < r_.size(); ++i) {
    s_.push_back(lcm_ / r_[i]);
    dimension_ = checked_add(dimension_, x_[i]);
    qsum_ = checked_add(qsum_, checked_mul(x_[i], r_[i]));
  }
}

std::vector<Int> SupportedQ::expand() const {
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(dimension_));
  for (std::size_t i = 0; i < r_.size(); ++i) out.insert(out.end(), static_cast<std::size_t>(x_[i]), r_[i]);
  return out;
}

SupportedQ support(std::span<const Int> q) {
  if (q.empty()) throw Error(Errc::EmptyInput, "empty q-vector");
  std::map<Int, Int> counts;
  for (Int v : q) {
    if (v <= 0) throw Error(Errc::InvalidInput, "q entries must be positive");
    ++counts[v];
  }
  std::vector<Int> r, x;
  for (auto [value, mult] : counts) {
    r.push_back(value);
    x.push_back(mult);
  }
  return SupportedQ(std::move(r), std::move(x));
}

SupportedQ parse_qspec(std::string_view text) {
  std::string compact;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  if (compact.empty()) throw Error(Errc::EmptyInput, "empty q-spec");
  std::map<Int, Int> counts;
  std::string_view rest = compact;
  while (true) {
    auto comma = rest.find(',');
    std::string_view token = rest.substr(0, comma);
    auto caret = token.find('^');
    Int value = parse_positive(token.substr(0, caret), text);
    Int mult = caret == std::string_view::npos ? 1 : parse_positive(token.substr(caret + 1), text);
    counts[value] = checked_add(counts[value], mult);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  std::vector<Int> r, x;
  for (auto [value, mult] : counts) {
    r.push_back(value);
    x.push_back(mult);
  }
  return SupportedQ(std::move(r), std::move(x));
}

std::string to_string(const SupportedQ& q) {
  std::string out;
  for (std::size_t i = 0; i < q.support_size(); ++i) {
    if (i) out += ',';
    out += std::to_string(q.r()[i]) + '^' + std::to_string(q.x()[i]);
  }
  return out;
}

bool is_reflexive(const SupportedQ& q) {
  Int total = checked_add(q.qsum(), 1);
  return std::all_of(q.r().begin(), q.r().end(), [&](Int r) { return total % r == 0; });
}

bool is_r_multiplicity(std::span<const Int> r, std::span<const Int> x) {
  if (r.size() != x.size()) throw Error(Errc::LengthMismatch, "support and multiplicities differ in length");
  if (r.empty()) throw Error(Errc::EmptyInput, "empty support");
  Int total = 1;
  for (std::size_t i = 0; i < r.size(); ++i) total = checked_add(total, checked_mul(r[i], x[i]));
  return total % lcm_of(r) == 0;
}

Int ell(const SupportedQ& q) {
  Int total = checked_add(q.qsum(), 1);
  if (total % q.lcm() != 0) throw Error(Errc::NotRMultiplicity, to_string(q) + " is not an R-multiplicity");
  return total / q.lcm();
}

SDivision make_division(const SupportedQ& q, std::vector<Int> rho) {
  if (rho.size() != q.support_size()) throw Error(Errc::LengthMismatch, "rho has the wrong length");
  SDivision div;
  div.c.resize(rho.size());
  Int weighted = 0;
  for (std::size_t i = 0; i < rho.size(); ++i) {
    Int diff = checked_sub(q.x()[i], rho[i]);
    if (diff % q.s()[i] != 0) throw Error(Errc::InvalidInput, "x - rho is not a multiple of s");
    div.c[i] = diff / q.s()[i];
    weighted = checked_add(weighted, checked_mul(rho[i], q.r()[i]));
  }
  div.rho = std::move(rho);
  div.desirable = weighted == -1;
  return div;
}

SDivision desirable_division(const SupportedQ& q) {
  ell(q);
  const std::size_t d = q.support_size();
  std::vector<Int> rho(d);
  Int weighted = 0;
  for (std::size_t i = 0; i < d; ++i) {
    rho[i] = mod_floor(q.x()[i], q.s()[i]);
    weighted = checked_add(weighted, checked_mul(rho[i], q.r()[i]));
  }
  Int m = (weighted + 1) / q.lcm();
  for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i) rho[i] -= q.s()[i];
  return make_division(q, std::move(rho));
}

std::vector<SDivision> bounded_desirable_divisions(const SupportedQ& q) {
  const std::size_t d = q.support_size();
  if (d >= 31) throw Error(Errc::ScaleExceeded, "support too large for division enumeration");
  std::vector<SDivision> out;
  for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
    std::vector<Int> rho(d);
    Int weighted = 0;
    for (std::size_t i = 0; i < d; ++i) {
      rho[i] = mod_floor(q.x()[i], q.s()[i]);
      if (mask & (1u << i)) rho[i] -= q.s()[i];
      weighted = checked_add(weighted, checked_mul(rho[i], q.r()[i]));
    }
    if (weighted == -1) out.push_back(make_division(q, std::move(rho)));
  }
  return out;
}

IntPoly hstar(const SupportedQ& q) {
  const Int total = checked_add(q.qsum(), 1);
  std::vector<Coeff> counts(static_cast<std::size_t>(q.dimension()) + 1, 0);
  for (Int b = 0; b < total; ++b) {
    Int w = b;
    for (std::size_t i = 0; i < q.support_size(); ++i)
      w -= checked_mul(q.x()[i], checked_mul(b, q.r()[i]) / total);
    bump(counts, w);
  }
  return from_exponent_counts(std::move(counts));
}

IntPoly g_poly(const SupportedQ& q) {
  const Int l = ell(q);
  std::vector<Coeff> counts;
  for (Int alpha = 0; alpha < q.lcm(); ++alpha) {
    Int u = checked_mul(alpha, l);
    for (std::size_t i = 0; i < q.support_size(); ++i) u -= checked_mul(q.x()[i], alpha / q.s()[i]);
    bump(counts, u);
  }
  return from_exponent_counts(std::move(counts));
}

bool is_crt_index(std::span<const Int> moduli, std::span<const Int> residues) {
  if (moduli.size() != residues.size()) throw Error(Errc::LengthMismatch, "moduli and residues differ in length");
  for (std::size_t j = 0; j < moduli.size(); ++j) {
    if (residues[j] < 0 || residues[j] >= moduli[j]) return false;
    for (std::size_t k = j + 1; k < moduli.size(); ++k)
      if ((residues[j] - residues[k]) % std::gcd(moduli[j], moduli[k]) != 0) return false;
  }
  return true;
}

Int crt_alpha(std::span<const Int> moduli, std::span<const Int> residues) {
  if (moduli.size() != residues.size()) throw Error(Errc::LengthMismatch, "moduli and residues differ in length");
  if (moduli.empty()) throw Error(Errc::EmptyInput, "no congruences");
  Int alpha = mod_floor(residues[0], moduli[0]);
  Int modulus = moduli[0];
  for (std::size_t j = 1; j < moduli.size(); ++j) {
    const Int m = moduli[j];
    auto [g, u, v] = extended_gcd(modulus, m);
    Int diff = mod_floor(residues[j], m) - alpha;
    if (diff % g != 0) throw Error(Errc::InconsistentResidues, "residues admit no common solution");
    const Int step = m / g;
    // alpha + modulus * t solves both when t = (diff/g) * u mod (m/g).
    Int t = checked_mul(mod_floor(diff / g, step), mod_floor(u, step)) % step;
    Int next = checked_mul(modulus, step);
    alpha = mod_floor(checked_add(alpha, checked_mul(modulus, t)), next);
    modulus = next;
  }
  return alpha;
}

std::vector<Int> omega(std::span<const Int> moduli, std::span<const Int> residues) {
  Int alpha = crt_alpha(moduli, residues);
  std::vector<Int> out;
  out.reserve(moduli.size());
  for (Int m : moduli) out.push_back(alpha / m);
  return out;
}

IntPoly g_poly_via_crt(const SupportedQ& q, const SDivision& division) {
  if (!division.desirable) throw Error(Errc::NotDesirable, "division of " + to_string(q) + " is not desirable");
  const std::size_t d = q.support_size();
  if (division.c.size() != d || division.rho.size() != d) throw Error(Errc::LengthMismatch, "division has the wrong length");
  const auto& s = q.s();
  if (q.lcm() > Int{200'000'000}) throw Error(Errc::ScaleExceeded, "index set too large");

  // Walk I(r) by lifting: with alpha fixed modulo m = lcm(s_0..s_{j-1}), the
  // compatible i_j are exactly (alpha + k m) mod s_j for k < s_j / gcd(s_j, m).
  std::vector<Coeff> counts;
  std::vector<Int> idx(d, 0);
  auto walk = [&](auto&& self, std::size_t j, Int alpha, Int m) -> void {
    if (j == d) {
      Int e = 0;
      for (std::size_t t = 0; t < d; ++t)
        e = checked_add(e, checked_sub(checked_mul(division.c[t], idx[t]), checked_mul(division.rho[t], alpha / s[t])));
      bump(counts, e);
      return;
    }
    const Int lifts = s[j] / std::gcd(s[j], m);
    for (Int k = 0; k < lifts; ++k) {
      const Int lifted = alpha + k * m;
      idx[j] = lifted % s[j];
      self(self, j + 1, lifted, m * lifts);
    }
  };
  walk(walk, 0, 0, 1);
  return from_exponent_counts(std::move(counts));
}

SupportedQ two_support_q(Int a, Int k, Int c1, Int c2) {
  if (a < 2 || k < 1 || c2 < 0) throw Error(Errc::InvalidParameters, "need a >= 2, k >= 1, c2 >= 0");
  const Int b = checked_sub(checked_mul(k, a), 1);
  const Int x1 = checked_sub(checked_mul(c1, b), k);
  if (x1 < 1) throw Error(Errc::InvalidParameters, "c1 (ka-1) - k must be positive");
  return SupportedQ({a, b}, {x1, checked_add(checked_mul(c2, a), 1)});
}

IntPoly g_two_support_fast(Int a, Int k, Int c1, Int c2) {
  two_support_q(a, k, c1, c2);
  const Int b = k * a - 1;
  std::vector<Coeff> counts;
  for (Int i1 = 0; i1 < b; ++i1)
    for (Int i2 = 0; i2 < a; ++i2)
      bump(counts, checked_add(checked_mul(c1, i1), checked_mul(c2, i2)) - floor_div(i1 - i2, a));
  return from_exponent_counts(std::move(counts));
}

SupportedQ extend_by_lcm(const SupportedQ& q, Int y) {
  if (y <= 0) throw Error(Errc::InvalidParameters, "extension multiplicity must be positive");
  std::vector<Int> r = q.r(), x = q.x();
  auto it = std::find(r.begin(), r.end(), q.lcm());
  if (it != r.end())
    x[static_cast<std::size_t>(it - r.begin())] = checked_add(x[static_cast<std::size_t>(it - r.begin())], y);
  else {
    r.push_back(q.lcm());
    x.push_back(y);
  }
  return SupportedQ(std::move(r), std::move(x));
}

SupportedQ free_sum(const SupportedQ& p, const SupportedQ& q) {
  if (!is_reflexive(p) || !is_reflexive(q)) throw Error(Errc::NotReflexive, "free sum needs reflexive summands");
  const Int scale = checked_add(p.qsum(), 1);
  std::vector<Int> all = p.expand();
  for (Int v : q.expand()) all.push_back(checked_mul(scale, v));
  return support(all);
}

}  // namespace ehrk
