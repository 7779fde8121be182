#pragma once

// Slow, direct reference computations used to check the library.

#include <algorithm>
#include <complex>
#include <map>
#include <numbers>
#include <vector>

#include "ehrk/factorizer.hpp"
#include "ehrk/polyring.hpp"
#include "ehrk/simplex.hpp"

namespace ehrk::oracle {

// Naive convolution of coefficient vectors.
inline std::vector<Int> convolve(const std::vector<Int>& a, const std::vector<Int>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Int> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline std::vector<Int> series(Int e, Int gamma) {
  std::vector<Int> out(static_cast<std::size_t>((gamma - 1) * e + 1), 0);
  for (Int j = 0; j < gamma; ++j) out[static_cast<std::size_t>(j * e)] = 1;
  return out;
}

// alpha in [0, lcm) by scanning.
inline Int crt_scan(const std::vector<Int>& moduli, const std::vector<Int>& residues) {
  Int L = 1;
  for (Int m : moduli) L = std::lcm(L, m);
  for (Int alpha = 0; alpha < L; ++alpha) {
    bool ok = true;
    for (std::size_t j = 0; j < moduli.size() && ok; ++j) ok = alpha % moduli[j] == residues[j];
    if (ok) return alpha;
  }
  return -1;
}

// h* straight from the raw multiset q in whatever order it is given.
inline std::vector<Int> hstar_of_multiset(const std::vector<Int>& q) {
  Int total = 1;
  for (Int v : q) total += v;
  std::vector<Int> counts(q.size() + 1, 0);
  for (Int b = 0; b < total; ++b) {
    Int w = b;
    for (Int v : q) w -= (b * v) / total;
    ++counts[static_cast<std::size_t>(w)];
  }
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  return counts;
}

// g as the exact quotient of h* by 1 + z + ... + z^{ell-1}, by long division.
inline std::vector<Int> g_by_division(const std::vector<Int>& h, Int ell) {
  std::vector<Int> rem = h;
  const std::size_t qlen = h.size() - static_cast<std::size_t>(ell - 1);
  std::vector<Int> q(qlen, 0);
  for (std::size_t i = qlen; i-- > 0;) {
    q[i] = rem[i + static_cast<std::size_t>(ell - 1)];
    for (Int j = 0; j < ell; ++j) rem[i + static_cast<std::size_t>(j)] -= q[i];
  }
  return q;
}

// Does some multiset of (e, gamma) with prod gamma = f(1) and
// sum (gamma-1) e = deg f expand to f? Enumerates in nondecreasing order.
inline bool brute_factorizable(const std::vector<Int>& f) {
  Int value = 0;
  for (Int c : f) value += c;
  const Int deg = static_cast<Int>(f.size()) - 1;
  struct Walk {
    const std::vector<Int>& target;
    bool go(Int remaining_value, Int remaining_deg, Int min_e, Int min_gamma, const std::vector<Int>& acc) {
      if (remaining_value == 1) return remaining_deg == 0 && acc == target;
      for (Int e = min_e; e <= remaining_deg; ++e)
        for (Int gamma = (e == min_e ? min_gamma : 2); gamma <= remaining_value; ++gamma) {
          if (remaining_value % gamma != 0 || (gamma - 1) * e > remaining_deg) continue;
          if (go(remaining_value / gamma, remaining_deg - (gamma - 1) * e, e, gamma, convolve(acc, series(e, gamma)))) return true;
        }
      return false;
    }
  } walk{f};
  return walk.go(value, deg, 1, 2, {1});
}

// Whether f vanishes at every primitive d-th root of unity, in floating point.
inline bool vanishes_at_primitive_roots(const std::vector<Int>& f, Int d) {
  for (Int k = 1; k <= d; ++k) {
    if (std::gcd(k, d) != 1) continue;
    const std::complex<double> z = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d));
    std::complex<double> acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = acc * z + static_cast<double>(f[i]);
    if (std::abs(acc) > 1e-7) return false;
  }
  return true;
}

inline Int phi_brute(Int d) {
  Int count = 0;
  for (Int k = 1; k <= d; ++k) count += std::gcd(k, d) == 1;
  return count;
}

}  // namespace ehrk::oracle
