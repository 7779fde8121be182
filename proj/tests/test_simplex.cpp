#include <gtest/gtest.h>

#include <random>

#include "ehrk/simplex.hpp"
#include "oracles.hpp"

using namespace ehrk;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::InvalidInput;
}

// Reflexive two-support q with r_1 < r_2 <= r_max, x_i <= x_max.
std::vector<SupportedQ> reflexive_pairs(Int r_max, Int x_max) {
  std::vector<SupportedQ> out;
  for (Int r1 = 1; r1 <= r_max; ++r1)
    for (Int r2 = r1 + 1; r2 <= r_max; ++r2)
      for (Int x1 = 1; x1 <= x_max; ++x1)
        for (Int x2 = 1; x2 <= x_max; ++x2)
          if (is_r_multiplicity(std::vector<Int>{r1, r2}, std::vector<Int>{x1, x2})) out.emplace_back(std::vector<Int>{r1, r2}, std::vector<Int>{x1, x2});
  return out;
}

}  // namespace

TEST(Support, Examples) {
  std::vector<Int> q{1, 1, 1, 1, 1, 1, 1, 1, 3};
  SupportedQ s = support(q);
  EXPECT_EQ(s.r(), (std::vector<Int>{1, 3}));
  EXPECT_EQ(s.x(), (std::vector<Int>{8, 1}));
  EXPECT_EQ(support(std::vector<Int>{7}).x(), std::vector<Int>{1});
  SupportedQ remark = support(std::vector<Int>{2, 2, 2, 2, 2, 2, 2, 5, 5, 5, 5, 5});
  EXPECT_EQ(remark.r(), (std::vector<Int>{2, 5}));
  EXPECT_EQ(remark.x(), (std::vector<Int>{7, 5}));
  EXPECT_EQ(remark.expand(), (std::vector<Int>{2, 2, 2, 2, 2, 2, 2, 5, 5, 5, 5, 5}));
  EXPECT_EQ(code_of([] { (void)support(std::vector<Int>{}); }), Errc::EmptyInput);
}

TEST(SupportedQ, DerivedFields) {
  SupportedQ q({15, 6, 10}, {3, 4, 8});
  EXPECT_EQ(q.r(), (std::vector<Int>{6, 10, 15}));
  EXPECT_EQ(q.x(), (std::vector<Int>{4, 8, 3}));
  EXPECT_EQ(q.lcm(), 30);
  EXPECT_EQ(q.s(), (std::vector<Int>{5, 3, 2}));
  EXPECT_EQ(q.dimension(), 15);
  EXPECT_EQ(q.qsum(), 149);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(q.s()[i] * q.r()[i], q.lcm());
  EXPECT_EQ(code_of([] { SupportedQ({2, 2}, {1, 1}); }), Errc::InvalidInput);
  EXPECT_EQ(code_of([] { SupportedQ({2, 3}, {1}); }), Errc::LengthMismatch);
  EXPECT_EQ(code_of([] { SupportedQ({2}, {0}); }), Errc::InvalidInput);
}

TEST(ParseQSpec, Forms) {
  EXPECT_EQ(parse_qspec("2^7,5^5"), SupportedQ({2, 5}, {7, 5}));
  EXPECT_EQ(parse_qspec(" 2^7 , 5 ^ 5 "), SupportedQ({2, 5}, {7, 5}));
  EXPECT_EQ(parse_qspec("5,2,2,5"), SupportedQ({2, 5}, {2, 2}));
  EXPECT_EQ(parse_qspec("2^3,2"), SupportedQ({2}, {4}));
  EXPECT_EQ(to_string(parse_qspec("5^5,2^7")), "2^7,5^5");
  EXPECT_EQ(code_of([] { (void)parse_qspec(""); }), Errc::EmptyInput);
  EXPECT_EQ(code_of([] { (void)parse_qspec("  "); }), Errc::EmptyInput);
  EXPECT_EQ(code_of([] { (void)parse_qspec("2^"); }), Errc::InvalidInput);
  EXPECT_EQ(code_of([] { (void)parse_qspec("0"); }), Errc::InvalidInput);
  EXPECT_EQ(code_of([] { (void)parse_qspec("a,b"); }), Errc::InvalidInput);
  EXPECT_EQ(code_of([] { (void)parse_qspec("2,,3"); }), Errc::InvalidInput);
}

TEST(Reflexive, Examples) {
  EXPECT_TRUE(is_reflexive(SupportedQ({2, 5}, {7, 5})));
  for (Int k = 1; k <= 10; ++k) EXPECT_TRUE(is_reflexive(SupportedQ({1}, {k})));
  EXPECT_FALSE(is_reflexive(SupportedQ({2}, {1})));
}

TEST(RMultiplicity, Examples) {
  for (Int a = 2; a <= 6; ++a)
    for (Int k = 1; k <= 4; ++k)
      for (Int c1 = 1; c1 <= 4; ++c1)
        for (Int c2 = 0; c2 <= 4; ++c2) {
          Int x1 = c1 * (k * a - 1) - k;
          if (x1 < 1 || k * a - 1 == a) continue;
          EXPECT_TRUE(is_r_multiplicity(std::vector<Int>{a, k * a - 1}, std::vector<Int>{x1, c2 * a + 1}));
        }
  EXPECT_TRUE(is_r_multiplicity(std::vector<Int>{1}, std::vector<Int>{5}));
  EXPECT_FALSE(is_r_multiplicity(std::vector<Int>{2, 5}, std::vector<Int>{1, 1}));
  EXPECT_EQ(code_of([] { (void)is_r_multiplicity(std::vector<Int>{1, 2}, std::vector<Int>{1}); }), Errc::LengthMismatch);
}

TEST(RMultiplicity, AgreesWithReflexivity) {
  for (Int r1 = 1; r1 <= 9; ++r1)
    for (Int r2 = r1 + 1; r2 <= 9; ++r2)
      for (Int x1 = 1; x1 <= 12; ++x1)
        for (Int x2 = 1; x2 <= 12; ++x2) {
          SupportedQ q({r1, r2}, {x1, x2});
          EXPECT_EQ(is_r_multiplicity(q.r(), q.x()), is_reflexive(q));
        }
}

TEST(Ell, Examples) {
  EXPECT_EQ(ell(SupportedQ({2, 5}, {7, 5})), 4);
  EXPECT_EQ(ell(SupportedQ({2, 9}, {4, 3})), 2);
  EXPECT_EQ(ell(SupportedQ({5, 13}, {5, 13})), 3);
  EXPECT_EQ(code_of([] { (void)ell(SupportedQ({2, 5}, {1, 1})); }), Errc::NotRMultiplicity);
}

TEST(DesirableDivision, Examples) {
  for (Int a = 2; a <= 7; ++a)
    for (Int k = 2; k <= 5; ++k)
      for (Int c1 = 1; c1 <= 3; ++c1)
        for (Int c2 = 0; c2 <= 3; ++c2) {
          SupportedQ q = two_support_q(a, k, c1, c2);
          SDivision d = desirable_division(q);
          EXPECT_TRUE(d.desirable);
          EXPECT_EQ(d.rho, (std::vector<Int>{-k, 1}));
          EXPECT_EQ(d.c, (std::vector<Int>{c1, c2}));
        }
  for (Int k = 1; k <= 6; ++k) {
    SDivision d = desirable_division(SupportedQ({1}, {k}));
    EXPECT_EQ(d.rho, std::vector<Int>{-1});
    EXPECT_EQ(d.c, std::vector<Int>{k + 1});
  }
  SDivision d532 = desirable_division(SupportedQ({6, 10, 15}, {4, 8, 3}));
  EXPECT_EQ(d532.rho, (std::vector<Int>{-1, -1, 1}));
  EXPECT_EQ(d532.c, (std::vector<Int>{1, 3, 1}));
  EXPECT_EQ(code_of([] { (void)desirable_division(SupportedQ({2, 5}, {1, 1})); }), Errc::NotRMultiplicity);
}

TEST(DesirableDivision, InvariantsOnAllSmallPairs) {
  for (const auto& q : reflexive_pairs(12, 20)) {
    SDivision d = desirable_division(q);
    ASSERT_TRUE(d.desirable);
    Int csum = 0;
    for (std::size_t i = 0; i < q.support_size(); ++i) {
      EXPECT_EQ(q.x()[i], d.c[i] * q.s()[i] + d.rho[i]);
      EXPECT_GE(d.rho[i], -q.s()[i]);
      EXPECT_LT(d.rho[i], q.s()[i]);
      csum += d.c[i];
    }
    EXPECT_EQ(csum, ell(q));
  }
}

TEST(Hstar, Examples) {
  EXPECT_EQ(hstar(SupportedQ({2, 5}, {7, 5})), IntPoly({1, 1, 2, 4, 4, 5, 6, 5, 4, 4, 2, 1, 1}));
  for (Int n = 1; n <= 8; ++n) EXPECT_EQ(hstar(SupportedQ({1}, {n})), geometric_series(1, n + 1));
  EXPECT_EQ(hstar(SupportedQ({1, 3}, {8, 1})), poly_mul(geometric_series(3, 3), geometric_series(1, 4)));
}

TEST(Hstar, PermutationInvariance) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<Int> value(1, 9), len(1, 7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Int> q(static_cast<std::size_t>(len(rng)));
    for (auto& v : q) v = value(rng);
    std::shuffle(q.begin(), q.end(), rng);
    EXPECT_EQ(hstar(support(q)), IntPoly(oracle::hstar_of_multiset(q)));
  }
}

TEST(Hstar, ValueAtOneAndHibiPalindromicity) {
  for (Int r1 = 1; r1 <= 8; ++r1)
    for (Int r2 = r1 + 1; r2 <= 8; ++r2)
      for (Int x1 = 1; x1 <= 10; ++x1)
        for (Int x2 = 1; x2 <= 10; ++x2) {
          SupportedQ q({r1, r2}, {x1, x2});
          IntPoly h = hstar(q);
          EXPECT_EQ(eval_at(h, 1), 1 + q.qsum());
          EXPECT_EQ(h[0], 1);
          const Int n = q.dimension();
          bool palindromic = h[static_cast<std::size_t>(n)] == 1;
          for (Int i = 0; i <= n && palindromic; ++i)
            palindromic = h[static_cast<std::size_t>(i)] == h[static_cast<std::size_t>(n - i)];
          EXPECT_EQ(palindromic, is_reflexive(q)) << to_string(q);
        }
}

TEST(Hstar, GeometricOnlyForSupportOne) {
  auto is_geometric = [](const IntPoly& h) {
    for (Int e = 1; e <= h.degree(); ++e)
      if (h.degree() % e == 0 && h == geometric_series(e, h.degree() / e + 1)) return true;
    return false;
  };
  for (const auto& q : reflexive_pairs(8, 12)) EXPECT_FALSE(is_geometric(hstar(q))) << to_string(q);
  for (Int x = 1; x <= 8; ++x) EXPECT_TRUE(is_geometric(hstar(SupportedQ({1}, {x}))));
}

TEST(GPoly, Examples) {
  EXPECT_EQ(g_poly(SupportedQ({2, 5}, {7, 5})), IntPoly({1, 0, 1, 2, 1, 1, 2, 1, 0, 1}));
  EXPECT_EQ(g_poly(SupportedQ({2, 3}, {1, 3})), IntPoly({1, 2, 2, 1}));
  for (Int k = 1; k <= 5; ++k) EXPECT_EQ(g_poly(SupportedQ({1}, {k})), IntPoly::constant(1));
  EXPECT_EQ(code_of([] { (void)g_poly(SupportedQ({2, 5}, {1, 1})); }), Errc::NotRMultiplicity);
}

TEST(GPoly, HstarFactorIdentityAndValueAtOne) {
  for (const auto& q : reflexive_pairs(10, 25)) {
    const Int l = ell(q);
    IntPoly g = g_poly(q);
    IntPoly h = hstar(q);
    EXPECT_EQ(eval_at(g, 1), q.lcm());
    EXPECT_EQ(h, poly_mul(l >= 2 ? geometric_series(1, l) : IntPoly::constant(1), g));
    EXPECT_EQ(g, IntPoly(oracle::g_by_division(h.coeffs(), l)));
  }
}

TEST(GPoly, LcmLemma) {
  for (const auto& q : reflexive_pairs(15, 15)) {
    EXPECT_EQ(gcd_of(q.r()), 1);
    EXPECT_EQ(lcm_of(q.s()), q.lcm());
  }
}

TEST(Crt, Examples) {
  EXPECT_EQ(crt_alpha(std::vector<Int>{3, 2}, std::vector<Int>{1, 0}), 4);
  EXPECT_EQ(crt_alpha(std::vector<Int>{5, 3, 2}, std::vector<Int>{0, 0, 0}), 0);
  EXPECT_EQ(crt_alpha(std::vector<Int>{5, 3, 2}, std::vector<Int>{4, 2, 0}), 14);
  EXPECT_EQ(omega(std::vector<Int>{3, 2}, std::vector<Int>{1, 0}), (std::vector<Int>{1, 2}));
  EXPECT_EQ(omega(std::vector<Int>{4, 6}, std::vector<Int>{0, 0}), (std::vector<Int>{0, 0}));
  EXPECT_EQ(code_of([] { (void)crt_alpha(std::vector<Int>{4, 6}, std::vector<Int>{1, 2}); }), Errc::InconsistentResidues);
  EXPECT_FALSE(is_crt_index(std::vector<Int>{4, 6}, std::vector<Int>{1, 2}));
  EXPECT_TRUE(is_crt_index(std::vector<Int>{4, 6}, std::vector<Int>{1, 3}));
}

TEST(Crt, MatchesScanOnNonCoprimeModuli) {
  const std::vector<std::vector<Int>> systems{{4, 6}, {6, 10, 15}, {12, 8, 18}, {5, 3, 2}, {9, 12}, {7}};
  for (const auto& m : systems) {
    std::vector<Int> idx(m.size(), 0);
    while (true) {
      Int scanned = oracle::crt_scan(m, idx);
      EXPECT_EQ(is_crt_index(m, idx), scanned >= 0);
      if (scanned >= 0) {
        EXPECT_EQ(crt_alpha(m, idx), scanned);
        auto w = omega(m, idx);
        for (std::size_t j = 0; j < m.size(); ++j) EXPECT_EQ(scanned, w[j] * m[j] + idx[j]);
      }
      std::size_t j = 0;
      while (j < m.size() && ++idx[j] == m[j]) idx[j++] = 0;
      if (j == m.size()) break;
    }
  }
}

TEST(Crt, TwoSupportOmegaClosedForm) {
  for (Int a = 2; a <= 6; ++a)
    for (Int k = 2; k <= 4; ++k) {
      const Int b = k * a - 1;
      const Int r1 = a, r2 = b, rho2 = 1, rho1 = -k;
      const std::vector<Int> s{b, a};
      for (Int i1 = 0; i1 < b; ++i1)
        for (Int i2 = 0; i2 < a; ++i2) {
          auto w = omega(s, std::vector<Int>{i1, i2});
          EXPECT_EQ(w[0], mod_floor(rho2 * (i1 - i2), r1));
          EXPECT_EQ(w[1], mod_floor(rho1 * (i2 - i1), r2));
        }
    }
}

TEST(GViaCrt, Examples) {
  SupportedQ remark({2, 5}, {7, 5});
  EXPECT_EQ(g_poly_via_crt(remark, desirable_division(remark)), g_poly(remark));
  for (Int k = 1; k <= 4; ++k) {
    SupportedQ one({1}, {k});
    EXPECT_EQ(g_poly_via_crt(one, desirable_division(one)), IntPoly::constant(1));
  }
  SupportedQ q532({6, 10, 15}, {4, 8, 3});
  IntPoly expected = geometric_series(3, 2) * geometric_series(2, 3) * geometric_series(1, 5);
  EXPECT_EQ(g_poly_via_crt(q532, desirable_division(q532)), expected);
  SDivision bad = make_division(remark, {2, 1});
  EXPECT_FALSE(bad.desirable);
  EXPECT_EQ(code_of([&] { (void)g_poly_via_crt(remark, bad); }), Errc::NotDesirable);
}

TEST(GViaCrt, EveryBoundedDesirableDivision) {
  for (const auto& q : reflexive_pairs(9, 15)) {
    auto divs = bounded_desirable_divisions(q);
    ASSERT_FALSE(divs.empty());
    EXPECT_NE(std::find(divs.begin(), divs.end(), desirable_division(q)), divs.end());
    IntPoly g = g_poly(q);
    for (const auto& d : divs) EXPECT_EQ(g_poly_via_crt(q, d), g) << to_string(q);
  }
}

TEST(GTwoSupportFast, Examples) {
  EXPECT_EQ(g_two_support_fast(2, 2, 1, 1), IntPoly({1, 2, 2, 1}));
  EXPECT_EQ(g_two_support_fast(2, 5, 1, 1), geometric_series(1, 3) * geometric_series(1, 3) * geometric_series(2, 2));
  EXPECT_EQ(g_two_support_fast(2, 3, 2, 2), IntPoly({1, 0, 1, 2, 1, 1, 2, 1, 0, 1}));
  EXPECT_EQ(code_of([] { (void)g_two_support_fast(2, 1, 0, 1); }), Errc::InvalidParameters);
  EXPECT_EQ(code_of([] { (void)g_two_support_fast(1, 2, 1, 1); }), Errc::InvalidParameters);
}

TEST(GTwoSupportFast, AgreesWithDefinition) {
  for (Int a = 2; a <= 6; ++a)
    for (Int k = 1; k <= 5; ++k)
      for (Int c1 = 1; c1 <= 6; ++c1)
        for (Int c2 = 0; c2 <= 6; ++c2) {
          if (c1 * (k * a - 1) - k < 1) continue;
          EXPECT_EQ(g_two_support_fast(a, k, c1, c2), g_poly(two_support_q(a, k, c1, c2))) << a << ' ' << k << ' ' << c1 << ' ' << c2;
        }
}

TEST(ExtendByLcm, Examples) {
  SupportedQ q({2, 3}, {1, 3});
  SupportedQ e = extend_by_lcm(q, 2);
  EXPECT_EQ(e, SupportedQ({2, 3, 6}, {1, 3, 2}));
  EXPECT_EQ(ell(q), 2);
  EXPECT_EQ(ell(e), 4);
  EXPECT_EQ(g_poly(e), g_poly(q));
  EXPECT_EQ(extend_by_lcm(SupportedQ({1}, {4}), 3), SupportedQ({1}, {7}));
  SupportedQ remark({2, 5}, {7, 5});
  EXPECT_EQ(hstar(extend_by_lcm(remark, 1)), poly_mul(geometric_series(1, 5), g_poly(remark)));
}

TEST(ExtendByLcm, GUnchanged) {
  for (const auto& q : reflexive_pairs(8, 10))
    for (Int y = 1; y <= 3; ++y) {
      SupportedQ e = extend_by_lcm(q, y);
      EXPECT_EQ(ell(e), ell(q) + y);
      EXPECT_EQ(g_poly(e), g_poly(q));
    }
}

TEST(FreeSum, Examples) {
  SupportedQ one({1}, {1});
  EXPECT_EQ(free_sum(one, one), SupportedQ({1, 2}, {1, 1}));
  EXPECT_EQ(hstar(free_sum(one, one)), IntPoly({1, 2, 1}));
  SupportedQ two({1}, {2});
  EXPECT_EQ(free_sum(two, one), SupportedQ({1, 3}, {2, 1}));
  EXPECT_EQ(hstar(free_sum(two, one)), poly_mul({1, 1, 1}, {1, 1}));
  EXPECT_EQ(free_sum(one, two), SupportedQ({1, 2}, {1, 2}));
  EXPECT_EQ(code_of([&] { (void)free_sum(SupportedQ({2}, {1}), one); }), Errc::NotReflexive);
}

TEST(FreeSum, HstarMultiplies) {
  std::vector<SupportedQ> pool;
  for (Int x = 1; x <= 3; ++x) pool.emplace_back(std::vector<Int>{1}, std::vector<Int>{x});
  for (const auto& q : reflexive_pairs(4, 4)) pool.push_back(q);
  for (const auto& p : pool)
    for (const auto& q : pool) {
      SupportedQ y = free_sum(p, q);
      EXPECT_TRUE(is_reflexive(y));
      EXPECT_EQ(hstar(y), poly_mul(hstar(p), hstar(q))) << to_string(p) << " * " << to_string(q);
    }
}
