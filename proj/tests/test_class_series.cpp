#include <doctest.h>

#include <algorithm>
#include <random>

#include "support.hpp"
#include "vexloci/raising.hpp"
#include "vexloci/series.hpp"

using namespace vexloci;

namespace {

Monomial mono(const std::string& text) { return parse_monomial(text); }

ClassSeries series_of(int channels, const std::vector<std::pair<std::string, Rational>>& terms) {
  ClassSeries s(channels);
  for (const auto& [m, c] : terms) s.add(mono(m), c);
  return s;
}

// Small random series in c symbols, two channels, index sum <= 6.
ClassSeries random_series(std::mt19937_64& rng, int channels = 2) {
  std::uniform_int_distribution<int> idx(0, 3), coef(-4, 4), beta(0, 1);
  ClassSeries s(channels);
  for (int t = 0; t < 4; ++t) {
    std::vector<int> v(channels);
    for (auto& x : v) x = idx(rng);
    auto seed = ClassSeries::seed(v);
    Monomial m = seed.terms().begin()->first;
    m.beta = static_cast<std::int16_t>(beta(rng));
    s.add(m, coef(rng));
  }
  return s;
}

}  // namespace

TEST_SUITE("class-series") {
  TEST_CASE("canonical monomial text round trips") {
    for (std::string t : {"c[3](1)", "b^2 * c[3](1) * e[0](2)", "b * c[0](1) * c[4](2) * e[1](3)"})
      CHECK(mono(t).text() == t);
    CHECK(mono("b^2 * c[3](1) * e[0](2)").degree() == 1);
  }

  TEST_CASE("shift examples") {
    auto c2 = ClassSeries::seed({2});
    CHECK(shift(c2, 1, 3) == ClassSeries::seed({5}));
    CHECK(shift(ClassSeries::seed({1}), 1, -2).is_zero());
    CHECK_THROWS(shift(c2, 2, 1));
  }

  TEST_CASE("shift up then down keeps the monomials with a positive index") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
      auto s = random_series(rng);
      ClassSeries expected(2);
      for (const auto& [m, c] : s.terms())
        if (m.idx[0] >= 1) expected.add(m, c);
      CHECK(shift(shift(s, 1, 1), 1, -1).drop_negative() == s);
      CHECK(shift(shift(s, 1, -1), 1, 1) == expected);
      // shifting below zero annihilates
      for (const auto& [m, c] : s.terms()) {
        ClassSeries one(2);
        one.add(m, c);
        CHECK(shift(one, 1, -(m.idx[0] + 1)).is_zero());
      }
    }
  }

  TEST_CASE("delta removes e symbols of its channel") {
    auto s = ClassSeries::seed({2, 3}, {Kind::C, Kind::E});
    CHECK(apply_delta(s, 2).is_zero());
    CHECK(apply_delta(s, 1) == s);
    // d = c + e on two channels reduces to the pure c seed
    auto d = ClassSeries::seed({2, 1}) + ClassSeries::seed({2, 1}, {Kind::E, Kind::C}) +
             ClassSeries::seed({2, 1}, {Kind::C, Kind::E}) + ClassSeries::seed({2, 1}, {Kind::E, Kind::E});
    CHECK(apply_delta(apply_delta(d, 1), 2) == ClassSeries::seed({2, 1}));
  }

  TEST_CASE("raising examples") {
    CHECK(apply_raising(one_minus_beta_t(1, -1), ClassSeries::seed({2}), 4) ==
          series_of(1, {{"c[2](1)", 1}, {"b * c[3](1)", 1}, {"b^2 * c[4](1)", 1}}));
    CHECK(apply_raising(one_minus_r(1, 2), ClassSeries::seed({1, 1}), 4) ==
          series_of(2, {{"c[1](1) * c[1](2)", 1}, {"c[2](1) * c[0](2)", -1}}));
  }

  TEST_CASE("(1 + R12 - bT1)^{-1} equals the enumerated geometric sum") {
    // sum_k (bT1 - R12)^k c_1(1) c_1(2): enumerate the binomial expansion directly
    const int N = 3;
    ClassSeries expected(2);
    for (int k = 0; k <= 6; ++k)
      for (int j = 0; j <= k; ++j) {
        // j factors of bT1, k-j factors of -R12
        int r = k - j;
        int a1 = 1 + j + r, a2 = 1 - r;
        if (a2 < 0 || a1 + a2 > N) continue;
        Monomial m = mono("c[0](1) * c[0](2)");
        m.idx[0] = static_cast<std::int16_t>(a1);
        m.idx[1] = static_cast<std::int16_t>(a2);
        m.beta = static_cast<std::int16_t>(j);
        expected.add(m, binom_gen(k, j) * (r % 2 ? -1 : 1));
      }
    CHECK(apply_raising(one_plus_r_minus_beta_t_inv(1, 2), ClassSeries::seed({1, 1}), N) == expected);
  }

  TEST_CASE("factor order does not change the result") {
    std::vector<RaisingExpr> parts = {pair_factor(1, 2), one_minus_beta_t(1, -2), one_minus_beta_t(2, 1),
                                      two_minus_beta_t_inv(2), one_minus_r(1, 3), scalar_factor(3, 1, 3, 1)};
    auto seed = ClassSeries::seed({3, 2, 1});
    RaisingExpr ref;
    for (const auto& p : parts) ref *= p;
    auto expected = apply_raising(ref, seed, 9);
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 8; ++trial) {
      std::shuffle(parts.begin(), parts.end(), rng);
      RaisingExpr e;
      for (const auto& p : parts) e *= p;
      for (int N = 6; N <= 9; ++N) CHECK(apply_raising(e, seed, N) == expected.truncate(N));
    }
  }

  TEST_CASE("raising preserves degree and channel linearity") {
    auto expr = pair_factor(1, 2) * pair_factor(1, 3) * pair_factor(2, 3) * one_minus_beta_t(1, -3) *
                two_minus_beta_t_inv(2);
    auto out = apply_raising(expr, ClassSeries::seed({3, 2, 1}), 10);
    CHECK_FALSE(out.is_zero());
    for (const auto& [m, c] : out.terms()) {
      CHECK(m.degree() == 6);
      CHECK(m.channels == 3);
    }
  }

  TEST_CASE("(1-bT)^{-l} (1-bT)^{l} is the identity up to truncation") {
    for (int l = -6; l <= 6; ++l)
      for (int N = 2; N <= 8; ++N) {
        auto seed = ClassSeries::seed({2});
        CHECK(apply_raising(one_minus_beta_t(1, -l) * one_minus_beta_t(1, l), seed, N) == seed.truncate(N));
      }
  }

  TEST_CASE("disjoint multiplication") {
    auto a = ClassSeries::seed({2, 0}), b = ClassSeries::seed({0, 3});
    CHECK(disjoint_mul(a, b, {1}, {2}, 9) == ClassSeries::seed({2, 3}));
    CHECK_THROWS(disjoint_mul(a, a, {1}, {1}, 9));
    auto bc3 = series_of(2, {{"b * c[3](1) * c[0](2)", 1}});
    auto rhs = series_of(2, {{"c[0](1) * c[1](2)", 1}, {"b * c[0](1) * c[2](2)", 1}});
    CHECK(disjoint_mul(bc3, rhs, {1}, {2}, 9) ==
          series_of(2, {{"b * c[3](1) * c[1](2)", 1}, {"b^2 * c[3](1) * c[2](2)", 1}}));
  }

  TEST_CASE("series comparison reports the first mismatch") {
    auto s = series_of(1, {{"c[1](1)", 1}});
    CHECK(compare_series(s, s, 5).equal);
    auto cmp = compare_series(s, series_of(1, {{"b * c[2](1)", 1}}), 5);
    CHECK_FALSE(cmp.equal);
    REQUIRE(cmp.where.has_value());
    CHECK(cmp.where->text() == "c[1](1)");
  }

  TEST_CASE("Segre conversion") {
    CHECK(segre_convert(ClassSeries::seed({0}), 1, 5) == ClassSeries::seed({0}));
    CHECK(segre_convert(ClassSeries::seed({1}), 1, 3) ==
          series_of(1, {{"c[1](1)", 1}, {"b * c[2](1)", 1}, {"b^2 * c[3](1)", 1}}));
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 10; ++trial) {
      auto s = random_series(rng).beta_zero();
      CHECK(segre_convert(s, 1, 8).beta_zero() == s.truncate(8));
    }
    // c_m -> (1 - bT)^{-m} c_m
    for (int m = 0; m <= 4; ++m)
      CHECK(segre_convert(ClassSeries::seed({m}), 1, 8) ==
            apply_raising(one_minus_beta_t(1, -m), ClassSeries::seed({m}), 8));
  }

  TEST_CASE("(2 - bT)^{-1} expands with powers of 1/2") {
    auto out = apply_raising(two_minus_beta_t_inv(1), ClassSeries::seed({1}), 4);
    CHECK(out == series_of(1, {{"c[1](1)", Rational(1, 2)},
                               {"b * c[2](1)", Rational(1, 4)},
                               {"b^2 * c[3](1)", Rational(1, 8)},
                               {"b^3 * c[4](1)", Rational(1, 16)}}));
    CHECK(two_minus_beta_t_inv(1).half_integral());
    RaisingOptions strict;
    strict.allow_half = false;
    CHECK_THROWS(apply_raising(two_minus_beta_t_inv(1), ClassSeries::seed({1}), 4, strict));
  }
}
