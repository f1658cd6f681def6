#include <doctest.h>

#include <numeric>
#include <random>

#include "support.hpp"
#include "vexloci/formulas.hpp"
#include "vexloci/identities.hpp"
#include "vexloci/matrix.hpp"

using namespace vexloci;
using testsupport::pascal;

namespace {

Triple A(std::vector<int> k, std::vector<int> p, std::vector<int> q) {
  return Triple{LieType::A, std::move(k), std::move(p), std::move(q), false};
}

ClassSeries constant_series(const Rational& q) { return ClassSeries::constant(0, q); }

Rational scalar_of(const ClassSeries& s) { return s.coefficient(Monomial{}); }

// sum_m coeff(m) b^m c_{l+m}(1), one channel
template <class F>
ClassSeries single_channel(int l, int N, F coeff, Kind kind = Kind::C) {
  ClassSeries s(1);
  for (int m = 0; l + m <= N; ++m) {
    auto seed = ClassSeries::seed({l + m}, {kind});
    Monomial mono = seed.terms().begin()->first;
    mono.beta = static_cast<std::int16_t>(m);
    s.add(mono, coeff(m));
  }
  return s;
}

// det(c_{lambda_i - i + j}(i)) expanded over permutations
ClassSeries classical_det_by_permutations(const std::vector<int>& lambda) {
  const int k = static_cast<int>(lambda.size());
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  ClassSeries out(k);
  do {
    int inversions = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) ++inversions;
    std::vector<int> idx(k);
    bool negative = false;
    for (int i = 0; i < k; ++i) {
      idx[i] = lambda[i] - i + perm[i];
      negative |= idx[i] < 0;
    }
    if (negative) continue;
    out += ClassSeries::seed(idx) * Rational(inversions % 2 ? -1 : 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

void check_homogeneous(const ClassSeries& s, int weight) {
  for (const auto& [m, c] : s.terms()) CHECK(m.degree() == weight);
}

}  // namespace

TEST_SUITE("formulas") {
  TEST_CASE("det and Pfaffian of scalar matrices match permutation sums") {
    std::mt19937_64 rng(42);
    for (int n : {2, 4, 6}) {
      for (int trial = 0; trial < 5; ++trial) {
        auto a = testsupport::random_skew(n, rng);
        SeriesMatrix skew(n, 0, Symmetry::Skew), general(n, 0, Symmetry::General);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            general.at(i, j) = constant_series(a[i][j]);
            if (i < j) skew.at(i, j) = constant_series(a[i][j]);
          }
        Rational pf = scalar_of(pf_of(skew, 0));
        Rational det = scalar_of(det_of(general, 0));
        CHECK(pf == testsupport::permutation_pf(a));
        CHECK(det == testsupport::leibniz_det(a));
        CHECK(pf * pf == det);
      }
    }
  }

  TEST_CASE("4x4 Pfaffian expansion") {
    SeriesMatrix m(4, 0, Symmetry::Skew);
    Rational v[4][4];
    int next = 2;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        v[i][j] = next;
        next = next * 3 % 17 + 1;
        m.at(i, j) = constant_series(v[i][j]);
      }
    CHECK(scalar_of(pf_of(m, 0)) == v[0][1] * v[2][3] - v[0][2] * v[1][3] + v[0][3] * v[1][2]);
    SeriesMatrix one(1, 0, Symmetry::General);
    one.at(0, 0) = constant_series(7);
    CHECK(scalar_of(det_of(one, 0)) == 7);
  }

  TEST_CASE("type A basic case is (1 - bT)^{-q} c_q") {
    for (int q = 1; q <= 5; ++q) {
      const int N = q + 5;
      auto expected = single_channel(q, N, [&](int m) { return pascal(q + m - 1, m); });
      auto t = A({1}, {1}, {q});
      CHECK(classA_det(t, N).series == expected);
      CHECK(classA_raising(t, N).series == expected);
      CHECK(classA_himn(t, N).series == expected);
    }
  }

  TEST_CASE("type A det, raising and Segre forms agree on small triples") {
    auto t1 = A({1, 2}, {2, 2}, {2, 1});
    auto det = classA_det(t1, 6).series;
    CHECK(det == classA_raising(t1, 6).series);
    auto t2 = A({1, 2}, {3, 3}, {3, 2});
    CHECK(classA_himn(t2, 6).series == classA_det(t2, 6).series);
    // lambda = (1,1) at N = 4
    CHECK(raising_A({1, 1}, 4) == det_A({1, 1}, 4));
    auto worked = A({1, 2, 4}, {1, 3, 6}, {4, 4, 4});
    check_homogeneous(classA_raising(worked, 13).series, 11);
  }

  TEST_CASE("beta = 0 slices are the classical determinants") {
    for (const std::vector<int>& l : {std::vector<int>{3}, {2, 1}, {2, 2}, {4, 3, 2, 2}, {3, 1, 1}}) {
      auto classical = classical_det_by_permutations(l);
      CHECK(det_A(l, 14).beta_zero() == classical);
      CHECK(classical_A(l) == classical);
    }
  }

  TEST_CASE("type C one channel is (1 - bT)^{-l} c_l") {
    for (int l = 1; l <= 4; ++l) {
      auto expected = single_channel(l, l + 4, [&](int m) { return pascal(l + m - 1, m); });
      CHECK(pf_C({l}, l + 4) == expected);
      CHECK(raising_C({l}, l + 4) == expected);
    }
  }

  TEST_CASE("type B one channel is (1 - bT)/(2 - bT) (1 - bT)^{-l} c_l") {
    for (int l = 1; l <= 4; ++l) {
      auto coeff = [&](int m) {
        Rational sum = 0;
        for (int j = 0; j <= m; ++j) sum += pascal(l - 2 + j, j) / pow2(m - j + 1);
        return sum;
      };
      auto expected = single_channel(l, l + 4, coeff);
      CHECK(pf_B({l}, l + 4) == expected);
      CHECK(raising_B({l}, l + 4) == expected);
    }
  }

  TEST_CASE("type D augmented entry carries c + e") {
    for (int l = 0; l <= 3; ++l) {
      auto coeff = [&](int m) {
        Rational sum = 0;
        for (int j = 0; j <= m; ++j) sum += pascal(l - 2 + j, j) / pow2(m - j + 1);
        return sum;
      };
      // delta kills every raising of the e part, leaving its constant 1/2
      auto expected = single_channel(l, l + 4, coeff) + ClassSeries::seed({l}, {Kind::E}) * Rational(1, 2);
      CHECK(pf_D({l}, l + 4) == expected);
    }
  }

  TEST_CASE("Pfaffian and raising forms agree for two channels") {
    for (const std::vector<int>& l : {std::vector<int>{2, 1}, {3, 1}, {4, 2}}) {
      CHECK(pf_C(l, 6) == raising_C(l, 6));
      CHECK(pf_B(l, 6) == raising_B(l, 6));
    }
    CHECK(pf_D({2, 1}, 6) == raising_D({2, 1}, 6));
    CHECK(pf_D({1, 0}, 6) == raising_D({1, 0}, 6));
  }

  TEST_CASE("both normalizations agree for at most two channels") {
    PfOptions congruent{PfNormalization::Congruence, std::nullopt};
    for (const std::vector<int>& l : {std::vector<int>{2}, {3, 1}, {4, 2}}) {
      CHECK(pf_C(l, 8) == pf_C(l, 8, congruent));
      CHECK(pf_B(l, 8) == pf_B(l, 8, congruent));
    }
  }

  TEST_CASE("congruent entries reproduce the raising form for three and four channels") {
    PfOptions congruent{PfNormalization::Congruence, std::nullopt};
    for (const std::vector<int>& l : {std::vector<int>{3, 2, 1}, {4, 2, 1}, {4, 3, 2, 1}}) {
      CAPTURE(l.size());
      CHECK(pf_C(l, 9, congruent) == raising_C(l, 9));
      CHECK(pf_B(l, 9, congruent) == raising_B(l, 9));
      CHECK(pf_D(l, 9, congruent) == raising_D(l, 9));
    }
    CHECK(pf_D({3, 1, 0}, 8, congruent) == raising_D({3, 1, 0}, 8));
  }

  TEST_CASE("expanded type C entry at beta = 0") {
    const int N = 8;
    for (const auto& [li, lj] : {std::pair{3, 1}, std::pair{4, 2}, std::pair{2, 1}}) {
      std::vector<int> lambda = {li, lj};
      ClassSeries expected = ClassSeries::seed({li, lj});
      for (int l = 1; l <= lj; ++l) expected += ClassSeries::seed({li + l, lj - l}) * Rational(l % 2 ? -2 : 2);
      // c_m = 0 for m < 0
      CHECK(entry_expanded_C(1, 2, lambda, N).beta_zero().drop_negative() == expected);
    }
  }

  TEST_CASE("outputs are homogeneous and flagged half integral") {
    Triple c{LieType::C, {1, 3}, {4, 1}, {2, 2}, false};
    auto pc = classC_pf(c, 12);
    check_homogeneous(pc.series, 10);
    CHECK_FALSE(pc.half_integral);
    Triple b = c;
    b.type = LieType::B;
    auto pb = classB_pf(b, 12);
    CHECK(pb.half_integral);
    for (const auto& [m, q] : pb.series.terms()) CHECK(is_dyadic(q));
    for (const auto& [m, q] : pc.series.terms()) CHECK(is_integer(q));
    // beta = 0: type B is type C scaled by 2^{-k}
    CHECK(pb.series.beta_zero() == pc.series.beta_zero() * pow2(-3));
  }

  TEST_CASE("theta polynomials") {
    auto t = theta_poly({0}, {1}, 5);
    CHECK(t.series == single_channel(1, 5, [](int) { return Rational(1); }));
    for (int k = 1; k <= 3; ++k) {
      std::vector<int> rho(k), lambda(k);
      std::iota(rho.begin(), rho.end(), 0);
      for (int i = 0; i < k; ++i) lambda[i] = 2 * (k - i);
      CHECK(theta_series(rho, lambda, 8 + k) == raising_C(lambda, 8 + k));
      CHECK(theta_series(rho, lambda, 8 + k, RhoForm::Factored) == raising_C(lambda, 8 + k));
    }
  }

  TEST_CASE("Knuth and H identities") {
    CHECK(verify_knuth(2, 6, ClassSeries::seed({2, 1})).holds);
    CHECK(verify_knuth(4, 8, ClassSeries::seed({3, 2, 1, 0})).holds);
    CHECK(verify_H_identity().holds);
    CHECK(verify_H_identity(true).holds);
  }

  TEST_CASE("perfect matchings are counted by double factorials") {
    CHECK(perfect_matchings(2).size() == 1);
    CHECK(perfect_matchings(4).size() == 3);
    CHECK(perfect_matchings(6).size() == 15);
    int sign_sum = 0;
    for (const auto& m : perfect_matchings(4)) sign_sum += m.sign;
    CHECK(sign_sum == 1);  // +12.34 -13.24 +14.23
  }

  TEST_CASE("invalid triples are rejected by the constructors") {
    CHECK_THROWS_AS(classA_det(A({1, 2}, {3, 1}, {1, 2}), 6), InvalidTriple);
    Triple c{LieType::C, {1, 2}, {2, 1}, {1, 1}, false};
    CHECK_THROWS_AS(classC_pf(c, 6), InvalidTriple);
  }
}
