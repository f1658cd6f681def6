#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "vexloci/triple.hpp"

using namespace vexloci;

namespace {

Triple make(LieType type, std::vector<int> k, std::vector<int> p, std::vector<int> q, bool ext = false) {
  return Triple{type, std::move(k), std::move(p), std::move(q), ext};
}

bool has_rule(const ValidationResult& r, const std::string& rule) {
  return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.rule == rule; });
}

// lambda straight from the defining formulas, filled between the k_i.
std::vector<int> lambda_by_hand(const Triple& t) {
  std::vector<int> out;
  int prev = 0;
  for (int i = 0; i < t.length(); ++i) {
    int top = t.type == LieType::A   ? t.q[i] - t.p[i] + t.k[i]
              : t.type == LieType::D ? t.p[i] + t.q[i]
                                     : t.p[i] + t.q[i] - 1;
    for (int k = prev + 1; k <= t.k[i]; ++k) out.push_back(t.type == LieType::A ? top : top + (t.k[i] - k));
    prev = t.k[i];
  }
  return out;
}

}  // namespace

TEST_SUITE("triples") {
  TEST_CASE("worked type A triple") {
    auto r = validate_triple(make(LieType::A, {1, 2, 4}, {1, 3, 6}, {4, 4, 4}));
    REQUIRE(r.ok());
    CHECK(r.shape->lambda == std::vector<int>{4, 3, 2, 2});
    CHECK(r.shape->weight() == 11);
    CHECK(r.shape->anchor == std::vector<int>{0, 1, 2, 2});
  }

  TEST_CASE("type C strict gap inequality") {
    auto r = validate_triple(make(LieType::C, {1, 2}, {2, 1}, {1, 1}));
    CHECK_FALSE(r.ok());
    CHECK(has_rule(r, "gap"));
    CHECK_THROWS_AS(shape_of(make(LieType::C, {1, 2}, {2, 1}, {1, 1})), InvalidTriple);
  }

  TEST_CASE("type D allows a zero last part") {
    auto r = validate_triple(make(LieType::D, {1}, {0}, {0}));
    REQUIRE(r.ok());
    CHECK(r.shape->lambda == std::vector<int>{0});
  }

  TEST_CASE("every violation is reported") {
    auto r = validate_triple(make(LieType::A, {2, 1}, {3, 1}, {1, 2}));
    CHECK(r.violations.size() >= 3);
    CHECK_THROWS(validate_triple(make(LieType::A, {1, 2}, {1}, {1, 1})).shape.value());
  }

  TEST_CASE("rho conjugate") {
    CHECK(rho_conjugate({0, 1, 2}) == std::vector<int>{2, 1});
    CHECK(rho_conjugate({}).empty());
    CHECK(rho_conjugate({0, 1, 2, 2}) == std::vector<int>{3, 2});
    // involution on the image, against a direct count
    for (const std::vector<int>& rho : {std::vector<int>{0, 1, 2}, {0, 1, 2, 2}, {0, 1, 1, 1}, {0, 1, 2, 3, 3, 1}}) {
      auto once = rho_conjugate(rho);
      CHECK(once == testsupport::conjugate_by_count(rho));
      CHECK(rho_conjugate(rho_conjugate(once)) == once);
    }
  }

  TEST_CASE("inflation of the worked type A triple") {
    auto t = make(LieType::A, {1, 2, 4}, {1, 3, 6}, {4, 4, 4});
    auto inf = inflate(t);
    CHECK(inf.k == std::vector<int>{1, 2, 3, 4});
    CHECK(shape_of(inf).lambda == std::vector<int>{4, 3, 2, 2});
    auto chain = inflation_chain(t);
    REQUIRE_FALSE(chain.empty());
    CHECK(chain.back() == inf);
  }

  TEST_CASE("a triple without gaps is unchanged") {
    auto t = make(LieType::A, {1, 2}, {1, 3}, {4, 4});
    CHECK_FALSE(has_gap(t));
    CHECK(inflate(t) == t);
  }

  TEST_CASE("type C inflation inserts (2, 2, 2)") {
    // The gap of this example is an equality case of the strict rule, so it is
    // read with the relaxed gap that inflated triples satisfy.
    auto t = make(LieType::C, {1, 3}, {3, 1}, {2, 2});
    CHECK_FALSE(validate_triple(t).ok());
    ValidateOptions relaxed{true};
    auto before = shape_of(t, relaxed).lambda;
    auto inf = inflate(t);
    CHECK(inf == make(LieType::C, {1, 2, 3}, {3, 2, 1}, {2, 2, 2}));
    CHECK(shape_of(inf, relaxed).lambda == before);
    CHECK(before == std::vector<int>{4, 3, 2});
  }

  TEST_CASE("inflation preserves lambda on the small scan") {
    for (LieType type : {LieType::A, LieType::C}) {
      ScanCaps caps;
      caps.max_rank = 6;
      for (const auto& t : enumerate_triples(type, caps)) {
        CAPTURE(t.text());
        auto inf = inflate(t);
        for (int i = 0; i < inf.length(); ++i) CHECK(inf.k[i] == i + 1);
        CHECK(shape_of(inf, ValidateOptions{true}).lambda == shape_of(t).lambda);
      }
    }
  }

  TEST_CASE("lambda matches the defining formulas on the small scan") {
    for (LieType type : {LieType::A, LieType::B, LieType::C, LieType::D})
      for (const auto& t : enumerate_triples(type)) {
        CAPTURE(t.text());
        CHECK(shape_of(t).lambda == lambda_by_hand(t));
      }
  }

  TEST_CASE("type D triple is valid exactly when its plus triple is type C") {
    ScanCaps caps;
    caps.max_entry = 5;
    // all candidate triples with entries in [0, 5], s <= 2
    int checked = 0;
    for (int s = 1; s <= 2; ++s)
      for (int k1 = 1; k1 <= 4; ++k1)
        for (int k2 = k1 + 1; k2 <= (s == 2 ? 4 : k1 + 1); ++k2)
          for (int p1 = 0; p1 <= 5; ++p1)
            for (int p2 = 0; p2 <= (s == 2 ? 5 : 0); ++p2)
              for (int q1 = 0; q1 <= 5; ++q1)
                for (int q2 = 0; q2 <= (s == 2 ? 5 : 0); ++q2) {
                  Triple d = s == 1 ? make(LieType::D, {k1}, {p1}, {q1}) : make(LieType::D, {k1, k2}, {p1, p2}, {q1, q2});
                  Triple c = plus_triple(d);
                  c.type = LieType::C;
                  CAPTURE(d.text());
                  CHECK(validate_triple(d).ok() == validate_triple(c).ok());
                  ++checked;
                }
    CHECK(checked > 1000);
  }

  TEST_CASE("extended mode with positive q matches the plain validator") {
    for (LieType type : {LieType::B, LieType::C, LieType::D})
      for (auto t : enumerate_triples(type)) {
        auto plain = validate_triple(t);
        t.extended = true;
        auto ext = validate_triple(t);
        CAPTURE(t.text());
        REQUIRE(ext.ok());
        CHECK(ext.shape->lambda == plain.shape->lambda);
      }
  }

  TEST_CASE("extended scan yields partitions lambda + rho") {
    ScanCaps caps;
    caps.extended = true;
    caps.max_entry = 4;
    int seen_negative = 0;
    for (LieType type : {LieType::C, LieType::D}) {
      for (const auto& t : enumerate_triples(type, caps)) {
        auto s = shape_of(t);
        if (std::any_of(t.q.begin(), t.q.end(), [](int q) { return q < 0; })) ++seen_negative;
        REQUIRE(s.rho.size() == s.lambda.size());
        for (std::size_t i = 1; i < s.lambda.size(); ++i)
          CHECK(s.lambda[i - 1] + s.rho[i - 1] >= s.lambda[i] + s.rho[i]);
      }
    }
    CHECK(seen_negative > 0);
    CHECK_THROWS(enumerate_triples(LieType::A, caps));
  }

  TEST_CASE("extended rules: p_s = 1 forces positive q, type D bans q = -1") {
    CHECK_FALSE(validate_triple(make(LieType::C, {1, 2}, {3, 1}, {2, -1}, true)).ok());
    CHECK_FALSE(validate_triple(make(LieType::D, {1, 2}, {3, 2}, {2, -1}, true)).ok());
    CHECK_FALSE(validate_triple(make(LieType::C, {1}, {1}, {0}, true)).ok());
  }
}
