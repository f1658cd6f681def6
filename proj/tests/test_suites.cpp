#include <doctest.h>

#include <atomic>

#include "vexloci/inflation.hpp"
#include "vexloci/suites.hpp"

using namespace vexloci;

namespace {

SuiteOptions small(int size, PfNormalization n = PfNormalization::Display) {
  SuiteOptions o;
  o.max_size = size;
  o.pf.normalization = n;
  return o;
}

void require_pass(const SuiteReport& r) {
  INFO(report_text(r, false));
  CHECK(r.passed());
  CHECK(r.count(CheckStatus::Pass) > 0);
}

}  // namespace

TEST_SUITE("suites") {
  TEST_CASE("worker pool keeps check order and maps exceptions") {
    std::vector<Check> checks;
    for (int i = 0; i < 40; ++i)
      checks.push_back({"c" + std::to_string(i), [i]() -> IdentityResult {
                          if (i == 7) throw NotApplicable("n/a");
                          if (i == 9) throw std::runtime_error("boom");
                          return {i != 11, "detail"};
                        }});
    auto r = run_checks("order", checks, 4);
    REQUIRE(r.checks.size() == 40);
    for (int i = 0; i < 40; ++i) CHECK(r.checks[i].name == "c" + std::to_string(i));
    CHECK(r.checks[7].status == CheckStatus::Skip);
    CHECK(r.checks[9].status == CheckStatus::Error);
    CHECK(r.checks[11].status == CheckStatus::Fail);
    CHECK(r.count(CheckStatus::Pass) == 37);
    REQUIRE(r.first_failure() != nullptr);
    CHECK(r.first_failure()->name == "c9");
    CHECK_FALSE(r.passed());
  }

  TEST_CASE("unknown suite names are rejected") {
    CHECK_FALSE(is_suite("nope"));
    CHECK(is_suite("knuth"));
    CHECK_THROWS_AS(suite_checks("nope"), std::invalid_argument);
    CHECK(suite_names().size() == 17);
  }

  TEST_CASE("check lists are deterministic and grow with the size") {
    for (const auto& name : suite_names()) {
      CAPTURE(name);
      auto a = suite_checks(name, small(2)), b = suite_checks(name, small(2)), c = suite_checks(name, small(3));
      REQUIRE(a.size() == b.size());
      for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].name == b[i].name);
      CHECK(c.size() >= a.size());
    }
  }

  TEST_CASE("normalization independent suites pass at size 3") {
    for (const char* name : {"typeA-equiv", "theta-eta-reduction", "h-identity", "lemmaC", "lemmaD", "gamma",
                             "localization", "quadric-push", "props-abc", "dominant", "dyadic-audit"}) {
      CAPTURE(name);
      require_pass(run_suite(name, small(3)));
    }
  }

  TEST_CASE("Pfaffian suites pass at size 2 in both normalizations") {
    for (auto n : {PfNormalization::Display, PfNormalization::Congruence})
      for (const char* name : {"typeC-equiv", "typeB-equiv"}) {
        CAPTURE(name);
        require_pass(run_suite(name, small(2, n)));
      }
  }

  TEST_CASE("congruent entries pass the Pfaffian, inflation and Giambelli suites") {
    for (const char* name : {"typeC-equiv", "typeB-equiv", "typeD-equiv", "inflation", "giambelli"}) {
      CAPTURE(name);
      require_pass(run_suite(name, small(3, PfNormalization::Congruence)));
    }
  }

  TEST_CASE("knuth suite at size 2") { require_pass(run_suite("knuth", small(2))); }

  TEST_CASE("report text hides passing checks unless verbose") {
    auto r = run_suite("localization", small(2));
    auto compact = report_text(r, false), verbose = report_text(r, true);
    CHECK(verbose.size() > compact.size());
    CHECK(compact.find("localization") != std::string::npos);
  }
}

TEST_SUITE("inflation") {
  TEST_CASE("insertion origins of the worked triple") {
    Triple t{LieType::A, {1, 2, 4}, {1, 3, 6}, {4, 4, 4}, false};
    auto origins = insertion_origins(t, inflate(t));
    REQUIRE(origins.size() == 4);
    CHECK(origins[2].entry == 2);
    CHECK(origins[2].steps == 1);
    CHECK(origins[3].steps == 0);
  }

  TEST_CASE("type A inflation is invariant with the adjoined symbol") {
    for (const Triple& t : {Triple{LieType::A, {1, 3}, {1, 3}, {4, 4}, false},
                            Triple{LieType::A, {1, 2, 4}, {1, 3, 6}, {4, 4, 4}, false}}) {
      CAPTURE(t.text());
      CHECK(inflation_invariance_check(t).holds);
      CHECK(inflation_bundle_check(t).holds);
    }
  }

  TEST_CASE("type C inflation with congruent entries") {
    InflationOptions opt;
    opt.pf.normalization = PfNormalization::Congruence;
    Triple t{LieType::C, {1, 3}, {4, 1}, {2, 2}, false};
    CHECK(inflation_invariance_check(t, opt).holds);
    CHECK(inflation_bundle_check(t, opt).holds);
  }

  TEST_CASE("a triple without a gap is not applicable") {
    CHECK_THROWS_AS(inflation_invariance_check(Triple{LieType::A, {1, 2}, {1, 3}, {4, 4}, false}),
                    std::invalid_argument);
  }
}
