#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "vexloci/formulas.hpp"
#include "vexloci/identities.hpp"

namespace vexloci {

enum class CheckStatus { Pass, Fail, Skip, Error };
std::string to_string(CheckStatus s);

// Thrown by a check whose parameters do not apply; reported as Skip.
class NotApplicable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Check {
  std::string name;  // parameters of the check
  std::function<IdentityResult()> run;
};

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;  // first counterexample on failure
  double seconds = 0;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  int count(CheckStatus s) const;
  bool passed() const { return count(CheckStatus::Fail) == 0 && count(CheckStatus::Error) == 0; }
  // First failing or erroring check, null when the suite passed.
  const CheckResult* first_failure() const;
};

struct SuiteOptions {
  // Scale of the suite: bounds k_s in the triple scans and n in the fixtures.
  // Checks at a smaller size are a subset of those at a larger one.
  int max_size = 4;
  // 0: VEXLOCI_WORKERS if set, else the hardware concurrency.
  int workers = 0;
  PfOptions pf;
  std::uint64_t seed = 0x5eed;
};

// In execution order; "all" runs each of them.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// Checks of a named suite, without running them. Throws std::invalid_argument for an unknown name.
std::vector<Check> suite_checks(const std::string& name, const SuiteOptions& opt = {});

// Runs the checks on a worker pool; results come back in check order.
SuiteReport run_checks(const std::string& suite, const std::vector<Check>& checks, int workers = 0);
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt = {});

// Worker count after applying VEXLOCI_WORKERS.
int resolve_workers(int requested);

// One line per check, then a summary line.
std::string report_text(const SuiteReport& r, bool verbose = true);

}  // namespace vexloci
