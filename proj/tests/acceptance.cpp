// One pass/fail line per acceptance criterion. Every comparison is exact over
// the rationals; the only non-exact bound is the runtime cap of criterion 1.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vexloci/formulas.hpp"
#include "vexloci/io.hpp"
#include "vexloci/rational.hpp"
#include "vexloci/suites.hpp"
#include "vexloci/triple.hpp"

namespace {

using namespace vexloci;

// Pinned tolerances.
constexpr double kTypeARuntimeCapSeconds = 300.0;  // "under a few minutes"
constexpr int kMaxMismatchedCoefficients = 0;      // all identities are exact
constexpr int kScanSize = 4;                       // k_s <= 4, entries <= 6, |lambda| <= 8
constexpr int kGoldenTruncation = 12;

struct Outcome {
  bool pass = false;
  std::string summary;
  std::vector<std::string> notes;
};

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

struct Tally {
  int total = 0;
  int passed = 0;
  int skipped = 0;
  std::string first_failure;
  double seconds = 0;

  void add(const SuiteReport& r) {
    for (const auto& c : r.checks) {
      seconds += c.seconds;
      if (c.status == CheckStatus::Skip) {
        ++skipped;
        continue;
      }
      ++total;
      if (c.status == CheckStatus::Pass) ++passed;
      else if (first_failure.empty()) first_failure = r.suite + ": " + c.name + ": " + c.detail;
    }
  }
  bool ok() const { return total > 0 && total - passed <= kMaxMismatchedCoefficients; }
  std::string text() const {
    std::ostringstream os;
    os << passed << "/" << total << " checks";
    if (skipped) os << ", " << skipped << " not applicable";
    return os.str();
  }
};

using Filter = bool (*)(const std::string&);

SuiteReport run_filtered(const std::string& suite, const SuiteOptions& opt, Filter keep) {
  std::vector<Check> kept;
  for (auto& c : suite_checks(suite, opt))
    if (!keep || keep(c.name)) kept.push_back(std::move(c));
  return run_checks(suite, kept, opt.workers);
}

Tally run_all(const std::vector<std::string>& suites, const SuiteOptions& opt, Filter keep = nullptr) {
  Tally t;
  for (const auto& s : suites) t.add(run_filtered(s, opt, keep));
  return t;
}

SuiteOptions congruence(SuiteOptions opt) {
  opt.pf.normalization = PfNormalization::Congruence;
  return opt;
}

Outcome from_tally(const Tally& t, const std::string& what) {
  Outcome o{t.ok(), what + ": " + t.text(), {}};
  if (!t.first_failure.empty()) o.notes.push_back("first failure " + t.first_failure);
  return o;
}

// A normalization-dependent criterion also reports the congruent entry form.
void add_congruence_note(Outcome& o, const Tally& t) {
  if (o.pass) return;
  o.notes.push_back("congruent entry normalization: " + t.text() + (t.ok() ? ", all pass" : ", failures remain"));
}

bool not_beta_zero(const std::string& n) { return !starts_with(n, "beta=0"); }
bool beta_zero(const std::string& n) { return starts_with(n, "beta=0"); }
bool knuth_even(const std::string& n) { return starts_with(n, "k=2 ") || starts_with(n, "k=4 "); }
bool basic_d(const std::string& n) { return starts_with(n, "basic D"); }
bool not_basic_d(const std::string& n) { return !basic_d(n); }

const std::vector<std::string> kPfSuites = {"typeC-equiv", "typeB-equiv", "typeD-equiv"};

Outcome criterion_1(const SuiteOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  Tally t = run_all({"typeA-equiv"}, opt, not_beta_zero);
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Outcome o = from_tally(t, "det = raising = Segre determinant");
  std::ostringstream os;
  os << o.summary << ", " << wall << " s wall (cap " << kTypeARuntimeCapSeconds << " s)";
  o.summary = os.str();
  o.pass = o.pass && wall <= kTypeARuntimeCapSeconds;
  return o;
}

Outcome criterion_2(const SuiteOptions& opt) {
  Outcome o = from_tally(run_all(kPfSuites, opt, not_beta_zero), "Pfaffian = raising form, types C, B, D");
  add_congruence_note(o, run_all(kPfSuites, congruence(opt), not_beta_zero));
  return o;
}

Outcome criterion_3(const SuiteOptions& opt) {
  std::vector<std::string> suites = kPfSuites;
  suites.insert(suites.begin(), "typeA-equiv");
  return from_tally(run_all(suites, opt, beta_zero), "beta=0 slices equal the classical matrices");
}

Outcome criterion_4(const SuiteOptions& opt) {
  Tally t = run_all({"knuth"}, opt, knuth_even);
  t.add(run_suite("h-identity", opt));
  return from_tally(t, "Knuth identity k=2,4 and H-identity at 8 evaluations");
}

Outcome criterion_5(const SuiteOptions& opt) {
  Outcome o = from_tally(run_all({"inflation"}, opt), "inflation invariance with symbol a, A and C");
  add_congruence_note(o, run_all({"inflation"}, congruence(opt)));
  return o;
}

Outcome criterion_6(const SuiteOptions& opt) {
  return from_tally(run_all({"lemmaC", "lemmaD"}, opt), "relation lemma vanishing, C and D");
}

Outcome criterion_7(const SuiteOptions& opt) {
  Tally t = run_all({"localization", "gamma"}, opt);
  t.add(run_filtered("quadric-push", opt, not_basic_d));
  return from_tally(t, "localization identity, ef and proposition pushforwards, gamma properties");
}

Outcome criterion_8(const SuiteOptions& opt) {
  return from_tally(run_all({"quadric-push"}, opt, basic_d), "type D basic case from quadric localization");
}

Outcome criterion_9(const SuiteOptions& opt) {
  return from_tally(run_all({"props-abc"}, opt), "properties (a), (b), (c)");
}

Outcome criterion_10(const SuiteOptions& opt) {
  Outcome o = from_tally(run_all({"giambelli"}, opt), "symmetric and skew Giambelli round trips");
  add_congruence_note(o, run_all({"giambelli"}, congruence(opt)));
  return o;
}

Outcome criterion_11(const SuiteOptions& opt) {
  return from_tally(run_all({"theta-eta-reduction"}, opt), "theta/eta reductions and B5 prefactor");
}

Outcome criterion_12(const SuiteOptions& opt) {
  return from_tally(run_all({"dyadic-audit"}, opt), "A/C integral, B/D/B5/D5 dyadic");
}

Outcome criterion_13(const std::string& golden_dir) {
  Outcome o;
  Triple t{LieType::A, {1, 2, 4}, {1, 3, 6}, {4, 4, 4}, false};
  auto shape = validate_triple(t);
  std::vector<int> expected_lambda = {4, 3, 2, 2};
  if (!shape.ok() || shape.shape->lambda != expected_lambda) {
    o.summary = "worked triple does not validate to (4,3,2,2)";
    return o;
  }
  std::string path = golden_dir + "/A_k1-2-4_p1-3-6_q4-4-4_N12.txt";
  std::ifstream in(path);
  if (!in) {
    o.summary = "missing golden file " + path;
    return o;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  auto det = classA_det(t, kGoldenTruncation);
  bool same_bytes = formula_text(det) == buf.str();
  // The stored class must also agree with the two independent constructions.
  bool raising = classA_raising(t, kGoldenTruncation).series == det.series;
  bool himn = classA_himn(t, kGoldenTruncation).series == det.series;
  o.pass = same_bytes && raising && himn;
  std::ostringstream os;
  os << "lambda=(4,3,2,2), " << det.series.size() << " terms at N=12, golden "
     << (same_bytes ? "identical" : "differs") << ", raising " << (raising ? "agrees" : "differs")
     << ", Segre " << (himn ? "agrees" : "differs");
  o.summary = os.str();
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::set<int> only;
  std::string golden_dir = VEXLOCI_GOLDEN_DIR;
  int workers = 0;
  app.add_option("--criterion", only, "Run only these criteria (1-13)")->check(CLI::Range(1, 13));
  app.add_option("--golden-dir", golden_dir, "Directory holding the golden files");
  app.add_option("--workers", workers, "Worker threads (0: VEXLOCI_WORKERS or hardware)");
  CLI11_PARSE(app, argc, argv);

  SuiteOptions opt;
  opt.max_size = kScanSize;
  opt.workers = workers;

  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria = {
      {1, "type A three-way equivalence", [&] { return criterion_1(opt); }},
      {2, "type C/B/D Pfaffian-raising equivalence", [&] { return criterion_2(opt); }},
      {3, "beta=0 classical slices", [&] { return criterion_3(opt); }},
      {4, "Knuth and H-operator identities", [&] { return criterion_4(opt); }},
      {5, "inflation invariance", [&] { return criterion_5(opt); }},
      {6, "lemma vanishing", [&] { return criterion_6(opt); }},
      {7, "localization and pushforward identities", [&] { return criterion_7(opt); }},
      {8, "type D basic case", [&] { return criterion_8(opt); }},
      {9, "bundle properties (a), (b), (c)", [&] { return criterion_9(opt); }},
      {10, "Giambelli round trips", [&] { return criterion_10(opt); }},
      {11, "theta/eta reduction", [&] { return criterion_11(opt); }},
      {12, "integrality audit", [&] { return criterion_12(opt); }},
      {13, "golden regression", [&] { return criterion_13(golden_dir); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what(), {}};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << (c.id < 10 ? "0" : "") << c.id << "] " << c.title << ": "
              << o.summary << "\n";
    for (const auto& n : o.notes) std::cout << "       " << n << "\n";
    std::cout.flush();
  }
  return failed == 0 ? 0 : 1;
}
