#include "vexloci/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "vexloci/giambelli.hpp"
#include "vexloci/inflation.hpp"
#include "vexloci/localization.hpp"
#include "vexloci/oracle.hpp"

namespace vexloci {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skip: return "SKIP";
    case CheckStatus::Error: return "ERROR";
  }
  return "?";
}

int SuiteReport::count(CheckStatus s) const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.status == s; }));
}

const CheckResult* SuiteReport::first_failure() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail || c.status == CheckStatus::Error) return &c;
  return nullptr;
}

namespace {

std::string ints(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

IdentityResult same(const ClassSeries& a, const ClassSeries& b, int N) {
  Comparison c = compare_series(a, b, N);
  if (c.equal) return {true, ""};
  return {false, c.describe()};
}

// Every entry holds or the first that does not.
IdentityResult all_of(std::initializer_list<std::pair<const char*, std::function<IdentityResult()>>> parts) {
  for (const auto& [what, f] : parts) {
    IdentityResult r = f();
    if (!r.holds) return {false, std::string(what) + ": " + r.detail};
  }
  return {true, ""};
}

std::vector<std::vector<int>> subsets(int n) {
  std::vector<std::vector<int>> out;
  for (int m = 0; m < (1 << n); ++m) {
    std::vector<int> I;
    for (int j = 0; j < n; ++j)
      if (m >> j & 1) I.push_back(j);
    out.push_back(I);
  }
  return out;
}

int weight(const std::vector<int>& v) {
  int w = 0;
  for (int x : v) w += x;
  return w;
}

ScanCaps scan_caps(int size) {
  ScanCaps c;
  c.max_length = std::max(1, size);
  c.max_rank = std::max(1, size);
  return c;
}

// Distinct lambdas of the scan; the det/Pf/raising series depend on lambda alone.
std::vector<std::vector<int>> scan_lambdas(LieType type, int size) {
  std::set<std::vector<int>> seen;
  for (const auto& t : enumerate_triples(type, scan_caps(size))) seen.insert(shape_of(t).lambda);
  return {seen.begin(), seen.end()};
}

struct ExtendedShape {
  std::vector<int> rho, lambda;
  int distinguished = 0;
  auto operator<=>(const ExtendedShape&) const = default;
};

std::vector<ExtendedShape> extended_shapes(LieType type, int size, bool positive_only) {
  ScanCaps caps = scan_caps(std::min(size, 3));
  caps.extended = !positive_only;
  std::set<ExtendedShape> seen;
  for (auto t : enumerate_triples(type, caps)) {
    t.extended = true;
    ShapeData sh = shape_of(t);
    seen.insert({sh.rho, sh.lambda, sh.distinguished});
  }
  return {seen.begin(), seen.end()};
}

void compositions(int k, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int v = 0; weight(cur) + v <= total; ++v) {
    cur.push_back(v);
    compositions(k, total, cur, out);
    cur.pop_back();
  }
}

IdentityResult dyadic_audit(const ClassSeries& s, bool integral) {
  for (const auto& [m, c] : s.terms()) {
    if (integral ? !is_integer(c) : !is_dyadic(c))
      return {false, "coefficient " + c.get_str() + " at " + m.text()};
  }
  return {true, ""};
}

std::string normalization_tag(const PfOptions& pf) {
  return pf.normalization == PfNormalization::Display ? "display" : "congruence";
}

// ---- suite builders ----

using Builder = std::vector<Check> (*)(const SuiteOptions&);

std::vector<Check> type_a_equiv(const SuiteOptions& opt) {
  std::vector<Check> out;
  for (const auto& l : scan_lambdas(LieType::A, opt.max_size)) {
    const int N = default_truncation(l);
    out.push_back({"lambda=" + ints(l) + " N=" + std::to_string(N), [l, N] {
                     ClassSeries det = det_A(l, N);
                     return all_of({{"det vs raising", [&] { return same(det, raising_A(l, N), N); }},
                                    {"det vs himn", [&] { return same(det, himn_A(l, N), N); }}});
                   }});
    out.push_back({"beta=0 lambda=" + ints(l), [l, N] {
                     ClassSeries classical = classical_A(l);
                     return all_of({{"det", [&] { return same(det_A(l, N).beta_zero(), classical, N); }},
                                    {"raising", [&] { return same(raising_A(l, N).beta_zero(), classical, N); }},
                                    {"himn", [&] { return same(himn_A(l, N).beta_zero(), classical, N); }}});
                   }});
  }
  return out;
}

std::vector<Check> pf_equiv(LieType type, const SuiteOptions& opt) {
  std::vector<Check> out;
  const PfOptions pf = opt.pf;
  for (const auto& l : scan_lambdas(type, opt.max_size)) {
    const int N = default_truncation(l);
    const int k = static_cast<int>(l.size());
    auto pf_of_type = [type, pf](const std::vector<int>& lam, int n) {
      return type == LieType::C ? pf_C(lam, n, pf) : type == LieType::B ? pf_B(lam, n, pf) : pf_D(lam, n, pf);
    };
    auto raising_of_type = [type](const std::vector<int>& lam, int n) {
      return type == LieType::C ? raising_C(lam, n) : type == LieType::B ? raising_B(lam, n) : raising_D(lam, n);
    };
    out.push_back({"lambda=" + ints(l) + " N=" + std::to_string(N) + " " + normalization_tag(pf),
                   [=] { return same(pf_of_type(l, N), raising_of_type(l, N), N); }});
    out.push_back({"beta=0 lambda=" + ints(l) + " " + normalization_tag(pf), [=] {
                     const int pf_sign = type == LieType::D ? augmented_e_sign(pf, k) : 1;
                     const int raising_sign = type == LieType::D ? (k % 2 ? -1 : 1) : 1;
                     return all_of(
                         {{"pfaffian", [&] { return same(pf_of_type(l, N).beta_zero(), classical_pf(type, l, pf_sign), N); }},
                          {"raising",
                           [&] { return same(raising_of_type(l, N).beta_zero(), classical_pf(type, l, raising_sign), N); }}});
                   }});
  }
  return out;
}

std::vector<Check> type_c_equiv(const SuiteOptions& o) { return pf_equiv(LieType::C, o); }
std::vector<Check> type_b_equiv(const SuiteOptions& o) { return pf_equiv(LieType::B, o); }
std::vector<Check> type_d_equiv(const SuiteOptions& o) { return pf_equiv(LieType::D, o); }

std::vector<Check> theta_eta(const SuiteOptions& opt) {
  std::vector<Check> out;
  for (const auto& l : scan_lambdas(LieType::C, opt.max_size)) {
    const int N = default_truncation(l);
    std::vector<int> rho(l.size());
    for (std::size_t i = 0; i < rho.size(); ++i) rho[i] = static_cast<int>(i);
    out.push_back({"theta rho=" + ints(rho) + " lambda=" + ints(l),
                   [=] { return same(theta_poly(rho, l, N).series, raising_C(l, N), N); }});
  }
  for (LieType type : {LieType::B, LieType::D}) {
    const char* tag = type == LieType::B ? "B5" : "D5";
    for (const auto& s : extended_shapes(type, opt.max_size, true)) {
      const int N = default_truncation(s.lambda);
      out.push_back({std::string(tag) + " positive q lambda=" + ints(s.lambda), [=] {
                       ClassSeries five = type == LieType::B ? theta_B_series(s.rho, s.lambda, s.distinguished, N)
                                                             : eta_series(s.rho, s.lambda, s.distinguished, N);
                       return same(five, type == LieType::B ? raising_B(s.lambda, N) : raising_D(s.lambda, N), N);
                     }});
    }
  }
  for (LieType type : {LieType::C, LieType::B, LieType::D}) {
    const char* tag = type == LieType::C ? "C5" : type == LieType::B ? "B5" : "D5";
    for (const auto& s : extended_shapes(type, opt.max_size, false)) {
      const int N = default_truncation(s.lambda);
      const std::string params = " rho=" + ints(s.rho) + " lambda=" + ints(s.lambda) + " k=" + std::to_string(s.distinguished);
      out.push_back({std::string(tag) + " factorizations" + params, [=] {
                       if (type == LieType::D)
                         return same(eta_series(s.rho, s.lambda, s.distinguished, N),
                                     eta_series(s.rho, s.lambda, s.distinguished, N, RhoForm::Factored), N);
                       ClassSeries product = theta_series(s.rho, s.lambda, N);
                       ClassSeries factored = theta_series(s.rho, s.lambda, N, RhoForm::Factored, s.distinguished);
                       return same(product, factored, N);
                     }});
      if (type == LieType::B)
        out.push_back({"B5 prefactor" + params, [=] {
                         // (1-bT)/(2-bT) is 1/2 at b = 0 and introduces only powers of 2
                         ClassSeries b5 = theta_B_series(s.rho, s.lambda, s.distinguished, N);
                         ClassSeries expect = theta_series(s.rho, s.lambda, N).beta_zero() * pow2(-s.distinguished);
                         return all_of({{"dyadic", [&] { return dyadic_audit(b5, false); }},
                                        {"beta=0", [&] { return same(b5.beta_zero(), expect, N); }}});
                       }});
    }
  }
  return out;
}

std::vector<Check> knuth(const SuiteOptions& opt) {
  std::vector<Check> out;
  for (int k = 2; k <= std::min(4, opt.max_size); ++k) {
    std::vector<int> cur;
    std::vector<std::vector<int>> seeds;
    compositions(k, 8, cur, seeds);
    for (const auto& s : seeds) {
      const int N = weight(s) + 4;
      out.push_back({"k=" + std::to_string(k) + " seed=" + ints(s),
                     [k, s, N] { return verify_knuth(k, N, ClassSeries::seed(s)); }});
    }
  }
  return out;
}

std::vector<Check> h_identity(const SuiteOptions&) {
  return {{"beta generic", [] { return verify_H_identity(false); }},
          {"beta=0", [] { return verify_H_identity(true); }}};
}

std::vector<Check> relation_lemma(LieType type, const SuiteOptions& opt) {
  std::vector<Check> out;
  const int lo = type == LieType::C ? 1 : 0;
  for (int n = 1; n <= std::min(3, opt.max_size); ++n) {
    const int hi = type == LieType::C ? n + 1 : n;
    for (int p = lo; p <= hi; ++p)
      for (int q = lo; q <= hi; ++q)
        for (const auto& I : subsets(n))
          out.push_back({"n=" + std::to_string(n) + " p=" + std::to_string(p) + " q=" + std::to_string(q) +
                             " I=" + ints(I),
                         [=] { return verify_relation_lemma(type, n, p, q, I, 8); }});
  }
  return out;
}

std::vector<Check> lemma_c(const SuiteOptions& o) { return relation_lemma(LieType::C, o); }
std::vector<Check> lemma_d(const SuiteOptions& o) { return relation_lemma(LieType::D, o); }

std::vector<Check> gamma(const SuiteOptions& opt) {
  std::vector<Check> out;
  for (int n = 1; n <= std::min(3, opt.max_size); ++n)
    for (const auto& I : subsets(n)) {
      out.push_back({"n=" + std::to_string(n) + " I=" + ints(I) + " D=()", [n, I] {
                       QuadricFixture q = make_quadric(n, I);
                       return verify_gamma_props(frame_fixture(q, Structure::OrthogonalEven), {}, 6);
                     }});
      if (I.empty()) continue;
      out.push_back({"n=" + std::to_string(n) + " I=" + ints(I) + " D=shared", [n, I] {
                       QuadricFixture q = make_quadric(n, I);
                       std::vector<std::string> D;
                       for (int j : q.I) D.push_back(q.vars->name(q.z[j]));
                       return verify_gamma_props(frame_fixture(q, Structure::OrthogonalEven), D, 6);
                     }});
    }
  return out;
}

std::vector<Check> localization(const SuiteOptions& opt) {
  std::vector<Check> out;
  for (int s = 1; s <= std::min(4, opt.max_size); ++s)
    out.push_back({"|I|=" + std::to_string(s), [s] { return verify_localization_identity(s); }});
  return out;
}

std::vector<Check> quadric_push(const SuiteOptions& opt) {
  std::vector<Check> out;
  for (int n = 2; n <= std::min(3, std::max(2, opt.max_size)); ++n)
    for (const auto& I : subsets(n)) {
      const std::string where = "n=" + std::to_string(n) + " I=" + ints(I);
      out.push_back({"ef " + where, [n, I] { return verify_pushforward_ef(n, I, 6); }});
      for (int k = 0; k <= 3; ++k)
        for (int a = 0; a <= k; ++a)
          out.push_back({"prop k=" + std::to_string(k) + " a=" + std::to_string(a) + " " + where,
                         [n, I, k, a] { return verify_pushforward_prop(n, I, k, a, 6); }});
    }
  for (int n = 1; n <= std::min(3, std::max(2, opt.max_size)); ++n)
    for (int q = 0; q <= n; ++q)
      for (const auto& I : subsets(n))
        out.push_back({"basic D n=" + std::to_string(n) + " q=" + std::to_string(q) + " I=" + ints(I), [n, q, I] {
                         try {
                           return verify_basicD(n, q, I, 6);
                         } catch (const std::invalid_argument& e) {
                           throw NotApplicable(e.what());
                         }
                       }});
  return out;
}

std::vector<Check> props_abc(const SuiteOptions& opt) {
  std::vector<Check> out;
  for (int e = 1; e <= std::min(4, opt.max_size); ++e)
    out.push_back({"(a),(b) e=" + std::to_string(e), [e] { return verify_property_a_b(e, 6); }});
  for (int e = 1; e <= std::min(3, opt.max_size); ++e)
    out.push_back({"(c) e=" + std::to_string(e), [e] { return verify_property_c(e); }});
  return out;
}

std::vector<Check> dominant(const SuiteOptions& opt) {
  std::vector<Check> out;
  auto add = [&](DominantSpec spec) {
    std::string name = to_string(spec.type) + " q=" + ints(spec.q);
    if (spec.type != LieType::A) name += " n=" + std::to_string(spec.n) + " I=" + ints(spec.I);
    out.push_back({name, [spec] {
                     try {
                       return verify_dominant_case(spec, 6);
                     } catch (const std::invalid_argument& e) {
                       // the grid is shared by n = 2, 3; shapes the fixture cannot carry are skipped
                       throw NotApplicable(e.what());
                     }
                   }});
  };
  for (auto q : std::vector<std::vector<int>>{{1}, {2}, {2, 1}, {3, 3}, {3, 1}, {2, 2, 1}, {3, 2, 2}, {1, 1, 1}})
    if (static_cast<int>(q.size()) <= opt.max_size) add({LieType::A, 0, q, {}});
  for (int n = 2; n <= std::min(3, std::max(2, opt.max_size)); ++n)
    for (const auto& I : subsets(n))
      for (auto q : std::vector<std::vector<int>>{{1}, {2}, {2, 1}, {1, 1}, {3, 2}, {2, 2}, {1, 0}, {2, 1, 1}, {1, 1, 0}}) {
        add({LieType::C, n, q, I});
        add({LieType::D, n, q, I});
      }
  return out;
}

std::vector<Check> inflation(const SuiteOptions& opt) {
  std::vector<Check> out;
  ScanCaps caps;
  caps.max_rank = std::max(1, opt.max_size);
  InflationOptions io;
  io.pf = opt.pf;
  io.seed = opt.seed;
  for (LieType type : {LieType::A, LieType::C})
    for (const auto& t : enumerate_triples(type, caps)) {
      if (!has_gap(t)) continue;
      out.push_back({t.text() + " " + normalization_tag(opt.pf), [t, io] { return inflation_invariance_check(t, io); }});
    }
  return out;
}

std::vector<Check> giambelli(const SuiteOptions& opt) {
  std::vector<Check> out;
  const PfOptions pf = opt.pf;
  for (int n = 1; n <= std::min(4, opt.max_size); ++n)
    for (int s = 1; s <= std::min(3, n); ++s)
      for (LieType type : {LieType::C, LieType::D})
        out.push_back({std::string(type == LieType::C ? "symmetric" : "skew") + " n=" + std::to_string(n) +
                           " r=" + std::to_string(n - s) + " " + normalization_tag(pf),
                       [=] { return verify_giambelli(type, giambelli_input(n, n - s), 8, pf); }});
  return out;
}

std::vector<Check> dyadic(const SuiteOptions& opt) {
  std::vector<Check> out;
  const PfOptions pf = opt.pf;
  for (LieType type : {LieType::A, LieType::C, LieType::B, LieType::D})
    for (const auto& l : scan_lambdas(type, opt.max_size)) {
      const int N = default_truncation(l);
      const bool integral = type == LieType::A || type == LieType::C;
      out.push_back({to_string(type) + " lambda=" + ints(l) + (integral ? " integer" : " dyadic"), [=] {
                       switch (type) {
                         case LieType::A:
                           return all_of({{"det", [&] { return dyadic_audit(det_A(l, N), true); }},
                                          {"raising", [&] { return dyadic_audit(raising_A(l, N), true); }},
                                          {"himn", [&] { return dyadic_audit(himn_A(l, N), true); }}});
                         case LieType::C:
                           return all_of({{"pfaffian", [&] { return dyadic_audit(pf_C(l, N, pf), true); }},
                                          {"raising", [&] { return dyadic_audit(raising_C(l, N), true); }}});
                         case LieType::B:
                           return all_of({{"pfaffian", [&] { return dyadic_audit(pf_B(l, N, pf), false); }},
                                          {"raising", [&] { return dyadic_audit(raising_B(l, N), false); }}});
                         case LieType::D:
                           return all_of({{"pfaffian", [&] { return dyadic_audit(pf_D(l, N, pf), false); }},
                                          {"raising", [&] { return dyadic_audit(raising_D(l, N), false); }}});
                       }
                       return IdentityResult{false, "unknown type"};
                     }});
    }
  for (LieType type : {LieType::C, LieType::B, LieType::D}) {
    const char* tag = type == LieType::C ? "C5" : type == LieType::B ? "B5" : "D5";
    for (const auto& s : extended_shapes(type, opt.max_size, false)) {
      const int N = default_truncation(s.lambda);
      out.push_back({std::string(tag) + " rho=" + ints(s.rho) + " lambda=" + ints(s.lambda), [=] {
                       switch (type) {
                         case LieType::C: return dyadic_audit(theta_series(s.rho, s.lambda, N), true);
                         case LieType::B:
                           return dyadic_audit(theta_B_series(s.rho, s.lambda, s.distinguished, N), false);
                         default: return dyadic_audit(eta_series(s.rho, s.lambda, s.distinguished, N), false);
                       }
                     }});
    }
  }
  return out;
}

const std::map<std::string, Builder>& builders() {
  static const std::map<std::string, Builder> m = {
      {"typeA-equiv", type_a_equiv}, {"typeC-equiv", type_c_equiv}, {"typeB-equiv", type_b_equiv},
      {"typeD-equiv", type_d_equiv}, {"theta-eta-reduction", theta_eta}, {"knuth", knuth},
      {"h-identity", h_identity}, {"lemmaC", lemma_c}, {"lemmaD", lemma_d}, {"gamma", gamma},
      {"localization", localization}, {"quadric-push", quadric_push}, {"props-abc", props_abc},
      {"dominant", dominant}, {"inflation", inflation}, {"giambelli", giambelli}, {"dyadic-audit", dyadic}};
  return m;
}

CheckResult execute(const Check& c) {
  CheckResult r;
  r.name = c.name;
  auto t0 = std::chrono::steady_clock::now();
  try {
    IdentityResult ir = c.run();
    r.status = ir.holds ? CheckStatus::Pass : CheckStatus::Fail;
    r.detail = ir.detail;
  } catch (const NotApplicable& e) {
    r.status = CheckStatus::Skip;
    r.detail = e.what();
  } catch (const std::exception& e) {
    r.status = CheckStatus::Error;
    r.detail = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "typeA-equiv", "typeC-equiv", "typeB-equiv", "typeD-equiv", "theta-eta-reduction", "knuth",
      "h-identity", "lemmaC", "lemmaD", "gamma", "localization", "quadric-push", "props-abc",
      "dominant", "inflation", "giambelli", "dyadic-audit"};
  return names;
}

bool is_suite(const std::string& name) { return builders().count(name) > 0; }

std::vector<Check> suite_checks(const std::string& name, const SuiteOptions& opt) {
  auto it = builders().find(name);
  if (it == builders().end()) throw std::invalid_argument("unknown suite '" + name + "'");
  if (opt.max_size < 1) throw std::invalid_argument("max size must be positive");
  return it->second(opt);
}

int resolve_workers(int requested) {
  int w = requested;
  if (w <= 0) {
    w = static_cast<int>(std::thread::hardware_concurrency());
    if (const char* env = std::getenv("VEXLOCI_WORKERS")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) w = static_cast<int>(v);
    }
  }
  return std::max(1, w);
}

SuiteReport run_checks(const std::string& suite, const std::vector<Check>& checks, int workers) {
  SuiteReport report;
  report.suite = suite;
  report.checks.resize(checks.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= checks.size()) return;
      report.checks[i] = execute(checks[i]);
    }
  };
  const int w = std::min<int>(resolve_workers(workers), static_cast<int>(std::max<std::size_t>(1, checks.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < w; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  return report;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
  return run_checks(name, suite_checks(name, opt), opt.workers);
}

std::string report_text(const SuiteReport& r, bool verbose) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3);
  for (const auto& c : r.checks) {
    if (!verbose && (c.status == CheckStatus::Pass || c.status == CheckStatus::Skip)) continue;
    os << to_string(c.status) << " " << r.suite << " " << c.name << " (" << c.seconds << "s)";
    if (c.status != CheckStatus::Pass && !c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  double total = 0;
  for (const auto& c : r.checks) total += c.seconds;
  os << "suite " << r.suite << ": " << r.count(CheckStatus::Pass) << " passed, " << r.count(CheckStatus::Fail)
     << " failed, " << r.count(CheckStatus::Error) << " errors, " << r.count(CheckStatus::Skip) << " skipped ("
     << total << "s check time)\n";
  return os.str();
}

}  // namespace vexloci
