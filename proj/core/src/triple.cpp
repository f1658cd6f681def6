#include "vexloci/triple.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace vexloci {

LieType parse_lie_type(const std::string& s) {
  if (s == "A" || s == "a") return LieType::A;
  if (s == "B" || s == "b") return LieType::B;
  if (s == "C" || s == "c") return LieType::C;
  if (s == "D" || s == "d") return LieType::D;
  throw std::invalid_argument("unknown type " + s);
}

std::string to_string(LieType t) {
  switch (t) {
    case LieType::A: return "A";
    case LieType::B: return "B";
    case LieType::C: return "C";
    case LieType::D: return "D";
  }
  return "?";
}

namespace {

std::string seq(const std::vector<int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string at(const char* name, int i) { return std::string(name) + "_" + std::to_string(i); }

struct Ctx {
  std::vector<Violation>* out;
  std::string prefix;
  void fail(const std::string& rule, const std::string& detail) const {
    out->push_back({prefix + rule, detail});
  }
};

std::vector<int> anchors_of(const std::vector<int>& k) {
  std::vector<int> a;
  int prev = 0;
  for (std::size_t i = 0; i < k.size(); ++i) {
    for (int c = prev + 1; c <= k[i]; ++c) a.push_back(static_cast<int>(i));
    prev = k[i];
  }
  return a;
}

bool basic_shape(const Triple& t, const Ctx& cx) {
  const int s = t.length();
  if (s == 0 || t.p.size() != t.k.size() || t.q.size() != t.k.size()) {
    cx.fail("lengths", "k, p, q must have the same positive length");
    return false;
  }
  bool ok = true;
  if (t.k[0] <= 0) {
    cx.fail("k positive", at("k", 1) + " = " + std::to_string(t.k[0]) + " must be > 0");
    ok = false;
  }
  for (int i = 1; i < s; ++i)
    if (t.k[i] <= t.k[i - 1]) {
      cx.fail("k increasing", at("k", i) + " < " + at("k", i + 1) + " fails");
      ok = false;
    }
  if (t.rank() > 4096) {
    cx.fail("k size", "k_s too large");
    ok = false;
  }
  return ok;
}

void check_monotone(const std::vector<int>& v, const char* name, bool increasing, const Ctx& cx) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    bool good = increasing ? v[i - 1] <= v[i] : v[i - 1] >= v[i];
    if (!good)
      cx.fail(std::string(name) + (increasing ? " weakly increasing" : " weakly decreasing"),
              at(name, static_cast<int>(i)) + " = " + std::to_string(v[i - 1]) + ", " +
                  at(name, static_cast<int>(i) + 1) + " = " + std::to_string(v[i]));
  }
}

void check_gap(const Triple& t, int upto, const ValidateOptions& opt, const Ctx& cx) {
  // entries 2..upto, 1-based
  for (int i = 1; i < upto; ++i) {
    int gap = t.k[i] - t.k[i - 1];
    int room = (t.p[i - 1] - t.p[i]) + (t.q[i - 1] - t.q[i]);
    bool good = opt.relaxed_gap ? gap <= room : gap < room;
    if (!good)
      cx.fail("gap", at("k", i + 1) + " - " + at("k", i) + " = " + std::to_string(gap) +
                         (opt.relaxed_gap ? " <= " : " < ") + std::to_string(room) + " fails");
  }
}

std::vector<int> strict_fill(const Triple& t, const std::vector<int>& anchor_vals) {
  std::vector<int> lam;
  int prev = 0;
  for (int i = 0; i < t.length(); ++i) {
    for (int c = prev + 1; c <= t.k[i]; ++c) lam.push_back(anchor_vals[i] + (t.k[i] - c));
    prev = t.k[i];
  }
  return lam;
}

void check_strict(const std::vector<int>& lam, int min_last, const Ctx& cx) {
  for (std::size_t i = 1; i < lam.size(); ++i)
    if (lam[i - 1] <= lam[i])
      cx.fail("lambda strict", at("lambda", static_cast<int>(i)) + " > " +
                                   at("lambda", static_cast<int>(i) + 1) + " fails in " + seq(lam));
  if (!lam.empty() && lam.back() < min_last)
    cx.fail("lambda last part", "lambda_{k_s} = " + std::to_string(lam.back()) + " must be >= " +
                                    std::to_string(min_last));
}

ShapeData finish(const Triple& t, std::vector<int> lam, Strictness st) {
  ShapeData d;
  d.lambda = std::move(lam);
  d.split_index = t.length();
  d.distinguished = t.rank();
  d.strictness = st;
  d.anchor = anchors_of(t.k);
  return d;
}

// When k is malformed the shape cannot be built; p and q are still checked so
// that every violation is reported.
bool shape_or_sequences(const Triple& t, const Ctx& cx) {
  if (basic_shape(t, cx)) return true;
  if (!t.k.empty() && t.p.size() == t.k.size() && t.q.size() == t.k.size()) {
    check_monotone(t.p, "p", t.type == LieType::A, cx);
    check_monotone(t.q, "q", false, cx);
  }
  return false;
}

std::optional<ShapeData> validate_A(const Triple& t, const Ctx& cx) {
  if (!shape_or_sequences(t, cx)) return std::nullopt;
  const int s = t.length();
  if (t.p[0] <= 0) cx.fail("p positive", "p_1 must be > 0");
  if (t.q[s - 1] <= 0) cx.fail("q positive", "q_s must be > 0");
  check_monotone(t.p, "p", true, cx);
  check_monotone(t.q, "q", false, cx);
  for (int i = 0; i < s; ++i)
    if (t.k[i] > t.p[i])
      cx.fail("rank bound", at("k", i + 1) + " <= " + at("p", i + 1) + " fails (" + std::to_string(t.k[i]) +
                                " > " + std::to_string(t.p[i]) + ")");
  std::vector<int> anchor(s);
  for (int i = 0; i < s; ++i) anchor[i] = t.q[i] - t.p[i] + t.k[i];
  for (int i = 1; i < s; ++i)
    if (anchor[i - 1] < anchor[i])
      cx.fail("lambda weakly decreasing", at("lambda", t.k[i - 1]) + " = " + std::to_string(anchor[i - 1]) +
                                              " < " + at("lambda", t.k[i]) + " = " + std::to_string(anchor[i]));
  if (anchor[s - 1] < 0)
    cx.fail("lambda last part", "lambda_{k_s} = " + std::to_string(anchor[s - 1]) + " is negative");
  std::vector<int> lam;
  int prev = 0;
  for (int i = 0; i < s; ++i) {
    for (int c = prev + 1; c <= t.k[i]; ++c) lam.push_back(anchor[i]);
    prev = t.k[i];
  }
  return finish(t, lam, Strictness::Weak);
}

std::optional<ShapeData> validate_C(const Triple& t, const ValidateOptions& opt, const Ctx& cx) {
  if (!shape_or_sequences(t, cx)) return std::nullopt;
  const int s = t.length();
  check_monotone(t.p, "p", false, cx);
  check_monotone(t.q, "q", false, cx);
  if (t.p[s - 1] <= 0) cx.fail("p positive", "p_s must be > 0");
  if (t.q[s - 1] <= 0) cx.fail("q positive", "q_s must be > 0");
  check_gap(t, s, opt, cx);
  std::vector<int> anchor(s);
  for (int i = 0; i < s; ++i) anchor[i] = t.p[i] + t.q[i] - 1;
  auto lam = strict_fill(t, anchor);
  check_strict(lam, 1, cx);
  return finish(t, lam, Strictness::Strict);
}

// Extended (coisotropic) data for B/C.
struct Extended {
  std::vector<int> rho, lambda;
  int a = 0;
};

std::optional<Extended> extended_core(const Triple& t, const ValidateOptions& opt, const Ctx& cx,
                                      std::vector<std::string>* notes) {
  if (!shape_or_sequences(t, cx)) return std::nullopt;
  const int s = t.length();
  check_monotone(t.p, "p", false, cx);
  check_monotone(t.q, "q", false, cx);
  if (t.p[s - 1] <= 0) cx.fail("p positive", "p_s must be > 0");
  for (int i = 0; i < s; ++i)
    if (t.q[i] == 0) cx.fail("q nonzero", at("q", i + 1) + " = 0 is not allowed");
  int a = 0;
  while (a < s && t.q[a] > 0) ++a;
  if (t.p[s - 1] == 1 && a < s) cx.fail("p_s = 1", "p_s = 1 requires every q to be positive");
  check_gap(t, a, opt, cx);

  // banned negative values
  for (int i = 0; i < a; ++i) {
    int kprev = i == 0 ? 0 : t.k[i - 1];
    int reach = t.q[i] + (t.k[i] - kprev - 1);
    int m = i;
    for (int c = 0; c <= i; ++c)
      if (reach >= t.q[c]) {
        m = c;
        break;
      }
    int len = t.k[i] - t.k[m];
    for (int step = 0; step < len; ++step) {
      int banned = -t.q[i] - step;
      for (int j = a; j < s; ++j)
        if (t.q[j] == banned)
          cx.fail("banned negative", at("q", j + 1) + " = " + std::to_string(banned) + " is banned by entry " +
                                         std::to_string(i + 1));
    }
  }

  Extended ex;
  ex.a = a;
  const int ks = t.rank();
  const int ka = a == 0 ? 0 : t.k[a - 1];
  std::vector<int> rho_at(s, 0);
  for (int i = a; i < s; ++i) {
    int target = -t.q[i];
    int j = 0;
    while (j < a && t.q[j] > target) ++j;
    // now q_j > target for all j' < j (1-based: q_1..q_j), need q_{j+1} < target
    if (j < a && t.q[j] == target) {
      cx.fail("rho anchor", "no j with q_j > " + std::to_string(target) + " > q_{j+1} for entry " +
                                std::to_string(i + 1));
      if (notes) notes->push_back("boundary: -q_" + std::to_string(i + 1) + " equals an isotropic q");
    }
    rho_at[i] = j == 0 ? 0 : t.k[j - 1];
  }
  ex.rho.assign(ks, 0);
  {
    int prev = 0;
    for (int i = 0; i < s; ++i) {
      for (int c = prev + 1; c <= t.k[i]; ++c) ex.rho[c - 1] = (i < a) ? c - 1 : rho_at[i];
      prev = t.k[i];
    }
  }
  std::vector<int> anchor(s);
  for (int i = 0; i < s; ++i)
    anchor[i] = i < a ? t.p[i] + t.q[i] - 1 : t.p[i] + t.q[i] + t.k[i] - 1 - rho_at[i];
  ex.lambda.assign(ks, 0);
  {
    int prev = 0;
    for (int i = 0; i < s; ++i) {
      for (int c = prev + 1; c <= t.k[i]; ++c)
        ex.lambda[c - 1] = (i < a) ? anchor[i] + (t.k[i] - c) : anchor[i];
      prev = t.k[i];
    }
  }
  // ordering chain
  for (int c = 1; c < ks; ++c) {
    int x = ex.lambda[c - 1], y = ex.lambda[c];
    bool strict = c <= ka;
    bool good = strict ? x > y : x >= y;
    if (!good)
      cx.fail("lambda chain", at("lambda", c) + (strict ? " > " : " >= ") + at("lambda", c + 1) + " fails in " +
                                  seq(ex.lambda));
  }
  if (ex.lambda.back() <= 0)
    cx.fail("lambda last part", "lambda_{k_s} must be > 0 in " + seq(ex.lambda));
  for (int c = 1; c < ks; ++c)
    if (ex.lambda[c - 1] + ex.rho[c - 1] < ex.lambda[c] + ex.rho[c])
      cx.fail("rho-strict", "lambda + rho is not a partition at " + std::to_string(c) + ": " + seq(ex.lambda) +
                                " + " + seq(ex.rho));
  int kd = 0;
  while (kd < ks && ex.rho[kd] == kd) ++kd;
  for (int c = std::max(kd, 1); c < ks; ++c)
    if (ex.rho[c - 1] < ex.rho[c])
      cx.fail("rho shape", "rho must be weakly decreasing after its distinguished index: " + seq(ex.rho));
  return ex;
}

ShapeData from_extended(const Triple& t, const Extended& ex, Strictness st) {
  ShapeData d;
  d.lambda = ex.lambda;
  d.rho = ex.rho;
  d.split_index = ex.a;
  d.distinguished = ex.a == 0 ? 0 : t.k[ex.a - 1];
  d.strictness = st;
  d.anchor = anchors_of(t.k);
  return d;
}

std::optional<ShapeData> validate_D(const Triple& t, const ValidateOptions& opt, const Ctx& cx,
                                    std::vector<std::string>* notes) {
  if (!shape_or_sequences(t, cx)) return std::nullopt;
  const int s = t.length();
  if (t.p[s - 1] < 0) cx.fail("p non-negative", "p_s must be >= 0");
  Triple plus = plus_triple(t);
  plus.type = LieType::C;
  Ctx sub{cx.out, cx.prefix + "tau+: "};
  if (!t.extended) {
    if (t.q[s - 1] < 0) cx.fail("q non-negative", "q_s must be >= 0");
    validate_C(plus, opt, sub);
    std::vector<int> anchor(s);
    for (int i = 0; i < s; ++i) anchor[i] = t.p[i] + t.q[i];
    auto lam = strict_fill(t, anchor);
    check_strict(lam, 0, cx);
    if (lam.back() == 0 && notes) notes->push_back("lambda_{k_s} = 0");
    return finish(t, lam, Strictness::Strict);
  }
  for (int i = 0; i < s; ++i)
    if (t.q[i] == -1) cx.fail("q = -1", at("q", i + 1) + " = -1 is prohibited in type D");
  auto ex = extended_core(plus, opt, sub, notes);
  if (!ex) return std::nullopt;
  // type D anchors: one less than the tau+ anchors on isotropic entries
  Extended dx = *ex;
  const int ka = dx.a == 0 ? 0 : t.k[dx.a - 1];
  std::vector<int> anchor(s);
  for (int i = 0; i < s; ++i) {
    int base = t.p[i] + t.q[i];
    anchor[i] = i < dx.a ? base : base + t.k[i] - dx.rho[t.k[i] - 1];
  }
  int prev = 0;
  for (int i = 0; i < s; ++i) {
    for (int c = prev + 1; c <= t.k[i]; ++c)
      dx.lambda[c - 1] = (i < dx.a) ? anchor[i] + (t.k[i] - c) : anchor[i];
    prev = t.k[i];
  }
  const int ks = t.rank();
  for (int c = 1; c < ks; ++c) {
    bool strict = c < ka;
    int x = dx.lambda[c - 1], y = dx.lambda[c];
    if (strict ? x <= y : x < y)
      cx.fail("lambda chain", at("lambda", c) + (strict ? " > " : " >= ") + at("lambda", c + 1) + " fails in " +
                                  seq(dx.lambda));
  }
  if (dx.lambda.back() < 0) cx.fail("lambda last part", "lambda_{k_s} must be >= 0");
  for (int c = 1; c < ks; ++c)
    if (dx.lambda[c - 1] + dx.rho[c - 1] < dx.lambda[c] + dx.rho[c])
      cx.fail("rho-strict", "lambda + rho is not a partition: " + seq(dx.lambda) + " + " + seq(dx.rho));
  return from_extended(t, dx, Strictness::RhoStrict);
}

}  // namespace

int ShapeData::weight() const { return std::accumulate(lambda.begin(), lambda.end(), 0); }

std::string Triple::text() const {
  return to_string(type) + (extended ? "[ext]" : "") + " k=" + seq(k) + " p=" + seq(p) + " q=" + seq(q);
}

std::string ValidationResult::report() const {
  std::ostringstream os;
  if (violations.empty()) {
    os << "valid";
  } else {
    os << violations.size() << " violation(s):";
    for (const auto& v : violations) os << "\n  [" << v.rule << "] " << v.detail;
  }
  for (const auto& n : notes) os << "\n  note: " << n;
  return os.str();
}

ValidationResult validate_triple(const Triple& t, const ValidateOptions& opt) {
  ValidationResult r;
  Ctx cx{&r.violations, ""};
  std::optional<ShapeData> shape;
  switch (t.type) {
    case LieType::A:
      if (t.extended) cx.fail("extended", "type A has no extended mode");
      else shape = validate_A(t, cx);
      break;
    case LieType::B:
    case LieType::C:
      if (!t.extended) {
        shape = validate_C(t, opt, cx);
      } else if (auto ex = extended_core(t, opt, cx, &r.notes)) {
        shape = from_extended(t, *ex, Strictness::RhoStrict);
      }
      break;
    case LieType::D:
      shape = validate_D(t, opt, cx, &r.notes);
      break;
  }
  if (r.violations.empty()) r.shape = std::move(shape);
  return r;
}

ShapeData shape_of(const Triple& t, const ValidateOptions& opt) {
  auto r = validate_triple(t, opt);
  if (!r.ok()) throw InvalidTriple(r);
  return *r.shape;
}

std::vector<int> rho_conjugate(const std::vector<int>& rho) {
  int top = rho.empty() ? 0 : *std::max_element(rho.begin(), rho.end());
  std::vector<int> out;
  for (int i = 1; i <= top; ++i)
    out.push_back(static_cast<int>(std::count_if(rho.begin(), rho.end(), [i](int r) { return r >= i; })));
  return out;
}

Triple plus_triple(const Triple& d) {
  Triple t = d;
  for (auto& x : t.p) ++x;
  for (auto& x : t.q)
    if (x >= 0) ++x;
  return t;
}

std::vector<Triple> inflation_chain(const Triple& t) {
  if (t.extended) throw std::invalid_argument("inflation is defined for non-extended triples");
  ValidateOptions relaxed{true};
  shape_of(t, relaxed);
  if (t.type == LieType::D) {
    Triple plus = plus_triple(t);
    plus.type = LieType::C;
    auto chain = inflation_chain(plus);
    for (auto& c : chain) {
      c.type = LieType::D;
      for (auto& x : c.p) --x;
      for (auto& x : c.q) --x;
    }
    return chain;
  }
  const bool typeA = t.type == LieType::A;
  std::vector<Triple> chain;
  Triple cur = t;
  for (;;) {
    // rightmost gap first; inserted entries become the new left neighbour
    int gap_at = -1;
    for (int i = cur.length() - 1; i >= 0; --i) {
      int prev = i == 0 ? 0 : cur.k[i - 1];
      if (cur.k[i] - prev > 1) {
        gap_at = i;
        break;
      }
    }
    if (gap_at < 0) break;
    const int i = gap_at;
    bool p_changes;
    if (typeA) p_changes = i == 0 ? true : cur.p[i - 1] < cur.p[i];
    else p_changes = i == 0 ? true : cur.p[i - 1] > cur.p[i];
    int nk = cur.k[i] - 1;
    int np = cur.p[i], nq = cur.q[i];
    if (p_changes) np += typeA ? -1 : 1;
    else nq += 1;
    cur.k.insert(cur.k.begin() + i, nk);
    cur.p.insert(cur.p.begin() + i, np);
    cur.q.insert(cur.q.begin() + i, nq);
    chain.push_back(cur);
  }
  return chain;
}

Triple inflate(const Triple& t) {
  auto chain = inflation_chain(t);
  return chain.empty() ? t : chain.back();
}

bool has_gap(const Triple& t) {
  for (int i = 0; i < t.length(); ++i)
    if (t.k[i] - (i ? t.k[i - 1] : 0) > 1) return true;
  return false;
}

namespace {

// Sequences of length s over [lo, hi], weakly increasing or weakly decreasing.
void monotone(int s, int lo, int hi, bool increasing, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == s) {
    out.push_back(cur);
    return;
  }
  int a = lo, b = hi;
  if (!cur.empty()) (increasing ? a : b) = cur.back();
  for (int v = a; v <= b; ++v) {
    cur.push_back(v);
    monotone(s, lo, hi, increasing, cur, out);
    cur.pop_back();
  }
}

void strictly_increasing(int s, int hi, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == s) {
    out.push_back(cur);
    return;
  }
  for (int v = cur.empty() ? 1 : cur.back() + 1; v <= hi; ++v) {
    cur.push_back(v);
    strictly_increasing(s, hi, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Triple> enumerate_triples(LieType type, const ScanCaps& caps) {
  std::vector<Triple> out;
  if (caps.extended && type == LieType::A) throw std::invalid_argument("type A has no extended triples");
  const int lo = type == LieType::D ? 0 : 1;
  const int top_k = std::min(caps.max_rank, caps.max_entry);
  for (int s = 1; s <= caps.max_length; ++s) {
    std::vector<int> cur;
    std::vector<std::vector<int>> ks, ps, qs;
    strictly_increasing(s, top_k, cur, ks);
    monotone(s, lo, caps.max_entry, type == LieType::A, cur, ps);
    monotone(s, caps.extended ? -caps.max_entry : lo, caps.max_entry, false, cur, qs);
    for (const auto& k : ks)
      for (const auto& p : ps)
        for (const auto& q : qs) {
          if (caps.extended && std::find(q.begin(), q.end(), 0) != q.end()) continue;
          Triple t{type, k, p, q, caps.extended};
          ValidationResult v = validate_triple(t);
          if (!v.ok()) continue;
          int w = 0;
          for (int x : v.shape->lambda) w += x;
          if (w <= caps.max_weight) out.push_back(std::move(t));
        }
  }
  return out;
}

}  // namespace vexloci
