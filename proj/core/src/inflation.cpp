#include "vexloci/inflation.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "vexloci/fraction.hpp"

namespace vexloci {

namespace {

std::vector<long> distinct_slopes(std::mt19937_64& rng, int count, std::set<long>& used) {
  std::uniform_int_distribution<long> pick(1, 1000);
  std::vector<long> out;
  while (static_cast<int>(out.size()) < count) {
    long r = pick(rng);
    if (used.insert(r).second) out.push_back(r);
  }
  return out;
}

ExactPoly on_line(const VarTablePtr& v, long slope, bool dual, int N) {
  ExactPoly x = ExactPoly::variable(v, "t") * Rational(slope);
  return dual ? fgl_inverse(x, N) : x.truncate(N);
}

}  // namespace

LineFixture make_line_fixture(LieType type, const std::vector<Triple>& triples, std::uint64_t seed,
                              int symbols) {
  if (type != LieType::A && type != LieType::C) throw std::invalid_argument("line fixtures cover types A and C");
  int pmax = 0, qmax = 0;
  for (const auto& t : triples) {
    for (int p : t.p) pmax = std::max(pmax, p);
    for (int q : t.q) qmax = std::max(qmax, q);
  }
  LineFixture fx;
  fx.type = type;
  std::vector<std::string> names{"t"};
  for (int j = 1; j <= symbols; ++j) names.push_back("a" + std::to_string(j));
  fx.vars = make_root_vars(names);
  std::mt19937_64 rng(seed);
  std::set<long> used;
  if (type == LieType::A) {
    fx.x = distinct_slopes(rng, pmax, used);
    fx.y = distinct_slopes(rng, qmax, used);
    return fx;
  }
  const int n = std::max(pmax, qmax);
  fx.x = distinct_slopes(rng, n, used);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution coin(0.5);
  for (int j : order) fx.f.emplace_back(j, coin(rng));
  return fx;
}

Specialization line_specialization(const Triple& t, const LineFixture& fx, int N) {
  if (t.type != fx.type) throw std::invalid_argument("triple and line fixture types differ");
  ShapeData sh = shape_of(t, ValidateOptions{true});
  const auto& v = fx.vars;
  Specialization sp;
  sp.vars = v;
  sp.max_root_degree = N;
  for (int ch = 0; ch < t.rank(); ++ch) {
    const int j = sh.anchor[ch];
    std::vector<ExactPoly> plus, minus;
    if (t.type == LieType::A) {
      if (t.p[j] > static_cast<int>(fx.x.size()) || t.q[j] > static_cast<int>(fx.y.size()))
        throw std::invalid_argument("line fixture too small for the triple");
      for (int r = 0; r < t.q[j]; ++r) plus.push_back(on_line(v, fx.y[r], false, N));
      for (int r = 0; r < t.p[j]; ++r) minus.push_back(on_line(v, fx.x[r], false, N));
    } else {
      const int n = fx.n();
      const int re = n + 1 - t.p[j], rf = n + 1 - t.q[j];
      if (re < 0 || rf < 0) throw std::invalid_argument("line fixture too small for the triple");
      for (long s : fx.x) {
        plus.push_back(on_line(v, s, false, N));
        plus.push_back(on_line(v, s, true, N));
      }
      for (int r = 0; r < re; ++r) minus.push_back(on_line(v, fx.x[r], false, N));
      for (int r = 0; r < rf; ++r) minus.push_back(on_line(v, fx.x[fx.f[r].first], fx.f[r].second, N));
    }
    ChannelClasses cc;
    cc.c = chern_of_virtual(v, plus, minus, N);
    sp.channels.push_back(std::move(cc));
  }
  return sp;
}

std::vector<InsertionOrigin> insertion_origins(const Triple& t, const Triple& inflated) {
  std::vector<InsertionOrigin> out;
  std::size_t i = 0;
  for (int kk : inflated.k) {
    while (i < t.k.size() && t.k[i] < kk) ++i;
    if (i == t.k.size()) throw std::invalid_argument("inflated triple extends past the original");
    out.push_back({static_cast<int>(i), t.k[i] - kk});
  }
  return out;
}

namespace {

struct Prepared {
  Triple inflated;
  FormulaOutput f;
  int N = 0;
};

Prepared prepare(const Triple& t, const InflationOptions& opt) {
  if (t.type != LieType::A && t.type != LieType::C)
    throw std::invalid_argument("inflation invariance is checked in types A and C");
  if (!has_gap(t)) throw std::invalid_argument("no gap to inflate in " + t.text());
  Prepared pr;
  pr.inflated = inflate(t);
  pr.N = opt.truncation < 0 ? default_truncation(shape_of(t).lambda) : opt.truncation;
  pr.f = class_of(t, pr.N, opt.pf);
  return pr;
}

IdentityResult compare(const Triple& t, const Prepared& pr, int trial, const ExactPoly& a, const ExactPoly& b) {
  std::string d = first_difference(a.truncate(pr.N), b.truncate(pr.N));
  if (d.empty()) return {true, ""};
  return {false, t.text() + " vs " + pr.inflated.text() + " trial " + std::to_string(trial) + ": differ at " + d};
}

}  // namespace

IdentityResult inflation_invariance_check(const Triple& t, const InflationOptions& opt) {
  Prepared pr = prepare(t, opt);
  // the det/Pf of t' is the same series as that of t once lambda agrees
  if (shape_of(pr.inflated, ValidateOptions{true}).lambda != pr.f.shape.lambda)
    return {false, "inflation changed lambda for " + t.text()};
  auto origins = insertion_origins(t, pr.inflated);
  int symbols = 0;
  for (const auto& o : origins) symbols = std::max(symbols, o.steps);
  symbols *= static_cast<int>(t.k.size());
  for (int trial = 0; trial < opt.trials; ++trial) {
    LineFixture fx = make_line_fixture(t.type, {t}, opt.seed + static_cast<std::uint64_t>(trial), symbols);
    Specialization base = line_specialization(t, fx, pr.N);
    ShapeData sh = shape_of(t);
    // channel of t anchored at entry i, read off its first channel
    std::vector<int> first_channel(t.k.size(), -1);
    for (int ch = t.rank() - 1; ch >= 0; --ch) first_channel[sh.anchor[ch]] = ch;
    Specialization sp;
    sp.vars = fx.vars;
    sp.max_root_degree = pr.N;
    const int width = symbols / static_cast<int>(t.k.size());
    ShapeData sh_inflated = shape_of(pr.inflated, ValidateOptions{true});
    for (int ch = 0; ch < pr.inflated.rank(); ++ch) {
      const auto& o = origins[sh_inflated.anchor[ch]];
      std::vector<ExactPoly> c = base.channels[first_channel[o.entry]].c;
      std::vector<ExactPoly> plus;
      for (int step = 1; step <= o.steps; ++step)
        plus.push_back(ExactPoly::variable(fx.vars, "a" + std::to_string(o.entry * width + step)));
      if (!plus.empty()) {
        auto factor = chern_of_virtual(fx.vars, plus, {}, pr.N);
        std::vector<ExactPoly> prod(pr.N + 1, ExactPoly(fx.vars));
        for (int m = 0; m <= pr.N; ++m)
          for (int r = 0; r <= m; ++r) prod[m] += mul_trunc(c[m - r], factor[r], pr.N);
        c = std::move(prod);
      }
      ChannelClasses cc;
      cc.c = std::move(c);
      sp.channels.push_back(std::move(cc));
    }
    ExactPoly lhs = specialize(pr.f.series, base);
    ExactPoly rhs = specialize(pr.f.series, sp);
    IdentityResult r = compare(t, pr, trial, lhs, rhs);
    if (!r.holds) return r;
  }
  return {true, t.text() + " vs " + pr.inflated.text() + " at N=" + std::to_string(pr.N)};
}

IdentityResult inflation_bundle_check(const Triple& t, const InflationOptions& opt) {
  Prepared pr = prepare(t, opt);
  for (int trial = 0; trial < opt.trials; ++trial) {
    LineFixture fx = make_line_fixture(t.type, {t, pr.inflated}, opt.seed + static_cast<std::uint64_t>(trial));
    ExactPoly a = specialize(pr.f.series, line_specialization(t, fx, pr.N));
    ExactPoly b = specialize(pr.f.series, line_specialization(pr.inflated, fx, pr.N));
    IdentityResult r = compare(t, pr, trial, a, b);
    if (!r.holds) return r;
  }
  return {true, t.text() + " vs " + pr.inflated.text() + " at N=" + std::to_string(pr.N)};
}

}  // namespace vexloci
