#include "vexloci/fixture.hpp"

#include <algorithm>
#include <stdexcept>

namespace vexloci {

namespace {

void fail(const std::string& msg) { throw std::invalid_argument("fixture: " + msg); }

// Multiset difference of root strings; every root of `sub` must be present.
std::vector<std::string> minus_roots(const BundleSpec& big, const BundleSpec& sub) {
  std::vector<std::string> rest = big.roots;
  for (const auto& r : sub.roots) {
    auto it = std::find(rest.begin(), rest.end(), r);
    if (it == rest.end()) fail(sub.name + " is not contained in " + big.name);
    rest.erase(it);
  }
  return rest;
}

std::string dual_text(const std::string& r) { return r.starts_with("~") ? r.substr(1) : "~" + r; }

}  // namespace

std::string to_string(Structure s) {
  switch (s) {
    case Structure::A: return "A";
    case Structure::Symplectic: return "symplectic";
    case Structure::OrthogonalEven: return "orthogonal-even";
  }
  throw std::logic_error("unknown structure");
}

Structure parse_structure(const std::string& s) {
  if (s == "A") return Structure::A;
  if (s == "symplectic") return Structure::Symplectic;
  if (s == "orthogonal-even") return Structure::OrthogonalEven;
  throw std::invalid_argument("unknown structure '" + s + "'");
}

Root parse_root(const VarTable& vars, const std::string& text) {
  Root r;
  std::string name = text;
  if (name.starts_with("~")) {
    r.dual = true;
    name = name.substr(1);
  }
  r.var = vars.find(name);
  if (r.var < 0) fail("unknown root variable '" + name + "'");
  if (vars.degree(r.var) != 1) fail("root '" + name + "' must have degree 1");
  return r;
}

std::string root_text(const VarTable& vars, const Root& r) { return (r.dual ? "~" : "") + vars.name(r.var); }

ExactPoly root_value(const VarTablePtr& vars, const Root& r, int max_root_degree) {
  ExactPoly x = ExactPoly::variable(vars, r.var);
  return r.dual ? fgl_inverse(x, max_root_degree) : x.truncate(max_root_degree);
}

const BundleSpec& RootFixture::bundle(const std::string& name) const {
  auto it = bundles.find(name);
  if (it == bundles.end()) fail("unknown bundle '" + name + "'");
  return it->second;
}

std::vector<Root> RootFixture::roots_of(const std::string& name) const {
  std::vector<Root> out;
  for (const auto& r : bundle(name).roots) out.push_back(parse_root(*vars, r));
  return out;
}

int RootFixture::shared_EF() const {
  int n = 0;
  std::vector<std::string> f = bundle("F").roots;
  for (const auto& r : bundle("E").roots) {
    auto it = std::find(f.begin(), f.end(), r);
    if (it != f.end()) {
      ++n;
      f.erase(it);
    }
  }
  return n;
}

void RootFixture::validate() const {
  if (!vars) fail("no variable table");
  if (vars->beta() < 0) fail("variable table lacks b");
  for (const auto& [name, b] : bundles) {
    if (name != b.name) fail("bundle key '" + name + "' does not match its name");
    for (const auto& r : b.roots) parse_root(*vars, r);
  }
  for (std::size_t i = 0; i < channels.size(); ++i) {
    const auto& ch = channels[i];
    for (const auto& n : ch.plus) bundle(n);
    for (const auto& n : ch.minus) bundle(n);
    if (ch.euler) {
      if (structure != Structure::OrthogonalEven) fail("Euler data needs an orthogonal fixture");
      minus_roots(bundle("E"), bundle(ch.euler->first));
      minus_roots(bundle("F"), bundle(ch.euler->second));
    }
  }
  if (structure == Structure::A) return;
  const BundleSpec& V = bundle("V");
  for (const auto& r : V.roots) {
    auto mine = std::count(V.roots.begin(), V.roots.end(), r);
    auto theirs = std::count(V.roots.begin(), V.roots.end(), dual_text(r));
    if (mine != theirs) fail("roots of V do not pair up at '" + r + "'");
  }
  for (const auto& [name, b] : bundles) {
    if (name == "V") continue;
    for (const auto& r : b.roots)
      if (std::count(b.roots.begin(), b.roots.end(), dual_text(r)))
        fail("bundle " + name + " is not isotropic at '" + r + "'");
    minus_roots(V, b);
  }
  int n = V.rank() / 2;
  if (bundle("E").rank() != n || bundle("F").rank() != n) fail("E and F must be maximal isotropic");
  if (dim_EF && *dim_EF != shared_EF())
    fail("declared dim_EF " + std::to_string(*dim_EF) + " but E and F share " + std::to_string(shared_EF()) +
         " roots");
}

std::vector<ExactPoly> chern_of_virtual(const VarTablePtr& vars, const std::vector<ExactPoly>& plus,
                                        const std::vector<ExactPoly>& minus, int max_root_degree) {
  const int N = max_root_degree;
  std::vector<ExactPoly> c(N + 1, ExactPoly(vars));
  c[0] = ExactPoly::constant(vars, 1);
  // every root has root degree >= 1, so c_m vanishes below the bound for m > N
  for (const auto& y : plus)
    for (int m = N; m >= 1; --m) c[m] += mul_trunc(y, c[m - 1], N);
  for (const auto& x : minus)
    for (int m = 1; m <= N; ++m) c[m] -= mul_trunc(x, c[m - 1], N);
  return c;
}

std::vector<ExactPoly> root_values(const RootFixture& fx, const std::string& name, int max_root_degree) {
  std::vector<ExactPoly> out;
  for (const auto& r : fx.roots_of(name)) out.push_back(root_value(fx.vars, r, max_root_degree));
  return out;
}

std::vector<ExactPoly> dual_root_values(const RootFixture& fx, const std::string& name, int max_root_degree) {
  std::vector<ExactPoly> out;
  for (auto r : fx.roots_of(name)) {
    r.dual = !r.dual;
    out.push_back(root_value(fx.vars, r, max_root_degree));
  }
  return out;
}

std::vector<ExactPoly> chern_of_virtual(const RootFixture& fx, const std::vector<std::string>& plus,
                                        const std::vector<std::string>& minus, int max_root_degree) {
  std::vector<ExactPoly> p, m;
  for (const auto& n : plus)
    for (auto& v : root_values(fx, n, max_root_degree)) p.push_back(std::move(v));
  for (const auto& n : minus)
    for (auto& v : root_values(fx, n, max_root_degree)) m.push_back(std::move(v));
  return chern_of_virtual(fx.vars, p, m, max_root_degree);
}

ExactPoly chern_at(const std::vector<ExactPoly>& c, const ExactPoly& u, int max_root_degree) {
  ExactPoly out(u.vars());
  ExactPoly power = ExactPoly::constant(u.vars(), 1);
  for (std::size_t m = 0; m < c.size(); ++m) {
    out += mul_trunc(c[m], power, max_root_degree);
    power = mul_trunc(power, u, max_root_degree);
  }
  return out;
}

ExactPoly gamma_of(const RootFixture& fx, int max_root_degree) {
  if (fx.structure == Structure::A) fail("gamma needs a fixture with a bilinear form");
  auto c = chern_of_virtual(fx, {"V"}, {"E", "F"}, max_root_degree);
  return chern_at(c, ExactPoly::beta(fx.vars) * Rational(1, 2), max_root_degree);
}

int euler_index(const RootFixture& fx, const std::string& Ep, const std::string& Fq) {
  return fx.bundle("E").rank() - fx.bundle(Ep).rank() + fx.bundle("F").rank() - fx.bundle(Fq).rank();
}

ExactPoly euler_value(const RootFixture& fx, const std::string& Ep, const std::string& Fq, int max_root_degree) {
  if (fx.structure != Structure::OrthogonalEven) fail("Euler classes need an orthogonal fixture");
  const int N = max_root_degree;
  ExactPoly top = ExactPoly::constant(fx.vars, 1);
  auto rest_e = minus_roots(fx.bundle("E"), fx.bundle(Ep));
  auto rest_f = minus_roots(fx.bundle("F"), fx.bundle(Fq));
  for (const auto* rest : {&rest_e, &rest_f})
    for (const auto& r : *rest) top = mul_trunc(top, root_value(fx.vars, parse_root(*fx.vars, r), N), N);
  ExactPoly v = mul_trunc(gamma_of(fx, N), top, N);
  return fx.shared_EF() % 2 ? -v : v;
}

Specialization specialization_of(const RootFixture& fx, int max_root_degree) {
  fx.validate();
  Specialization sp;
  sp.vars = fx.vars;
  sp.max_root_degree = max_root_degree;
  for (const auto& ch : fx.channels) {
    ChannelClasses cc;
    cc.c = chern_of_virtual(fx, ch.plus, ch.minus, max_root_degree);
    if (ch.euler) {
      cc.e = euler_value(fx, ch.euler->first, ch.euler->second, max_root_degree);
      cc.e_index = euler_index(fx, ch.euler->first, ch.euler->second);
    }
    sp.channels.push_back(std::move(cc));
  }
  return sp;
}

namespace {

using TermList = std::vector<std::pair<const Monomial*, const Rational*>>;

class Specializer {
 public:
  explicit Specializer(const Specialization& sp) : sp_(sp), N_(sp.max_root_degree) {
    int b = sp.vars->beta();
    if (b < 0) throw std::invalid_argument("specialization table lacks b");
    beta_ = ExactPoly::variable(sp.vars, b);
  }

  ExactPoly run(const TermList& terms, int channels) {
    channels_ = channels;
    return rec(terms, 0, ExactPoly::constant(sp_.vars, 1));
  }

 private:
  const ExactPoly* value(int ch, Kind kind, int a) const {
    const ChannelClasses& cc = sp_.channels[ch];
    if (a < 0) return nullptr;
    if (kind == Kind::C) return a < static_cast<int>(cc.c.size()) ? &cc.c[a] : nullptr;
    if (!cc.e) throw std::invalid_argument("e symbol on channel " + std::to_string(ch + 1) + " without Euler data");
    return a == cc.e_index ? &*cc.e : nullptr;
  }

  ExactPoly rec(const TermList& terms, int ch, const ExactPoly& acc) {
    if (ch == channels_) {
      // remaining factor: sum of coefficient * b^t
      ExactPoly leaf(sp_.vars);
      std::map<int, Rational> by_beta;
      for (const auto& [m, c] : terms) by_beta[m->beta] += *c;
      for (const auto& [t, c] : by_beta) leaf += pow_trunc(beta_, static_cast<unsigned>(t), N_) * c;
      return mul_trunc(acc, leaf, N_);
    }
    std::map<std::pair<int, int>, TermList> groups;
    for (const auto& t : terms)
      groups[{static_cast<int>(t.first->kind(ch)), t.first->idx[ch]}].push_back(t);
    ExactPoly out(sp_.vars);
    for (const auto& [key, sub] : groups) {
      const ExactPoly* v = value(ch, static_cast<Kind>(key.first), key.second);
      if (!v || v->is_zero()) continue;
      out += rec(sub, ch + 1, mul_trunc(acc, *v, N_));
    }
    return out;
  }

  const Specialization& sp_;
  int N_;
  int channels_ = 0;
  ExactPoly beta_;
};

}  // namespace

ExactPoly specialize(const ClassSeries& s, const Specialization& sp) {
  if (s.channels() > static_cast<int>(sp.channels.size()))
    throw std::invalid_argument("series has " + std::to_string(s.channels()) + " channels, specialization maps " +
                                std::to_string(sp.channels.size()));
  TermList terms;
  for (const auto& [m, c] : s.terms()) terms.emplace_back(&m, &c);
  Specializer run(sp);
  return run.run(terms, s.channels());
}

ExactPoly specialize(const ClassSeries& s, const RootFixture& fx, int max_root_degree) {
  return specialize(s, specialization_of(fx, max_root_degree));
}

}  // namespace vexloci
