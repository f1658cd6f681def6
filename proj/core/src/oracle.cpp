#include "vexloci/oracle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "vexloci/formulas.hpp"
#include "vexloci/raising.hpp"

namespace vexloci {

namespace {

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

IdentityResult compare(const ExactPoly& a, const ExactPoly& b, int N, const std::string& what) {
  std::string d = first_difference(a.truncate(N), b.truncate(N));
  if (d.empty()) return {true, what};
  return {false, what + ": differ at " + d};
}

// First failure wins; otherwise the details are joined.
IdentityResult merge(const std::vector<IdentityResult>& rs) {
  std::string all;
  for (const auto& r : rs) {
    if (!r.holds) return r;
    all += (all.empty() ? "" : "; ") + r.detail;
  }
  return {true, all};
}

ExactPoly one(const VarTablePtr& v) { return ExactPoly::constant(v, 1); }

ExactPoly product_trunc(const std::vector<ExactPoly>& fs, const VarTablePtr& v, int N) {
  ExactPoly p = one(v);
  for (const auto& f : fs) p = mul_trunc(p, f, N);
  return p;
}

ExactPoly value_of(const VarTablePtr& v, const std::string& root, int N) {
  return root_value(v, parse_root(*v, root), N);
}

std::string dual_of(const std::string& r) { return r.starts_with("~") ? r.substr(1) : "~" + r; }

std::vector<std::string> without(std::vector<std::string> from, const std::vector<std::string>& drop) {
  for (const auto& r : drop) {
    auto it = std::find(from.begin(), from.end(), r);
    if (it != from.end()) from.erase(it);
  }
  return from;
}

ChannelSpec channel(const std::string& sub_e, const std::string& sub_f, bool euler) {
  ChannelSpec ch{{"V"}, {sub_e, sub_f}, std::nullopt};
  if (euler) ch.euler = std::make_pair(sub_e, sub_f);
  return ch;
}

// Single channel operator (1 - bT)/(2 - bT) (1 - bT)^{-a} on c_k.
ClassSeries prop_series(int k, int a, int N) {
  RaisingExpr r = one_minus_beta_t(1, 1) * two_minus_beta_t_inv(1) * one_minus_beta_t(1, -a);
  return apply_raising(r, ClassSeries::seed({k}), N);
}

}  // namespace

RootFixture frame_fixture(const QuadricFixture& q, Structure s) {
  if (s == Structure::A) throw std::invalid_argument("frame fixtures need a bilinear form");
  RootFixture fx;
  fx.vars = q.vars;
  fx.structure = s;
  BundleSpec V{"V", {}}, E{"E", {}}, F{"F", {}};
  for (int j = 0; j < q.n(); ++j) {
    const std::string z = q.vars->name(q.z[j]);
    V.roots.push_back(z);
    V.roots.push_back("~" + z);
    F.roots.push_back(z);
    E.roots.push_back(q.in_I(j) ? z : "~" + z);
  }
  fx.add(V);
  fx.add(E);
  fx.add(F);
  fx.dim_EF = static_cast<int>(q.I.size());
  fx.validate();
  return fx;
}

BundleSpec leading(const RootFixture& fx, const std::string& from, int rank, const std::string& name) {
  const BundleSpec& b = fx.bundle(from);
  if (rank < 0 || rank > b.rank())
    throw std::invalid_argument("rank " + std::to_string(rank) + " outside 0.." + std::to_string(b.rank()) +
                                " for " + from);
  return {name, std::vector<std::string>(b.roots.begin(), b.roots.begin() + rank)};
}

// ---- Chern class properties ----

IdentityResult verify_property_a(int e, int N) {
  if (e < 1) throw std::invalid_argument("property (a) needs rank >= 1");
  std::vector<std::string> names;
  for (int j = 1; j <= e; ++j) names.push_back("y" + std::to_string(j));
  names.push_back("x");
  RootFixture fx;
  fx.vars = make_root_vars(names);
  fx.add({"E", std::vector<std::string>(names.begin(), names.end() - 1)});
  fx.add({"L", {"x"}});
  fx.channels.push_back({{"E"}, {"L"}, std::nullopt});
  const ExactPoly dual_x = value_of(fx.vars, "~x", N);
  std::vector<ExactPoly> fs;
  for (int j = 0; j < e; ++j) fs.push_back(fgl_sum(value_of(fx.vars, names[j], N), dual_x).truncate(N));
  ExactPoly lhs = product_trunc(fs, fx.vars, N);
  ExactPoly rhs = specialize(apply_raising(one_minus_beta_t(1, -e), ClassSeries::seed({e}), N), fx, N);
  return compare(lhs, rhs, N, "(a) e=" + std::to_string(e));
}

IdentityResult verify_property_b(int e, int a, int b) {
  if (e < 1 || a < 0 || b < e) throw std::invalid_argument("property (b) needs e >= 1, a >= 0, b >= e");
  std::vector<std::string> names;
  for (int j = 1; j <= e; ++j) names.push_back("y" + std::to_string(j));
  names.push_back("x");
  VarTablePtr v = make_root_vars(names);
  const int N = a + b;
  std::vector<ExactPoly> ys;
  for (int j = 0; j < e; ++j) ys.push_back(ExactPoly::variable(v, names[j]));
  ExactPoly x = ExactPoly::variable(v, "x");
  auto c = chern_of_virtual(v, ys, {x}, N);
  // both sides are homogeneous of root degree a + b, so the bound is exact
  ExactPoly lhs = pow_trunc(-x, static_cast<unsigned>(a), N) * c[b];
  return compare(lhs, c[a + b], N,
                 "(b) e=" + std::to_string(e) + " a=" + std::to_string(a) + " b=" + std::to_string(b));
}

IdentityResult verify_property_a_b(int e, int N) {
  std::vector<IdentityResult> rs{verify_property_a(e, N)};
  for (int a = 0; a <= 3; ++a)
    for (int b = e; b <= e + 2; ++b) rs.push_back(verify_property_b(e, a, b));
  return merge(rs);
}

IdentityResult verify_property_c(int e) {
  if (e < 1) throw std::invalid_argument("property (c) needs rank >= 1");
  std::vector<std::string> names;
  for (int j = 1; j <= e; ++j) names.push_back("x" + std::to_string(j));
  VarTablePtr v = make_root_vars(names);
  std::vector<int> roots;
  for (const auto& n : names) roots.push_back(v->at(n));
  AtomTable atoms(v);
  const ExactPoly b = ExactPoly::beta(v);
  // c(Q) at the point where S = L_i is prod_{j != i} (1 + x_j)
  PointIntegrand cq = [&](int i, AtomTable&) {
    ExactPoly p = one(v);
    for (int j = 0; j < e; ++j)
      if (j != i) p *= one(v) + ExactPoly::variable(v, roots[j]);
    return FactoredFraction::of(p);
  };
  PointIntegrand unit = [&](int, AtomTable&) { return FactoredFraction::of(one(v)); };
  ExactPoly want_q = one(v), want_1 = one(v);
  for (int k = 1; k < e; ++k) {
    want_q *= one(v) - b;
    want_1 *= -b;
  }
  std::vector<IdentityResult> rs;
  for (auto [g, want, label] : {std::tuple{cq, want_q, "c(Q)"}, std::tuple{unit, want_1, "1"}}) {
    SumCheck s = fraction_sum_equals(atoms, {projective_sum(atoms, roots, g)}, FactoredFraction::of(want));
    std::string what = std::string("(c) e=") + std::to_string(e) + " integrand " + label;
    if (!s.equal) return {false, what + ": " + s.witness};
    // the polynomial path must agree with the exact check
    rs.push_back(compare(pushforward_projective(atoms, roots, g, e), want, e, what));
  }
  return merge(rs);
}

// ---- Euler class ----

IdentityResult verify_gamma_props(const RootFixture& fx, const std::vector<std::string>& D, int N) {
  if (fx.structure != Structure::OrthogonalEven) throw std::invalid_argument("gamma needs an orthogonal fixture");
  fx.validate();
  const auto& v = fx.vars;
  const ExactPoly b = ExactPoly::beta(v);
  std::vector<IdentityResult> rs;
  auto c = chern_of_virtual(fx, {"V"}, {"E", "F"}, N);
  const ExactPoly gamma = gamma_of(fx, N);
  rs.push_back(compare(mul_trunc(gamma, gamma, N), chern_at(c, b, N), N, "gamma^2 = c(b)"));
  ExactPoly g0 = gamma.set_zero(v->beta());
  rs.push_back(compare(g0, one(v), N, "gamma(b=0) = 1"));

  // (ii)
  const auto& E = fx.bundle("E").roots;
  const auto& F = fx.bundle("F").roots;
  for (const auto& d : D)
    if (std::count(D.begin(), D.end(), d) > std::min(std::count(E.begin(), E.end(), d), std::count(F.begin(), F.end(), d)))
      throw std::invalid_argument("root '" + d + "' is not shared by E and F");
  std::vector<std::string> Dd;
  for (const auto& d : D) Dd.push_back(dual_of(d));
  auto values = [&](const std::vector<std::string>& rs_) {
    std::vector<ExactPoly> out;
    for (const auto& r : rs_) out.push_back(value_of(v, r, N));
    return out;
  };
  auto Vq = without(without(fx.bundle("V").roots, D), Dd);
  auto minus = without(E, D);
  for (const auto& r : without(F, D)) minus.push_back(r);
  ExactPoly gq = chern_at(chern_of_virtual(v, values(Vq), values(minus), N), b * Rational(1, 2), N);
  std::vector<ExactPoly> cd{gamma};
  for (const auto& d : values(D)) cd.push_back(one(v) + b * d);
  rs.push_back(compare(gq, product_trunc(cd, v, N), N, "gamma(E/D,F/D) = gamma c(D;b) with |D|=" + std::to_string(D.size())));

  // (iii)
  ExactPoly cnF = product_trunc(dual_root_values(fx, "F", N), v, N);
  ExactPoly cnE = mul_trunc(gamma, product_trunc(root_values(fx, "E", N), v, N), N);
  if (fx.shared_EF() % 2) cnE = -cnE;
  rs.push_back(compare(cnF, cnE, N, "c_n(F^*) = (-1)^dim gamma c_n(E)"));

  // c(u) c(b - u) = c(b) at a spare variable
  if (v->find("u") >= 0) {
    bool in_use = false;
    for (const auto& [name, bs] : fx.bundles)
      for (const auto& r : bs.roots) in_use = in_use || r == "u" || r == "~u";
    if (in_use) throw std::invalid_argument("variable u is a bundle root; it must be free");
    ExactPoly u = ExactPoly::variable(v, "u");
    rs.push_back(compare(mul_trunc(chern_at(c, u, N), chern_at(c, b - u, N), N), chern_at(c, b, N), N,
                         "c(u) c(b-u) = c(b)"));
  } else {
    rs.push_back({true, "c(u) c(b-u) = c(b) not run: fixture has no free variable u"});
  }
  return merge(rs);
}

// ---- quadric pushforwards ----

IdentityResult verify_pushforward_ef(int n, const std::vector<int>& I, int N) {
  QuadricFixture q = make_quadric(n, I);
  RootFixture fx = frame_fixture(q, Structure::OrthogonalEven);
  AtomTable atoms(q.vars);
  PointIntegrand unit = [&](int, AtomTable&) { return FactoredFraction::of(one(q.vars)); };
  ExactPoly lhs = pushforward_quadric(atoms, q, unit, N);
  ExactPoly rhs = one(q.vars);
  if (q.I.size() % 2 == 0) rhs -= gamma_of(fx, N);
  return compare(lhs, rhs, N, "pi_*(ef) n=" + std::to_string(n) + " I={" + join(q.I) + "}");
}

IdentityResult verify_pushforward_prop(int n, const std::vector<int>& I, int k, int a, int N) {
  if (k < 0 || a < 0) throw std::invalid_argument("k and a must be non-negative");
  QuadricFixture q = make_quadric(n, I);
  RootFixture fx = frame_fixture(q, Structure::OrthogonalEven);
  fx.channels.push_back({{"V"}, {"E", "F"}, std::nullopt});
  const auto& v = q.vars;
  const std::string what = "n=" + std::to_string(n) + " I={" + join(q.I) + "} k=" + std::to_string(k) +
                           " a=" + std::to_string(a);
  if (k == 0) {
    ExactPoly lhs = specialize(prop_series(0, 0, N), fx, N);
    ExactPoly rhs = one(v) - gamma_of(fx, N) * Rational(1, 2);
    return compare(lhs, rhs, N, "(1-bT)/(2-bT) c_0 = 1 - gamma/2, " + what);
  }
  AtomTable atoms(v);
  // h restricts to the dual of z_i: h^k/(1+bh)^{k-a} = (-z_i)^k (1 + b z_i)^{-a}
  PointIntegrand g = [&](int i, AtomTable& at) {
    ExactPoly num = one(v);
    for (int t = 0; t < k; ++t) num *= -ExactPoly::variable(v, q.z[i]);
    if (a == 0) return FactoredFraction::of(num);
    return FactoredFraction::over(at, num, one(v) + ExactPoly::beta(v) * ExactPoly::variable(v, q.z[i]), a);
  };
  ExactPoly lhs = pushforward_quadric(atoms, q, g, N);
  ExactPoly rhs = specialize(prop_series(k, a, N), fx, N);
  return compare(lhs, rhs, N, "pi_*(h^k/(1+bh)^(k-a) ef), " + what);
}

namespace {

// Class of {D'_1 in F'_q} inside the subquotient frame starting at index `from`:
// pi_*(c(E'/D'_1 (x) S^*) c(F'/F'_q (x) S^*) e f) on the quadric of that frame.
ExactPoly basic_pushforward(const QuadricFixture& q, int from, int q_rank, int N) {
  QuadricFixture sub;
  sub.vars = q.vars;
  sub.z.assign(q.z.begin() + from, q.z.end());
  for (int j : q.I)
    if (j >= from) sub.I.push_back(j - from);
  const int m = sub.n();
  if (q_rank < 0 || q_rank > m) throw std::invalid_argument("q out of range for the frame");
  std::vector<FrameRoot> weights;
  for (int j = 1; j < m; ++j) weights.push_back({j, !sub.in_I(j)});
  for (int j = m - q_rank; j < m; ++j) weights.push_back({j, false});
  AtomTable atoms(q.vars);
  PointIntegrand g = [&](int i, AtomTable& at) {
    FactoredFraction f = FactoredFraction::of(one(q.vars));
    for (const auto& w : weights) f = ff_mul(f, fgl_weight(at, sub, w, i));
    return f;
  };
  return pushforward_quadric(atoms, sub, g, N);
}

}  // namespace

IdentityResult verify_basicD(int n, int q_rank, const std::vector<int>& I, int N) {
  if (n < 1) throw std::invalid_argument("basic case needs n >= 1");
  QuadricFixture q = make_quadric(n, I);
  RootFixture fx = frame_fixture(q, Structure::OrthogonalEven);
  fx.add(leading(fx, "E", 1, "D1"));
  fx.add(leading(fx, "F", n - q_rank, "Fq"));
  fx.channels.push_back(channel("D1", "Fq", true));
  ExactPoly lhs = basic_pushforward(q, 0, q_rank, N);
  ExactPoly rhs = specialize(raising_D({n - 1 + q_rank}, N), fx, N);
  return compare(lhs, rhs, N,
                 "basic D n=" + std::to_string(n) + " q=" + std::to_string(q_rank) + " I={" + join(q.I) + "}");
}

// ---- dominant cases ----

namespace {

void check_weakly_decreasing(const std::vector<int>& q) {
  if (q.empty()) throw std::invalid_argument("dominant case needs at least one condition");
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] < 0) throw std::invalid_argument("q entries must be non-negative");
    if (i && q[i] > q[i - 1]) throw std::invalid_argument("q must be weakly decreasing");
  }
}

IdentityResult dominant_A(const std::vector<int>& q, int N) {
  const int s = static_cast<int>(q.size());
  std::vector<std::string> names;
  for (int i = 1; i <= s; ++i) names.push_back("x" + std::to_string(i));
  for (int j = 1; j <= q[0]; ++j) names.push_back("y" + std::to_string(j));
  RootFixture fx;
  fx.vars = make_root_vars(names);
  for (int i = 1; i <= s; ++i) {
    BundleSpec Ei{"E" + std::to_string(i), {}}, Fi{"G" + std::to_string(i), {}};
    for (int t = 1; t <= i; ++t) Ei.roots.push_back("x" + std::to_string(t));
    for (int t = 1; t <= q[i - 1]; ++t) Fi.roots.push_back("y" + std::to_string(t));
    fx.add(Ei);
    fx.add(Fi);
    fx.channels.push_back({{Fi.name}, {Ei.name}, std::nullopt});
  }
  std::vector<ExactPoly> fs;
  for (int i = 1; i <= s; ++i) {
    ExactPoly dx = value_of(fx.vars, "~x" + std::to_string(i), N);
    for (int t = 1; t <= q[i - 1]; ++t)
      fs.push_back(fgl_sum(value_of(fx.vars, "y" + std::to_string(t), N), dx).truncate(N));
  }
  ExactPoly lhs = product_trunc(fs, fx.vars, N);
  RaisingExpr r;
  for (int i = 1; i <= s; ++i) r *= one_minus_beta_t(i, -q[i - 1]);
  for (int i = 1; i <= s; ++i)
    for (int j = i + 1; j <= s; ++j) r *= one_minus_r(i, j);
  ExactPoly rhs = specialize(apply_raising(r, ClassSeries::seed(q), N), fx, N);
  return compare(lhs, rhs, N, "dominant A q=(" + join(q) + ")");
}

// D_i = first i roots of E, F_{q_i} = first `rank_f(i)` roots of F; D_{i-1} must lie in F_{q_i}.
void check_frame_flags(const RootFixture& fx, int s, const std::vector<int>& f_ranks) {
  const auto& E = fx.bundle("E").roots;
  const auto& F = fx.bundle("F").roots;
  if (s > static_cast<int>(E.size())) throw std::invalid_argument("more conditions than the rank of E");
  for (int i = 1; i <= s; ++i) {
    int rf = f_ranks[i - 1];
    if (rf < 0 || rf > static_cast<int>(F.size())) throw std::invalid_argument("F_q rank out of range");
    for (int t = 0; t < i - 1; ++t)
      if (std::find(F.begin(), F.begin() + rf, E[t]) == F.begin() + rf)
        throw std::invalid_argument("fixture shape mismatch: D_" + std::to_string(i - 1) + " is not inside F_q" +
                                    std::to_string(i));
  }
}

IdentityResult dominant_C(int n, const std::vector<int>& q, const std::vector<int>& I, int N) {
  const int s = static_cast<int>(q.size());
  QuadricFixture qf = make_quadric(n, I);
  RootFixture fx = frame_fixture(qf, Structure::Symplectic);
  std::vector<int> f_ranks;
  for (int i = 1; i <= s; ++i) f_ranks.push_back(n + 1 - q[i - 1]);
  check_frame_flags(fx, s, f_ranks);
  std::vector<int> lambda;
  std::vector<ExactPoly> fs;
  for (int i = 1; i <= s; ++i) {
    std::string Di = "D" + std::to_string(i), Fi = "F" + std::to_string(i) + "q";
    fx.add(leading(fx, "E", i, Di));
    fx.add(leading(fx, "F", f_ranks[i - 1], Fi));
    fx.channels.push_back(channel(Di, Fi, false));
    lambda.push_back(n - i + q[i - 1]);
    // zero locus of L_i -> D_{i-1}^perp / F_{q_i}
    const auto& E = fx.bundle("E").roots;
    std::vector<std::string> prev_dual;
    for (int t = 0; t < i - 1; ++t) prev_dual.push_back(dual_of(E[t]));
    auto Q = without(without(fx.bundle("V").roots, prev_dual), fx.bundle(Fi).roots);
    if (static_cast<int>(Q.size()) != lambda.back()) throw std::logic_error("quotient rank mismatch");
    ExactPoly dl = value_of(fx.vars, dual_of(E[i - 1]), N);
    for (const auto& r : Q) fs.push_back(fgl_sum(value_of(fx.vars, r, N), dl).truncate(N));
  }
  fx.validate();
  ExactPoly lhs = product_trunc(fs, fx.vars, N);
  ExactPoly rhs = specialize(raising_C(lambda, N), fx, N);
  return compare(lhs, rhs, N, "dominant C n=" + std::to_string(n) + " q=(" + join(q) + ") I={" + join(qf.I) + "}");
}

IdentityResult dominant_D(int n, const std::vector<int>& q, const std::vector<int>& I, int N) {
  const int s = static_cast<int>(q.size());
  QuadricFixture qf = make_quadric(n, I);
  RootFixture fx = frame_fixture(qf, Structure::OrthogonalEven);
  std::vector<int> f_ranks;
  for (int i = 1; i <= s; ++i) f_ranks.push_back(n - q[i - 1]);
  check_frame_flags(fx, s, f_ranks);
  std::vector<int> lambda;
  ExactPoly lhs = one(fx.vars);
  for (int i = 1; i <= s; ++i) {
    std::string Di = "D" + std::to_string(i), Fi = "F" + std::to_string(i) + "q";
    fx.add(leading(fx, "E", i, Di));
    fx.add(leading(fx, "F", f_ranks[i - 1], Fi));
    fx.channels.push_back(channel(Di, Fi, true));
    lambda.push_back(n - i + q[i - 1]);
    // zeta_i: basic case on D_{i-1}^perp / D_{i-1}
    lhs = mul_trunc(lhs, basic_pushforward(qf, i - 1, q[i - 1], N), N);
  }
  fx.validate();
  ExactPoly rhs = specialize(raising_D(lambda, N), fx, N);
  return compare(lhs, rhs, N, "dominant D n=" + std::to_string(n) + " q=(" + join(q) + ") I={" + join(qf.I) + "}");
}

}  // namespace

IdentityResult verify_dominant_case(const DominantSpec& spec, int N) {
  check_weakly_decreasing(spec.q);
  switch (spec.type) {
    case LieType::A: return dominant_A(spec.q, N);
    case LieType::C: return dominant_C(spec.n, spec.q, spec.I, N);
    case LieType::D: return dominant_D(spec.n, spec.q, spec.I, N);
    default: throw std::invalid_argument("dominant case is implemented for types A, C and D");
  }
}

// ---- relations ----

IdentityResult verify_relation_lemma(LieType type, int n, int p, int q, const std::vector<int>& I, int N) {
  QuadricFixture qf = make_quadric(n, I);
  const std::string what = "n=" + std::to_string(n) + " p=" + std::to_string(p) + " q=" + std::to_string(q) +
                           " I={" + join(qf.I) + "}";
  if (type == LieType::C) {
    if (p < 1 || q < 1 || p > n + 1 || q > n + 1) throw std::invalid_argument("type C needs 1 <= p, q <= n + 1");
    RootFixture fx = frame_fixture(qf, Structure::Symplectic);
    fx.add(leading(fx, "E", n + 1 - p, "Ep"));
    fx.add(leading(fx, "F", n + 1 - q, "Fq"));
    fx.channels = {channel("Ep", "Fq", false), channel("Ep", "Fq", false)};
    const int l = p + q - 1;
    RaisingExpr r = one_minus_beta_t(1, -l) * one_minus_beta_t(2, -l) * pair_factor(1, 2);
    ExactPoly v = specialize(apply_raising(r, ClassSeries::seed({l, l}), N), fx, N);
    return compare(v, ExactPoly(fx.vars), N, "relation C " + what);
  }
  if (type == LieType::D) {
    if (p < 0 || q < 0 || p > n || q > n) throw std::invalid_argument("type D needs 0 <= p, q <= n");
    RootFixture fx = frame_fixture(qf, Structure::OrthogonalEven);
    fx.add(leading(fx, "E", n - p, "Ep"));
    fx.add(leading(fx, "F", n - q, "Fq"));
    fx.channels = {channel("Ep", "Fq", true), channel("Ep", "Fq", true)};
    const int l = p + q;
    RaisingExpr r = pair_factor(1, 2, true);
    for (int i = 1; i <= 2; ++i) r *= one_minus_beta_t(i, 1 - l, true) * two_minus_beta_t_inv(i, true);
    std::vector<IdentityResult> rs;
    for (auto [signs, label] : {std::pair{std::vector<int>{-1, 1}, "d"}, std::pair{std::vector<int>{1, -1}, "d~"}}) {
      ExactPoly v = specialize(apply_raising(r, d_seed({l, l}, signs), N), fx, N);
      rs.push_back(compare(v, ExactPoly(fx.vars), N, std::string("relation D (") + label + ") " + what));
    }
    return merge(rs);
  }
  throw std::invalid_argument("relation lemma is stated for types C and D");
}

}  // namespace vexloci
