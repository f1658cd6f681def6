#include "vexloci/giambelli.hpp"

#include <functional>
#include <stdexcept>

#include "vexloci/fixture.hpp"
#include "vexloci/fraction.hpp"

namespace vexloci {

namespace {

using PolyMatrix = std::vector<std::vector<ExactPoly>>;  // upper triangle used

ExactPoly pf_poly(const PolyMatrix& m, std::vector<int> rows, int N) {
  if (rows.empty()) return ExactPoly::constant(m[0][0].vars(), 1);
  const int a = rows[0];
  ExactPoly out(m[0][0].vars());
  for (std::size_t t = 1; t < rows.size(); ++t) {
    std::vector<int> rest;
    for (std::size_t u = 1; u < rows.size(); ++u)
      if (u != t) rest.push_back(rows[u]);
    ExactPoly term = mul_trunc(m[a][rows[t]], pf_poly(m, rest, N), N);
    if (t % 2 == 0) out -= term;
    else out += term;
  }
  return out;
}

struct Classes {
  std::vector<ExactPoly> c;  // c(W^* - W)_0..N
  ExactPoly cw;              // c(W^*; b)
  ExactPoly b;
};

Classes classes_of(const GiambelliInput& in, int N) {
  if (in.r < 0 || in.corank() < 1) throw std::invalid_argument("Giambelli loci need 0 <= r < n");
  Classes k;
  k.b = ExactPoly::beta(in.vars);
  std::vector<ExactPoly> w, wd;
  k.cw = ExactPoly::constant(in.vars, 1);
  for (const auto& name : in.W) {
    Root r = parse_root(*in.vars, name);
    w.push_back(root_value(in.vars, r, N));
    r.dual = !r.dual;
    wd.push_back(root_value(in.vars, r, N));
    k.cw = mul_trunc(k.cw, ExactPoly::constant(in.vars, 1) + k.b * wd.back(), N);
  }
  k.c = chern_of_virtual(in.vars, wd, w, N);
  return k;
}

ExactPoly c_at(const Classes& k, int m) {
  if (m < 0 || m >= static_cast<int>(k.c.size())) return ExactPoly(k.b.vars());
  return k.c[m];
}

// sum_{l>0} sum_{m>=0} (-1)^l (binom(l+m-1, m) + binom(l+m, m)) b^m cp(li+l+m) cp(lj-l),
// cut where cp(li+l+m) passes the bound
ExactPoly tail_sum(const std::function<ExactPoly(int)>& cp, int li, int lj, int N, const ExactPoly& b,
                   bool skew_last) {
  ExactPoly out(b.vars());
  for (int l = 1; li + l <= N; ++l)
    for (int m = 0; li + l + m <= N; ++m) {
      Rational coef = binom_gen(l + m - 1, m) + binom_gen(l + m, m);
      if (skew_last) {
        // (-1/2)^l b^{l+m}, paired with c'_{li+l+m} alone
        coef *= pow2(-l);
        if (l % 2) coef = -coef;
        out += mul_trunc(pow_trunc(b, static_cast<unsigned>(l + m), N) * coef, cp(li + l + m), N);
      } else {
        if (l % 2) coef = -coef;
        out += mul_trunc(pow_trunc(b, static_cast<unsigned>(m), N) * coef, mul_trunc(cp(li + l + m), cp(lj - l), N), N);
      }
    }
  return out;
}

// c'_{li} c'_{lj} + sum_{m>0} b^m c'_{li+m} c'_{lj} + tail
ExactPoly entry(const std::function<ExactPoly(int)>& cp, int li, int lj, int N, const ExactPoly& b) {
  ExactPoly out = mul_trunc(cp(li), cp(lj), N);
  for (int m = 1; li + m <= N; ++m)
    out += mul_trunc(pow_trunc(b, static_cast<unsigned>(m), N), mul_trunc(cp(li + m), cp(lj), N), N);
  return out + tail_sum(cp, li, lj, N, b, false);
}

// Bordered when odd: row 0 is the border, rows 1..s the conditions.
ExactPoly pfaffian_with_border(const PolyMatrix& m, int s, int N) {
  std::vector<int> rows;
  for (int i = (s % 2 ? 0 : 1); i <= s; ++i) rows.push_back(i);
  return pf_poly(m, rows, N);
}

}  // namespace

ExactPoly giambelli_sym(const GiambelliInput& in, int N) {
  Classes k = classes_of(in, N);
  auto cp = [&](int m) {
    // c'_m = sum_{j >= max(0, m)} b^{j-m} c_j
    ExactPoly out(k.b.vars());
    for (int j = std::max(0, m); j <= N; ++j)
      out += mul_trunc(pow_trunc(k.b, static_cast<unsigned>(j - m), N), c_at(k, j), N);
    return out;
  };
  const int s = in.corank();
  std::vector<int> lambda(s + 1, 0);
  for (int i = 1; i <= s; ++i) lambda[i] = s + 1 - i;
  PolyMatrix m(s + 1, std::vector<ExactPoly>(s + 1, ExactPoly(in.vars)));
  for (int j = 1; j <= s; ++j) m[0][j] = cp(lambda[j]);
  for (int i = 1; i <= s; ++i)
    for (int j = i + 1; j <= s; ++j) m[i][j] = entry(cp, lambda[i], lambda[j], N, k.b);
  return pfaffian_with_border(m, s, N);
}

ExactPoly giambelli_skew(const GiambelliInput& in, int N) {
  Classes k = classes_of(in, N);
  const ExactPoly two = ExactPoly::constant(in.vars, 2);
  auto cp = [&](int m) {
    if (m < 0) return pow_trunc(k.b * Rational(1, 2), static_cast<unsigned>(-m), N) * k.cw * Rational(-1);
    if (m == 0) return two - k.cw;
    // c'_m = c_m - sum_{t>0} 2^{-t} b^t c_{m+t}
    ExactPoly out = c_at(k, m);
    for (int t = 1; m + t <= N; ++t)
      out -= mul_trunc(pow_trunc(k.b, static_cast<unsigned>(t), N) * pow2(-t), c_at(k, m + t), N);
    return out;
  };
  const int s = in.corank();
  std::vector<int> lambda(s + 1, 0);
  for (int i = 1; i <= s; ++i) lambda[i] = s - i;
  PolyMatrix m(s + 1, std::vector<ExactPoly>(s + 1, ExactPoly(in.vars)));
  for (int j = 1; j < s; ++j) m[0][j] = cp(lambda[j]);
  m[0][s] = two;
  for (int i = 1; i < s; ++i) {
    for (int j = i + 1; j < s; ++j) m[i][j] = entry(cp, lambda[i], lambda[j], N, k.b);
    // (2 - c(W^*;b)) sum_m (b/2)^m c_{li+m} + c(W^*;b) c'_{li} - c(W^*;b) tail
    ExactPoly half_series(in.vars);
    for (int t = 0; lambda[i] + t <= N; ++t)
      half_series += mul_trunc(pow_trunc(k.b * Rational(1, 2), static_cast<unsigned>(t), N), c_at(k, lambda[i] + t), N);
    ExactPoly last = mul_trunc(two - k.cw, half_series, N) + mul_trunc(k.cw, cp(lambda[i]), N);
    last -= mul_trunc(k.cw, tail_sum(cp, lambda[i], 0, N, k.b, true), N);
    m[i][s] = last;
  }
  return pfaffian_with_border(m, s, N) * pow2(-s);
}

Triple giambelli_triple(LieType type, int corank) {
  if (corank < 1) throw std::invalid_argument("corank must be positive");
  if (type == LieType::C) return Triple{LieType::C, {corank}, {1}, {1}, false};
  if (type == LieType::D) return Triple{LieType::D, {corank}, {0}, {0}, false};
  throw std::invalid_argument("Giambelli loci are type C (symmetric) or D (skew)");
}

ExactPoly giambelli_reference(LieType type, const GiambelliInput& in, int N, Mode mode, const PfOptions& opt) {
  Classes k = classes_of(in, N);
  Triple t = giambelli_triple(type, in.corank());
  FormulaOutput f;
  if (mode == Mode::Pfaffian) f = type == LieType::C ? classC_pf(t, N, opt) : classD_pf(t, N, opt);
  else if (mode == Mode::Raising) f = type == LieType::C ? classC_raising(t, N) : classD_raising(t, N);
  else throw std::invalid_argument("Giambelli reference is a Pfaffian or raising form");
  Specialization sp;
  sp.vars = in.vars;
  sp.max_root_degree = N;
  for (int i = 0; i < t.rank(); ++i) {
    ChannelClasses cc;
    cc.c = k.c;
    if (type == LieType::D) {
      cc.e = in.corank() % 2 ? -k.cw : k.cw;
      cc.e_index = 0;
    }
    sp.channels.push_back(std::move(cc));
  }
  return specialize(f.series, sp);
}

IdentityResult verify_giambelli(LieType type, const GiambelliInput& in, int N, const PfOptions& opt) {
  ExactPoly lhs = type == LieType::C ? giambelli_sym(in, N) : giambelli_skew(in, N);
  ExactPoly rhs = giambelli_reference(type, in, N, Mode::Pfaffian, opt);
  std::string what = std::string(type == LieType::C ? "symmetric" : "skew") + " n=" + std::to_string(in.n()) +
                     " r=" + std::to_string(in.r);
  std::string d = first_difference(lhs.truncate(N), rhs.truncate(N));
  if (d.empty()) return {true, what};
  return {false, what + ": differ at " + d};
}

GiambelliInput giambelli_input(int n, int r) {
  GiambelliInput in;
  for (int j = 1; j <= n; ++j) in.W.push_back("w" + std::to_string(j));
  in.vars = make_root_vars(in.W);
  in.r = r;
  return in;
}

}  // namespace vexloci
