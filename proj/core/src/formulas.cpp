#include "vexloci/formulas.hpp"

#include <numeric>
#include <stdexcept>

namespace vexloci {

std::string to_string(Mode m) {
  switch (m) {
    case Mode::Det: return "det";
    case Mode::Pfaffian: return "pfaffian";
    case Mode::Raising: return "raising";
    case Mode::Theta: return "theta";
    case Mode::Eta: return "eta";
  }
  return "?";
}

Mode parse_mode(const std::string& s) {
  if (s == "det") return Mode::Det;
  if (s == "pf" || s == "pfaffian") return Mode::Pfaffian;
  if (s == "raising") return Mode::Raising;
  if (s == "theta") return Mode::Theta;
  if (s == "eta") return Mode::Eta;
  throw std::invalid_argument("unknown mode '" + s + "'");
}

int default_truncation(const std::vector<int>& lambda) {
  return std::accumulate(lambda.begin(), lambda.end(), 0) + 4;
}

namespace {

struct Sym {
  int channel;  // 1-based
  int index;
  Kind kind = Kind::C;
};

Monomial make_mono(int k, int beta, const std::vector<Sym>& syms) {
  Monomial m;
  m.channels = static_cast<std::uint8_t>(k);
  m.beta = static_cast<std::int16_t>(beta);
  for (const auto& s : syms) {
    m.idx[s.channel - 1] = static_cast<std::int16_t>(s.index);
    m.set_kind(s.channel - 1, s.kind);
  }
  return m;
}

int channel_count(const std::vector<int>& lambda) {
  int k = static_cast<int>(lambda.size());
  if (k < 1 || k > kMaxChannels) throw std::invalid_argument("need 1.." + std::to_string(kMaxChannels) + " parts");
  for (int l : lambda)
    if (l < 0) throw std::invalid_argument("negative part");
  return k;
}

ClassSeries seed_of(const std::vector<int>& lambda) { return ClassSeries::seed(lambda); }

// c_{lambda_i}(i) c_{lambda_j}(j) with c_0 elsewhere
ClassSeries seed_pair(int k, int i, int li, int j, int lj) {
  ClassSeries s(k);
  s.add(make_mono(k, 0, {{i, li}, {j, lj}}), 1);
  return s;
}

ClassSeries seed_single(int k, int j, int lj) {
  ClassSeries s(k);
  s.add(make_mono(k, 0, {{j, lj}}), 1);
  return s;
}

// (c_l + sign * e_l) on one channel
ClassSeries seed_d_single(int k, int j, int lj, int sign) {
  ClassSeries s(k);
  s.add(make_mono(k, 0, {{j, lj}}), 1);
  if (sign) s.add(make_mono(k, 0, {{j, lj, Kind::E}}), sign);
  return s;
}

// Skew matrix frame: rows are channels 1..k, plus row 0 when k is odd.
struct SkewFrame {
  int k;
  bool augmented;
  int size() const { return k + (augmented ? 1 : 0); }
  int channel(int row) const { return augmented ? row : row + 1; }  // 0 = augmentation
};

SeriesMatrix skew_matrix(int k) {
  SkewFrame f{k, k % 2 == 1};
  SeriesMatrix m(f.size(), k, Symmetry::Skew);
  for (int r = 0; r < f.size(); ++r)
    if (f.channel(r) > 0) m.set_owned(r, {f.channel(r)});
  return m;
}

template <class Entry, class Aug>
SeriesMatrix fill_skew(int k, Entry entry, Aug aug) {
  SkewFrame f{k, k % 2 == 1};
  SeriesMatrix m = skew_matrix(k);
  for (int a = 0; a < f.size(); ++a)
    for (int b = a + 1; b < f.size(); ++b) {
      int i = f.channel(a), j = f.channel(b);
      m.at(a, b) = i == 0 ? aug(j) : entry(i, j);
    }
  return m;
}

}  // namespace

RaisingExpr pf_entry_operator(LieType type, const std::vector<int>& lambda, int i, int j, const PfOptions& opt) {
  if (type == LieType::A) throw std::invalid_argument("type A has no Pfaffian entries");
  const int k = channel_count(lambda);
  if (i < 0 || i >= j || j > k) throw std::invalid_argument("entry needs 0 <= i < j <= k");
  const bool half = type != LieType::C;
  const bool tilde = type == LieType::D;
  const int extra = half ? 1 : 0;
  const bool display = opt.normalization == PfNormalization::Display;
  // diagonal factor on channel c; `row` marks the smaller index of a pair
  auto scale = [&](int c, bool row) {
    int n = display ? -lambda[c - 1] + extra + (row ? 1 : 0) : k - c - lambda[c - 1] + extra;
    RaisingExpr r = one_minus_beta_t(c, n, tilde);
    if (half) r *= two_minus_beta_t_inv(c, tilde);
    return r;
  };
  if (i == 0) return scale(j, false);
  return pair_factor(i, j, tilde) * scale(i, true) * scale(j, false);
}

int augmented_e_sign(const PfOptions& opt, int k) {
  const int sigma = k % 2 ? -1 : 1;
  return opt.augmented_e_sign.value_or(opt.normalization == PfNormalization::Display ? 1 : sigma);
}

namespace {

// Pfaffian matrix shared by types C, B, D.
SeriesMatrix pf_matrix(LieType type, const std::vector<int>& lambda, int N, const PfOptions& opt) {
  const int k = channel_count(lambda);
  const bool tilde = type == LieType::D;
  const int sigma = k % 2 ? -1 : 1;
  const int aug_sign = augmented_e_sign(opt, k);
  return fill_skew(
      k,
      [&](int i, int j) {
        RaisingExpr r = pf_entry_operator(type, lambda, i, j, opt);
        if (!tilde) return apply_raising(r, seed_pair(k, i, lambda[i - 1], j, lambda[j - 1]), N);
        std::vector<int> signs(k, 0), lam(k, 0);
        signs[i - 1] = -sigma;
        signs[j - 1] = sigma;
        lam[i - 1] = lambda[i - 1];
        lam[j - 1] = lambda[j - 1];
        return apply_raising(r, d_seed(lam, signs), N);
      },
      [&](int j) {
        return apply_raising(pf_entry_operator(type, lambda, 0, j, opt),
                             seed_d_single(k, j, lambda[j - 1], tilde ? aug_sign : 0), N);
      });
}

}  // namespace

SeriesMatrix matrix_C(const std::vector<int>& lambda, int N, const PfOptions& opt) {
  return pf_matrix(LieType::C, lambda, N, opt);
}
SeriesMatrix matrix_B(const std::vector<int>& lambda, int N, const PfOptions& opt) {
  return pf_matrix(LieType::B, lambda, N, opt);
}
SeriesMatrix matrix_D(const std::vector<int>& lambda, int N, const PfOptions& opt) {
  return pf_matrix(LieType::D, lambda, N, opt);
}

// ---- type A ----

SeriesMatrix matrix_A(const std::vector<int>& lambda, int N) {
  const int k = channel_count(lambda);
  SeriesMatrix m(k, k, Symmetry::General);
  for (int i = 1; i <= k; ++i) {
    m.set_owned(i - 1, {i});
    const int li = lambda[i - 1];
    for (int j = 1; j <= k; ++j) {
      ClassSeries e(k);
      for (int mm = 0;; ++mm) {
        int idx = li - i + j + mm;
        if (idx > N) break;
        if (idx < 0) continue;
        e.add(make_mono(k, mm, {{i, idx}}), binom_gen(li + mm - 1, mm));
      }
      m.at(i - 1, j - 1) = e;
    }
  }
  return m;
}

ClassSeries det_A(const std::vector<int>& lambda, int N) { return det_of(matrix_A(lambda, N), N); }

RaisingExpr raising_expr_A(const std::vector<int>& lambda) {
  const int k = channel_count(lambda);
  RaisingExpr r;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) r *= one_minus_r(i, j);
  for (int i = 1; i <= k; ++i) r *= one_minus_beta_t(i, -lambda[i - 1]);
  return r;
}

ClassSeries raising_A(const std::vector<int>& lambda, int N) {
  return apply_raising(raising_expr_A(lambda), seed_of(lambda), N);
}

SeriesMatrix matrix_A_segre(const std::vector<int>& lambda, int N) {
  const int k = channel_count(lambda);
  SeriesMatrix m(k, k, Symmetry::General);
  for (int i = 1; i <= k; ++i) {
    m.set_owned(i - 1, {i});
    const int li = lambda[i - 1];
    for (int j = 1; j <= k; ++j) {
      // sum_m binom(i-j, m) b^m c'_{li-i+j+m}(i), with c' still Laurent
      ClassSeries e(k);
      for (int mm = 0;; ++mm) {
        int idx = li - i + j + mm;
        if (idx > N) break;
        Rational coef = binom_gen(i - j, mm);
        if (coef == 0) break;
        e.add(make_mono(k, mm, {{i, idx}}), coef);
      }
      m.at(i - 1, j - 1) = segre_convert(e, i, N).drop_negative();
    }
  }
  return m;
}

ClassSeries himn_A(const std::vector<int>& lambda, int N) { return det_of(matrix_A_segre(lambda, N), N); }

// ---- type C ----

RaisingExpr r_k(int k, bool tilde) {
  RaisingExpr r;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) r *= pair_factor(i, j, tilde);
  for (int i = 1; i < k; ++i) r *= one_minus_beta_t(i, k - i, tilde);
  return r;
}

ClassSeries entry_operator_C(int i, int j, const std::vector<int>& lambda, int N) {
  const int k = channel_count(lambda);
  if (i < 1 || i >= j || j > k) throw std::invalid_argument("entry needs 1 <= i < j <= k");
  RaisingExpr r = pair_factor(i, j) * one_minus_beta_t(i, -lambda[i - 1] + 1) * one_minus_beta_t(j, -lambda[j - 1]);
  return apply_raising(r, seed_pair(k, i, lambda[i - 1], j, lambda[j - 1]), N);
}

ClassSeries entry_expanded_C(int i, int j, const std::vector<int>& lambda, int N) {
  const int k = channel_count(lambda);
  if (i < 1 || i >= j || j > k) throw std::invalid_argument("entry needs 1 <= i < j <= k");
  const int li = lambda[i - 1], lj = lambda[j - 1];
  ClassSeries out(k);
  // Negative indices on channel j are kept while a later T_j could still
  // lift them within the truncation.
  auto put = [&](int beta, int a, int b, const Rational& coef) {
    int sum = a + b;
    if (sum > N || b + (N - sum) < 0) return false;
    out.add(make_mono(k, beta, {{i, a}, {j, b}}), coef);
    return true;
  };
  for (int m = 0; li + m + lj <= N; ++m) put(m, li + m, lj, 1);
  for (int m = 0; li + lj + m <= N; ++m)
    for (int l = 1; li + l + m <= N; ++l) {
      Rational coef = binom_gen(l + m - 1, m) + binom_gen(l + m, m);
      if (l % 2) coef = -coef;
      put(m, li + l + m, lj - l, coef);
    }
  return out;
}

ClassSeries pf_C(const std::vector<int>& lambda, int N, const PfOptions& opt) {
  return pf_of(matrix_C(lambda, N, opt), N);
}

ClassSeries raising_C(const std::vector<int>& lambda, int N) {
  const int k = channel_count(lambda);
  RaisingExpr r = r_k(k);
  for (int i = 1; i <= k; ++i) r *= one_minus_beta_t(i, -lambda[i - 1]);
  return apply_raising(r, seed_of(lambda), N);
}

// ---- type B ----

ClassSeries pf_B(const std::vector<int>& lambda, int N, const PfOptions& opt) {
  return pf_of(matrix_B(lambda, N, opt), N);
}

ClassSeries raising_B(const std::vector<int>& lambda, int N) {
  const int k = channel_count(lambda);
  RaisingExpr r = r_k(k);
  for (int i = 1; i <= k; ++i) r *= one_minus_beta_t(i, 1 - lambda[i - 1]) * two_minus_beta_t_inv(i);
  return apply_raising(r, seed_of(lambda), N);
}

// ---- type D ----

ClassSeries d_seed(const std::vector<int>& lambda, const std::vector<int>& signs) {
  const int k = channel_count(lambda);
  if (signs.size() != lambda.size()) throw std::invalid_argument("d_seed: sign count");
  ClassSeries out(k);
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    int coef = 1;
    std::vector<Sym> syms;
    for (int i = 0; i < k; ++i) {
      bool e = mask >> i & 1u;
      if (e) coef *= signs[i];
      syms.push_back({i + 1, lambda[i], e ? Kind::E : Kind::C});
    }
    if (coef) out.add(make_mono(k, 0, syms), coef);
  }
  return out;
}

ClassSeries pf_D(const std::vector<int>& lambda, int N, const PfOptions& opt) {
  return pf_of(matrix_D(lambda, N, opt), N);
}

ClassSeries raising_D(const std::vector<int>& lambda, int N) {
  const int k = channel_count(lambda);
  RaisingExpr r = r_k(k, true);
  std::vector<int> signs(k);
  for (int i = 1; i <= k; ++i) {
    r *= one_minus_beta_t(i, 1 - lambda[i - 1], true) * two_minus_beta_t_inv(i, true);
    signs[i - 1] = i % 2 ? -1 : 1;
  }
  return apply_raising(r, d_seed(lambda, signs), N);
}

// ---- classical matrices ----

ClassSeries classical_A(const std::vector<int>& lambda) {
  const int k = channel_count(lambda);
  SeriesMatrix m(k, k, Symmetry::General);
  for (int i = 1; i <= k; ++i) {
    m.set_owned(i - 1, {i});
    for (int j = 1; j <= k; ++j) {
      int idx = lambda[i - 1] - i + j;
      ClassSeries e(k);
      if (idx >= 0) e.add(make_mono(k, 0, {{i, idx}}), 1);
      m.at(i - 1, j - 1) = e;
    }
  }
  int total = std::accumulate(lambda.begin(), lambda.end(), 0);
  return det_of(m, total);
}

ClassSeries classical_pf(LieType type, const std::vector<int>& lambda, int augmented_e_sign) {
  if (type == LieType::A) return classical_A(lambda);
  const int k = channel_count(lambda);
  const int sigma = k % 2 ? -1 : 1;
  const Rational half = type == LieType::C ? Rational(1) : Rational(1, 2);
  auto entry = [&](int i, int j) {
    const int li = lambda[i - 1], lj = lambda[j - 1];
    ClassSeries e(k);
    if (type == LieType::D) {
      std::vector<int> signs(k, 0), lam(k, 0);
      signs[i - 1] = -sigma;
      signs[j - 1] = sigma;
      lam[i - 1] = li;
      lam[j - 1] = lj;
      e += d_seed(lam, signs);
    } else {
      e.add(make_mono(k, 0, {{i, li}, {j, lj}}), 1);
    }
    for (int l = 1; l <= lj; ++l) e.add(make_mono(k, 0, {{i, li + l}, {j, lj - l}}), l % 2 ? -2 : 2);
    return e * (half * half);
  };
  auto aug = [&](int j) {
    return (type == LieType::D ? seed_d_single(k, j, lambda[j - 1], augmented_e_sign) : seed_single(k, j, lambda[j - 1])) * half;
  };
  int total = std::accumulate(lambda.begin(), lambda.end(), 0);
  return pf_of(fill_skew(k, entry, aug), total);
}

// ---- triple-level constructors ----

namespace {

ShapeData shape_for(const Triple& t, std::initializer_list<LieType> types, bool extended) {
  bool ok = false;
  for (auto ty : types) ok = ok || t.type == ty;
  if (!ok) throw std::invalid_argument("constructor does not accept type " + to_string(t.type));
  if (t.extended != extended)
    throw std::invalid_argument(extended ? "constructor needs an extended triple" : "constructor needs a plain triple");
  return shape_of(t);
}

FormulaOutput wrap(const Triple& t, ShapeData shape, Mode mode, ClassSeries s, int N, bool half) {
  FormulaOutput out;
  out.series = std::move(s);
  out.shape = std::move(shape);
  out.type = t.type;
  out.mode = mode;
  out.half_integral = half;
  out.truncation = N;
  return out;
}

}  // namespace

FormulaOutput classA_det(const Triple& t, int N) {
  auto sh = shape_for(t, {LieType::A}, false);
  return wrap(t, sh, Mode::Det, det_A(sh.lambda, N), N, false);
}

FormulaOutput classA_raising(const Triple& t, int N) {
  auto sh = shape_for(t, {LieType::A}, false);
  return wrap(t, sh, Mode::Raising, raising_A(sh.lambda, N), N, false);
}

FormulaOutput classA_himn(const Triple& t, int N) {
  auto sh = shape_for(t, {LieType::A}, false);
  return wrap(t, sh, Mode::Det, himn_A(sh.lambda, N), N, false);
}

FormulaOutput classC_pf(const Triple& t, int N, const PfOptions& opt) {
  auto sh = shape_for(t, {LieType::C}, false);
  return wrap(t, sh, Mode::Pfaffian, pf_C(sh.lambda, N, opt), N, false);
}

FormulaOutput classC_raising(const Triple& t, int N) {
  auto sh = shape_for(t, {LieType::C}, false);
  return wrap(t, sh, Mode::Raising, raising_C(sh.lambda, N), N, false);
}

FormulaOutput classB_pf(const Triple& t, int N, const PfOptions& opt) {
  auto sh = shape_for(t, {LieType::B}, false);
  return wrap(t, sh, Mode::Pfaffian, pf_B(sh.lambda, N, opt), N, true);
}

FormulaOutput classB_raising(const Triple& t, int N) {
  auto sh = shape_for(t, {LieType::B}, false);
  return wrap(t, sh, Mode::Raising, raising_B(sh.lambda, N), N, true);
}

FormulaOutput classD_pf(const Triple& t, int N, const PfOptions& opt) {
  auto sh = shape_for(t, {LieType::D}, false);
  return wrap(t, sh, Mode::Pfaffian, pf_D(sh.lambda, N, opt), N, true);
}

FormulaOutput classD_raising(const Triple& t, int N) {
  auto sh = shape_for(t, {LieType::D}, false);
  return wrap(t, sh, Mode::Raising, raising_D(sh.lambda, N), N, true);
}

FormulaOutput classC5(const Triple& t, int N) {
  auto sh = shape_for(t, {LieType::C}, true);
  return wrap(t, sh, Mode::Theta, theta_series(sh.rho, sh.lambda, N), N, false);
}

FormulaOutput classB5(const Triple& t, int N) {
  auto sh = shape_for(t, {LieType::B}, true);
  return wrap(t, sh, Mode::Theta, theta_B_series(sh.rho, sh.lambda, sh.distinguished, N), N, true);
}

FormulaOutput classD5(const Triple& t, int N) {
  auto sh = shape_for(t, {LieType::D}, true);
  return wrap(t, sh, Mode::Eta, eta_series(sh.rho, sh.lambda, sh.distinguished, N), N, true);
}

FormulaOutput class_of(const Triple& t, int N, const PfOptions& opt) {
  if (t.extended) {
    switch (t.type) {
      case LieType::C: return classC5(t, N);
      case LieType::B: return classB5(t, N);
      case LieType::D: return classD5(t, N);
      case LieType::A: break;
    }
    throw std::invalid_argument("type A has no extended triples");
  }
  switch (t.type) {
    case LieType::A: return classA_det(t, N);
    case LieType::C: return classC_pf(t, N, opt);
    case LieType::B: return classB_pf(t, N, opt);
    case LieType::D: return classD_pf(t, N, opt);
  }
  throw std::logic_error("unknown type");
}

FormulaOutput raising_of(const Triple& t, int N) {
  if (t.extended) {
    FormulaOutput out = class_of(t, N);
    const auto& sh = out.shape;
    switch (t.type) {
      case LieType::C: out.series = theta_series(sh.rho, sh.lambda, N, RhoForm::Factored, sh.distinguished); break;
      case LieType::B:
        out.series = theta_B_series(sh.rho, sh.lambda, sh.distinguished, N, RhoForm::Factored);
        break;
      case LieType::D: out.series = eta_series(sh.rho, sh.lambda, sh.distinguished, N, RhoForm::Factored); break;
      case LieType::A: break;
    }
    return out;
  }
  switch (t.type) {
    case LieType::A: return classA_raising(t, N);
    case LieType::C: return classC_raising(t, N);
    case LieType::B: return classB_raising(t, N);
    case LieType::D: return classD_raising(t, N);
  }
  throw std::logic_error("unknown type");
}

}  // namespace vexloci
