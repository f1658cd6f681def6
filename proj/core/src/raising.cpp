#include "vexloci/raising.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace vexloci {

std::string Factor::text() const {
  std::ostringstream os;
  std::string t = (tilde ? "Tt" : "T") + std::to_string(i);
  std::string r = (tilde ? "dd" : "") + std::string("R") + std::to_string(i) + std::to_string(j);
  switch (kind) {
    case FactorKind::Scalar:
      os << scalar.get_str();
      if (beta_power) os << "*b^" << beta_power;
      if (n) os << "*T" << i << "^" << n;
      break;
    case FactorKind::OneMinusBetaT: os << "(1-b*" << t << ")^" << n; break;
    case FactorKind::TwoMinusBetaTInv: os << "(2-b*" << t << ")^-1"; break;
    case FactorKind::OneMinusR: os << "(1-" << r << ")"; break;
    case FactorKind::OnePlusRInv:
      os << "(1+" << (tilde ? "dd(" : "") << "R" << i << j << "-b*T" << i << (tilde ? ")" : "") << ")^-1";
      break;
  }
  return os.str();
}

RaisingExpr& RaisingExpr::operator*=(const RaisingExpr& o) {
  factors.insert(factors.end(), o.factors.begin(), o.factors.end());
  return *this;
}

bool RaisingExpr::half_integral() const {
  return std::any_of(factors.begin(), factors.end(),
                     [](const Factor& f) { return f.kind == FactorKind::TwoMinusBetaTInv; });
}

int RaisingExpr::max_channel() const {
  int m = 0;
  for (const auto& f : factors) m = std::max({m, f.i, f.j});
  return m;
}

std::string RaisingExpr::text() const {
  if (factors.empty()) return "1";
  std::string s;
  for (const auto& f : factors) {
    if (!s.empty()) s += " ";
    s += f.text();
  }
  return s;
}

RaisingExpr scalar_factor(const Rational& q, int beta_power, int i, int t_power) {
  Factor f;
  f.kind = FactorKind::Scalar;
  f.scalar = q;
  f.beta_power = beta_power;
  f.i = i;
  f.n = t_power;
  return {{f}};
}

RaisingExpr one_minus_beta_t(int i, int n, bool tilde) {
  Factor f;
  f.kind = FactorKind::OneMinusBetaT;
  f.i = i;
  f.n = n;
  f.tilde = tilde;
  return {{f}};
}

RaisingExpr two_minus_beta_t_inv(int i, bool tilde) {
  Factor f;
  f.kind = FactorKind::TwoMinusBetaTInv;
  f.i = i;
  f.tilde = tilde;
  return {{f}};
}

RaisingExpr one_minus_r(int i, int j, bool tilde) {
  Factor f;
  f.kind = FactorKind::OneMinusR;
  f.i = i;
  f.j = j;
  f.tilde = tilde;
  return {{f}};
}

RaisingExpr one_plus_r_minus_beta_t_inv(int i, int j, bool tilde) {
  Factor f;
  f.kind = FactorKind::OnePlusRInv;
  f.i = i;
  f.j = j;
  f.tilde = tilde;
  return {{f}};
}

RaisingExpr pair_factor(int i, int j, bool tilde) {
  return one_minus_r(i, j, tilde) * one_plus_r_minus_beta_t_inv(i, j, tilde);
}

namespace {

struct Prefix {
  std::array<int, kMaxChannels> p{};
  int k = 0;
  explicit Prefix(const Monomial& m) : k(m.channels) {
    int s = 0;
    for (int l = 0; l < k; ++l) p[l] = (s += m.idx[l]);
  }
  // max of P_l over lo <= l < hi; very negative when empty
  int max_over(int lo, int hi) const {
    int best = -(1 << 20);
    for (int l = lo; l < hi; ++l) best = std::max(best, p[l]);
    return best;
  }
};

class Applier {
 public:
  Applier(int channels, int budget) : out_(channels), budget_(budget) {}

  void emit(Monomial m, const Rational& c) { out_.add(m, c); }
  ClassSeries take() { return std::move(out_); }
  int budget() const { return budget_; }

 private:
  ClassSeries out_;
  int budget_;
};

void check_factor(const Factor& f, int channels, const RaisingOptions& opt) {
  auto in_range = [&](int c) { return c >= 1 && c <= channels; };
  switch (f.kind) {
    case FactorKind::Scalar:
      if (f.n != 0 && !in_range(f.i)) throw std::out_of_range("factor channel out of range");
      break;
    case FactorKind::OneMinusBetaT:
    case FactorKind::TwoMinusBetaTInv:
      if (!in_range(f.i)) throw std::out_of_range("factor channel out of range");
      break;
    case FactorKind::OneMinusR:
    case FactorKind::OnePlusRInv:
      if (!in_range(f.i) || !in_range(f.j)) throw std::out_of_range("factor channel out of range");
      if (f.i >= f.j) throw std::invalid_argument("R_ij factors need i < j");
      break;
  }
  if (f.kind == FactorKind::TwoMinusBetaTInv && !opt.allow_half)
    throw std::logic_error("(2 - bT)^{-1} requested in integral mode");
}

ClassSeries apply_factor(const Factor& f, const ClassSeries& s, int budget) {
  Applier out(s.channels(), budget);
  const int k = s.channels();
  const int i0 = f.i - 1, j0 = f.j - 1;
  for (const auto& [m, c] : s.terms()) {
    Prefix P(m);
    if (P.max_over(0, k) > budget) continue;
    auto killed = [&](int ch0) { return f.tilde && m.kind(ch0) == Kind::E; };
    switch (f.kind) {
      case FactorKind::Scalar: {
        Monomial n = m;
        n.beta = static_cast<std::int16_t>(n.beta + f.beta_power);
        if (f.n) n.idx[i0] = static_cast<std::int16_t>(n.idx[i0] + f.n);
        out.emit(n, c * f.scalar);
        break;
      }
      case FactorKind::OneMinusBetaT:
      case FactorKind::TwoMinusBetaTInv: {
        int room = budget - P.max_over(i0, k);
        for (int e = 0; e <= room; ++e) {
          Rational coef;
          if (f.kind == FactorKind::OneMinusBetaT) {
            if (f.n >= 0 && e > f.n) break;
            coef = binom_gen(f.n, e);
            if (e % 2) coef = -coef;
          } else {
            coef = pow2(-(e + 1));
          }
          if (e > 0 && killed(i0)) break;
          Monomial n = m;
          n.beta = static_cast<std::int16_t>(n.beta + e);
          n.idx[i0] = static_cast<std::int16_t>(n.idx[i0] + e);
          out.emit(n, c * coef);
        }
        break;
      }
      case FactorKind::OneMinusR: {
        out.emit(m, c);
        if (killed(i0) || killed(j0)) break;
        if (P.max_over(i0, j0) + 1 > budget) break;
        Monomial n = m;
        ++n.idx[i0];
        --n.idx[j0];
        out.emit(n, -c);
        break;
      }
      case FactorKind::OnePlusRInv: {
        // (b T_i - R_ij)^e = sum_u binom(e,u) (b T_i)^u (-R_ij)^{e-u}
        int room_mid = budget - P.max_over(i0, j0);
        int room_tail = budget - P.max_over(j0, k);
        for (int e = 0; e <= room_mid; ++e) {
          if (e > 0 && (killed(i0) || killed(j0))) break;
          for (int u = 0; u <= e && u <= room_tail; ++u) {
            Rational coef = binom_gen(e, u);
            if ((e - u) % 2) coef = -coef;
            Monomial n = m;
            n.beta = static_cast<std::int16_t>(n.beta + u);
            n.idx[i0] = static_cast<std::int16_t>(n.idx[i0] + e);
            n.idx[j0] = static_cast<std::int16_t>(n.idx[j0] - (e - u));
            out.emit(n, c * coef);
          }
        }
        break;
      }
    }
  }
  return out.take();
}

}  // namespace

ClassSeries apply_raising(const RaisingExpr& expr, const ClassSeries& series, int max_index_sum,
                          const RaisingOptions& options) {
  if (max_index_sum < 0) throw std::invalid_argument("truncation must be non-negative");
  int slack = 0;
  for (const auto& f : expr.factors) {
    check_factor(f, series.channels(), options);
    if (f.kind == FactorKind::Scalar && f.n < 0) slack -= f.n;
  }
  const int budget = max_index_sum + slack;
  ClassSeries cur = series;
  for (const auto& f : expr.factors) {
    cur = apply_factor(f, cur, budget);
    if (!options.deferred_drop) cur = cur.drop_negative();
  }
  return cur.drop_negative().truncate(max_index_sum);
}

}  // namespace vexloci
