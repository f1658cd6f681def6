#pragma once

#include <string>
#include <vector>

#include "vexloci/series.hpp"

namespace vexloci {

enum class FactorKind {
  Scalar,          // q * b^m * T_i^n, n may be negative
  OneMinusBetaT,   // (1 - b T_i)^n
  TwoMinusBetaTInv,// (2 - b T_i)^{-1}
  OneMinusR,       // 1 - R_ij
  OnePlusRInv,     // (1 + R_ij - b T_i)^{-1}
};

// Channels are 1-based. `tilde` attaches delta operators: T_i becomes
// delta_i T_i and R_ij becomes delta_i delta_j R_ij.
struct Factor {
  FactorKind kind = FactorKind::Scalar;
  int i = 0;
  int j = 0;
  int n = 0;
  int beta_power = 0;
  Rational scalar = 1;
  bool tilde = false;

  std::string text() const;
};

struct RaisingExpr {
  std::vector<Factor> factors;

  static RaisingExpr identity() { return {}; }
  RaisingExpr& operator*=(const RaisingExpr& o);
  friend RaisingExpr operator*(RaisingExpr a, const RaisingExpr& b) { return a *= b; }

  bool half_integral() const;
  int max_channel() const;
  std::string text() const;
};

RaisingExpr scalar_factor(const Rational& q, int beta_power = 0, int i = 0, int t_power = 0);
RaisingExpr one_minus_beta_t(int i, int n, bool tilde = false);
RaisingExpr two_minus_beta_t_inv(int i, bool tilde = false);
RaisingExpr one_minus_r(int i, int j, bool tilde = false);
RaisingExpr one_plus_r_minus_beta_t_inv(int i, int j, bool tilde = false);
// (1 - R_ij) / (1 + R_ij - b T_i)
RaisingExpr pair_factor(int i, int j, bool tilde = false);

struct RaisingOptions {
  bool allow_half = true;
  // Drop negative indices only at the end. Turning this off applies the
  // c_m = 0 (m < 0) rule after every factor.
  bool deferred_drop = true;
};

// Applies every factor to the series and truncates at index sum N.
ClassSeries apply_raising(const RaisingExpr& expr, const ClassSeries& series, int max_index_sum,
                          const RaisingOptions& options = {});

}  // namespace vexloci
